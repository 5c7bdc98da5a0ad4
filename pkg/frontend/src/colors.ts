// Color conventions shared by the three views.

/** Index-map bars: red marks frequent phrases, yellow rare ones. */
export function hueToCss(hue: number): string {
  return `hsl(${Math.round(hue)}, 85%, 52%)`;
}

export type CellKind = "correct" | "alternate" | "incorrect" | "assigned" | "plain";

export const CELL_COLORS: Record<CellKind, string> = {
  correct: "#2e7d32", // green: chosen chapter confirmed by ground truth
  alternate: "#f9a825", // yellow: another valid chapter, not the one chosen
  incorrect: "#c62828", // red: chosen chapter contradicts ground truth
  assigned: "#1565c0", // blue outline style when no ground truth exists
  plain: "",
};

/**
 * Classify one heatmap cell.  The chosen (argmax) cell is green when the
 * truth set contains it and red when it does not; unchosen members of the
 * truth set are yellow; everything else is background shading.
 */
export function cellKind(
  chapterId: number,
  assignedChapter: number,
  truth: number[] | null,
): CellKind {
  const isAssigned = chapterId === assignedChapter;
  if (truth === null) {
    return isAssigned ? "assigned" : "plain";
  }
  const isValid = truth.includes(chapterId);
  if (isAssigned) {
    return isValid ? "correct" : "incorrect";
  }
  return isValid ? "alternate" : "plain";
}

/** Background shading for unclassified cells, scaled by score. */
export function scoreShade(score: number, maxScore: number): string {
  if (maxScore <= 0 || score <= 0) return "transparent";
  const strength = Math.min(1, score / maxScore);
  return `rgba(21, 101, 192, ${(0.12 + 0.5 * strength).toFixed(3)})`;
}
