import { CELL_COLORS, cellKind, scoreShade } from "./colors.js";
import { ChapterMatchPayload } from "./types.js";
import { VNode, h } from "./vdom.js";

/**
 * Chapters as columns, lectures as rows.  With ground truth the chosen cell
 * turns green or red and alternate valid chapters yellow; without it the
 * chosen cell is outlined and the rest shaded by score.
 */
export function renderChapterMatch(payload: ChapterMatchPayload): VNode {
  const maxScore = Math.max(0, ...payload.scores.flat());
  const headRow = h(
    "tr",
    {},
    h("th", {}, "lecture"),
    ...payload.chapters.map((cid) => h("th", {}, `ch ${cid}`)),
  );
  const rows = payload.lectures.map((lid, i) => {
    const truth = payload.groundtruth ? payload.groundtruth[i] : null;
    const assigned = payload.assignments[i];
    const cells = payload.chapters.map((cid, j) => {
      const score = payload.scores[i][j];
      const kind = cellKind(cid, assigned, truth);
      const color = CELL_COLORS[kind];
      const style =
        kind === "plain"
          ? `background:${scoreShade(score, maxScore)}`
          : kind === "assigned"
            ? `outline:2px solid ${color};outline-offset:-2px;background:${scoreShade(score, maxScore)}`
            : `background:${color};color:#fff`;
      return h(
        "td",
        {
          class: `cm-cell cm-${kind}`,
          "data-kind": kind,
          title: `lecture ${lid} × chapter ${cid}: score ${score.toFixed(3)}`,
          style,
        },
        score > 0 ? score.toFixed(1) : "",
      );
    });
    const flag = payload.no_signal[i] ? " (no signal)" : "";
    return h("tr", {}, h("th", {}, `${lid}${flag}`), ...cells);
  });
  const caption =
    payload.accuracy === null
      ? `mode ${payload.mode}, zoom ${payload.zoom}`
      : `mode ${payload.mode}, zoom ${payload.zoom} — accuracy ${(payload.accuracy * 100).toFixed(0)}%`;
  return h(
    "div",
    { class: "chaptermatch" },
    h("div", { class: "cm-caption" }, caption),
    h("table", { class: "cm-table" }, headRow, ...rows),
  );
}

export function renderChapterMatchUnavailable(): VNode {
  return h(
    "div",
    { class: "notice" },
    "this corpus has no chapter files, so chapter matching is disabled",
  );
}
