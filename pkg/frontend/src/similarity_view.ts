import { SimilarityPayload } from "./types.js";
import { VNode, h } from "./vdom.js";

const SIZE = 560;
const MARGIN = 40;

export interface ProjectedNode {
  lecture: number;
  px: number;
  py: number;
}

/** Scale embedding coordinates into the viewport, preserving aspect. */
export function projectNodes(payload: SimilarityPayload): ProjectedNode[] {
  const xs = payload.nodes.map((n) => n.x);
  const ys = payload.nodes.map((n) => n.y);
  const extent = Math.max(
    Math.max(...xs) - Math.min(...xs),
    Math.max(...ys) - Math.min(...ys),
  );
  const center = SIZE / 2;
  if (extent === 0) {
    return payload.nodes.map((n) => ({ lecture: n.lecture, px: center, py: center }));
  }
  const scale = (SIZE - 2 * MARGIN) / extent;
  const midX = (Math.max(...xs) + Math.min(...xs)) / 2;
  const midY = (Math.max(...ys) + Math.min(...ys)) / 2;
  return payload.nodes.map((n) => ({
    lecture: n.lecture,
    px: center + (n.x - midX) * scale,
    py: center - (n.y - midY) * scale,
  }));
}

export function renderSimilarity(payload: SimilarityPayload | null): VNode {
  if (payload === null || payload.nodes.length === 0) {
    return h("div", { class: "notice" }, "select one or more phrases to build the similarity graph");
  }
  const projected = projectNodes(payload);
  const byLecture = new Map(projected.map((p) => [p.lecture, p]));
  const edges = payload.edges.map((edge) => {
    const a = byLecture.get(edge.i)!;
    const b = byLecture.get(edge.j)!;
    return h("line", {
      x1: a.px,
      y1: a.py,
      x2: b.px,
      y2: b.py,
      class: `edge-${edge.strength}`,
      "data-strength": edge.strength,
    });
  });
  const nodes = projected.map((p) =>
    h(
      "g",
      { class: "sim-node", "data-lecture": p.lecture },
      h("circle", { cx: p.px, cy: p.py, r: 11 }),
      h("text", { x: p.px, y: p.py + 4 }, String(p.lecture)),
    ),
  );
  return h(
    "div",
    { class: "similarity" },
    h("div", { class: "sim-caption" }, `stress ${payload.stress.toExponential(2)}`),
    h("svg", { viewBox: `0 0 ${SIZE} ${SIZE}`, width: SIZE, height: SIZE }, ...edges, ...nodes),
  );
}
