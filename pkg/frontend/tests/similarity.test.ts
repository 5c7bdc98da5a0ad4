import assert from "node:assert/strict";
import test from "node:test";

import { projectNodes, renderSimilarity } from "../src/similarity_view.js";
import { SimilarityPayload } from "../src/types.js";
import { findAll, textContent } from "../src/vdom.js";

test("a phrase present in every lecture renders coincident nodes", () => {
  // All-zero distances put every lecture at the origin of the embedding.
  const payload: SimilarityPayload = {
    nodes: [
      { lecture: 1, x: 0, y: 0 },
      { lecture: 2, x: 0, y: 0 },
      { lecture: 3, x: 0, y: 0 },
    ],
    edges: [
      { i: 1, j: 2, d: 0, strength: "strong" },
      { i: 1, j: 3, d: 0, strength: "strong" },
      { i: 2, j: 3, d: 0, strength: "strong" },
    ],
    stress: 0,
  };
  const projected = projectNodes(payload);
  const positions = new Set(projected.map((p) => `${p.px},${p.py}`));
  assert.equal(positions.size, 1, "all nodes must share one position");

  const view = renderSimilarity(payload);
  const circles = findAll(view, (n) => n.tag === "circle");
  assert.equal(circles.length, 3);
  const rendered = new Set(circles.map((c) => `${c.attrs.cx},${c.attrs.cy}`));
  assert.equal(rendered.size, 1);
});

test("strong and weak edges carry their strength class", () => {
  const payload: SimilarityPayload = {
    nodes: [
      { lecture: 1, x: -1, y: 0 },
      { lecture: 2, x: 1, y: 0 },
      { lecture: 3, x: 0, y: 1 },
    ],
    edges: [
      { i: 1, j: 2, d: 0.2, strength: "strong" },
      { i: 1, j: 3, d: 0.7, strength: "weak" },
    ],
    stress: 0,
  };
  const view = renderSimilarity(payload);
  const lines = findAll(view, (n) => n.tag === "line");
  assert.deepEqual(
    lines.map((l) => l.attrs["data-strength"]),
    ["strong", "weak"],
  );
  // Unrelated pair (2, 3) has no line at all.
  assert.equal(lines.length, 2);
});

test("projection preserves relative geometry", () => {
  const payload: SimilarityPayload = {
    nodes: [
      { lecture: 1, x: 0, y: 0 },
      { lecture: 2, x: 2, y: 0 },
      { lecture: 3, x: 1, y: 0 },
    ],
    edges: [],
    stress: 0,
  };
  const [a, b, c] = projectNodes(payload);
  assert.ok(a.px < c.px && c.px < b.px);
  assert.equal(a.py, b.py);
});

test("empty selection shows the prompt", () => {
  const view = renderSimilarity(null);
  assert.ok(textContent(view).includes("select one or more phrases"));
});
