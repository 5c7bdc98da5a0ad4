import { hueToCss } from "./colors.js";
import { IndexMapPayload } from "./types.js";
import { VNode, h } from "./vdom.js";

const COLUMN_WIDTH = 110;
const ROW_HEIGHT = 26;
const GAP = 4;

/**
 * Lectures run left to right; each phrase is a bar spanning the lectures of
 * its group, placed at the grid row chosen by the server's layout.
 */
export function renderIndexMap(payload: IndexMapPayload): VNode {
  if (payload.items.length === 0) {
    return h("div", { class: "notice" }, "no phrases at these settings");
  }
  const nRows = 1 + Math.max(...payload.items.map((item) => item.row));
  const header = h(
    "div",
    { class: "im-header" },
    ...Array.from({ length: payload.n_lectures }, (_, i) =>
      h(
        "div",
        { class: "im-col-label", style: `left:${i * COLUMN_WIDTH}px;width:${COLUMN_WIDTH - GAP}px` },
        `L${i + 1}`,
      ),
    ),
  );
  const bars = payload.items.map((item) => {
    const label = item.tokens.join(" ");
    return h(
      "div",
      {
        class: "im-bar",
        "data-phrase": item.phrase,
        "data-start": item.start,
        "data-end": item.end,
        title: `${label} — ${item.occurrence}×, lectures ${item.start}–${item.end}`,
        style:
          `left:${(item.start - 1) * COLUMN_WIDTH}px;` +
          `top:${item.row * ROW_HEIGHT}px;` +
          `width:${(item.end - item.start + 1) * COLUMN_WIDTH - GAP}px;` +
          `height:${ROW_HEIGHT - GAP}px;` +
          `background:${hueToCss(item.hue)}`,
      },
      label,
    );
  });
  return h(
    "div",
    { class: "indexmap" },
    header,
    h(
      "div",
      {
        class: "im-grid",
        style: `width:${payload.n_lectures * COLUMN_WIDTH}px;height:${nRows * ROW_HEIGHT}px`,
      },
      ...bars,
    ),
  );
}
