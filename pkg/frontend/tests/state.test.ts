import assert from "node:assert/strict";
import test from "node:test";

import { clamp, initialState, withSetting } from "../src/state.js";
import { Meta } from "../src/types.js";

const META: Meta = {
  n_transcripts: 12,
  n_chapters: 6,
  lectures: [],
  chapters: [],
  n_phrases: 40,
  bounds: { zoom: { min: 1, max: 12 }, focus: { min: 1, max: 9 }, contrast: { min: 1, max: 4 } },
  defaults: { zoom: 15, focus: 1, contrast: 1, mode: "phrases_and_pairs" },
  modes: ["phrases", "pairs", "g2pairs", "phrases_and_pairs"],
  has_chapters: true,
  has_groundtruth: false,
};

test("defaults are clamped into the advertised bounds", () => {
  const state = initialState(META);
  assert.equal(state.zoom, 12); // server default 15 exceeds this course's max
  assert.equal(state.focus, 1);
  assert.equal(state.mode, "phrases_and_pairs");
});

test("manual out-of-range input is clamped", () => {
  let state = initialState(META);
  state = withSetting(state, META, "zoom", 999);
  assert.equal(state.zoom, 12);
  state = withSetting(state, META, "zoom", -3);
  assert.equal(state.zoom, 1);
  state = withSetting(state, META, "focus", 4.6);
  assert.equal(state.focus, 5);
});

test("clamp handles non-numbers", () => {
  assert.equal(clamp(Number.NaN, { min: 1, max: 9 }), 1);
});
