import { Bounds, Meta } from "./types.js";

export type ViewName = "indexmap" | "chaptermatch" | "similarity";

export interface ViewState {
  view: ViewName;
  zoom: number;
  focus: number;
  contrast: number;
  mode: string;
  selection: Set<number>;
}

export function clamp(value: number, bounds: Bounds): number {
  if (Number.isNaN(value)) return bounds.min;
  return Math.min(bounds.max, Math.max(bounds.min, Math.round(value)));
}

export function initialState(meta: Meta): ViewState {
  return {
    view: "indexmap",
    zoom: clamp(meta.defaults.zoom, meta.bounds.zoom),
    focus: clamp(meta.defaults.focus, meta.bounds.focus),
    contrast: clamp(meta.defaults.contrast, meta.bounds.contrast),
    mode: meta.defaults.mode,
    selection: new Set(),
  };
}

/** Apply a slider move, clamping out-of-range manual input. */
export function withSetting(
  state: ViewState,
  meta: Meta,
  name: "zoom" | "focus" | "contrast",
  value: number,
): ViewState {
  return { ...state, [name]: clamp(value, meta.bounds[name]) };
}
