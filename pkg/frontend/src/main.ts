import {
  ViewFetcher,
  chapterMatchUrl,
  defaultFetchJson,
  indexMapUrl,
  similarityUrl,
} from "./api.js";
import { renderChapterMatch, renderChapterMatchUnavailable } from "./chaptermatch_view.js";
import { renderIndexMap } from "./indexmap_view.js";
import { renderSimilarity } from "./similarity_view.js";
import { ViewName, ViewState, initialState, withSetting } from "./state.js";
import {
  ChapterMatchPayload,
  IndexMapPayload,
  Meta,
  PhraseInfo,
  SimilarityPayload,
} from "./types.js";
import { VNode, h, mount } from "./vdom.js";

const fetchers = {
  indexmap: new ViewFetcher<IndexMapPayload>(),
  chaptermatch: new ViewFetcher<ChapterMatchPayload>(),
  similarity: new ViewFetcher<SimilarityPayload>(),
};

let meta: Meta;
let phrases: PhraseInfo[] = [];
let state: ViewState;
let phraseFilter = "";

function replaceChildren(el: HTMLElement, node: VNode): void {
  el.innerHTML = "";
  el.appendChild(mount(node, document));
}

function setNotice(el: HTMLElement, message: string): void {
  replaceChildren(el, h("div", { class: "notice error" }, message));
}

async function refreshView(): Promise<void> {
  const target = document.getElementById("view")!;
  try {
    if (state.view === "indexmap") {
      const payload = await fetchers.indexmap.request(
        indexMapUrl(state.zoom, state.focus, state.contrast),
      );
      if (payload !== null) replaceChildren(target, renderIndexMap(payload));
    } else if (state.view === "chaptermatch") {
      if (!meta.has_chapters) {
        replaceChildren(target, renderChapterMatchUnavailable());
        return;
      }
      const payload = await fetchers.chaptermatch.request(chapterMatchUrl(state.mode, state.zoom));
      if (payload !== null) replaceChildren(target, renderChapterMatch(payload));
    } else {
      if (state.selection.size === 0) {
        replaceChildren(target, renderSimilarity(null));
        return;
      }
      const payload = await fetchers.similarity.request(similarityUrl([...state.selection].sort((a, b) => a - b)));
      if (payload !== null) replaceChildren(target, renderSimilarity(payload));
    }
  } catch (error) {
    setNotice(target, error instanceof Error ? error.message : String(error));
  }
}

function sliderRow(name: "zoom" | "focus" | "contrast"): VNode {
  const bounds = meta.bounds[name];
  return h(
    "label",
    { class: "control" },
    `${name} `,
    h("input", {
      type: "range",
      min: bounds.min,
      max: bounds.max,
      value: state[name],
      oninput: (event: unknown) => {
        const value = Number((event as { target: HTMLInputElement }).target.value);
        state = withSetting(state, meta, name, value);
        renderControls();
        void refreshView();
      },
    }),
    h("span", { class: "value" }, String(state[name])),
  );
}

function modeSelect(): VNode {
  return h(
    "label",
    { class: "control" },
    "mode ",
    h(
      "select",
      {
        onchange: (event: unknown) => {
          state = { ...state, mode: (event as { target: HTMLSelectElement }).target.value };
          void refreshView();
        },
      },
      ...meta.modes.map((mode) =>
        h("option", mode === state.mode ? { value: mode, selected: true } : { value: mode }, mode),
      ),
    ),
  );
}

function phrasePanel(): VNode {
  const needle = phraseFilter.toLowerCase();
  const visible = phrases.filter((p) => !needle || p.text.includes(needle)).slice(0, 200);
  return h(
    "div",
    { class: "phrase-panel" },
    h("input", {
      type: "search",
      placeholder: "filter phrases…",
      value: phraseFilter,
      oninput: (event: unknown) => {
        phraseFilter = (event as { target: HTMLInputElement }).target.value;
        renderControls();
      },
    }),
    h(
      "div",
      { class: "phrase-list" },
      ...visible.map((p) =>
        h(
          "label",
          { class: "phrase-item" },
          h("input", {
            type: "checkbox",
            checked: state.selection.has(p.id),
            onchange: () => {
              const selection = new Set(state.selection);
              if (selection.has(p.id)) selection.delete(p.id);
              else selection.add(p.id);
              state = { ...state, selection };
              renderControls();
              void refreshView();
            },
          }),
          ` ${p.text} `,
          h("span", { class: `kind ${p.kind}` }, `${p.kind} ${p.doc_freq}`),
        ),
      ),
    ),
  );
}

function tabs(): VNode {
  const tab = (view: ViewName, label: string) =>
    h(
      "button",
      {
        class: state.view === view ? "tab active" : "tab",
        onclick: () => {
          state = { ...state, view };
          renderControls();
          void refreshView();
        },
      },
      label,
    );
  return h(
    "nav",
    { class: "tabs" },
    tab("indexmap", "Index Map"),
    tab("chaptermatch", "Chapter Match"),
    tab("similarity", "Similarity"),
  );
}

function renderControls(): void {
  const controls: VNode[] = [tabs()];
  if (state.view === "indexmap") {
    controls.push(sliderRow("zoom"), sliderRow("focus"), sliderRow("contrast"));
  } else if (state.view === "chaptermatch") {
    controls.push(modeSelect(), sliderRow("zoom"));
  } else {
    controls.push(phrasePanel());
  }
  replaceChildren(document.getElementById("controls")!, h("div", { class: "controls" }, ...controls));
}

async function boot(): Promise<void> {
  const target = document.getElementById("view")!;
  try {
    meta = (await defaultFetchJson("/api/meta")) as Meta;
    phrases = ((await defaultFetchJson("/api/phrases")) as { phrases: PhraseInfo[] }).phrases;
  } catch (error) {
    setNotice(target, `cannot reach the analysis service: ${error}`);
    return;
  }
  state = initialState(meta);
  renderControls();
  await refreshView();
}

void boot();
