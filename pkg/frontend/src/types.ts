// Payload shapes of the /api endpoints.

export interface Bounds {
  min: number;
  max: number;
}

export interface Meta {
  n_transcripts: number;
  n_chapters: number;
  lectures: { id: number; label: string }[];
  chapters: { id: number; label: string }[];
  n_phrases: number;
  bounds: { zoom: Bounds; focus: Bounds; contrast: Bounds };
  defaults: { zoom: number; focus: number; contrast: number; mode: string };
  modes: string[];
  has_chapters: boolean;
  has_groundtruth: boolean;
}

export interface PhraseInfo {
  id: number;
  tokens: string[];
  text: string;
  synthetic: boolean;
  doc_freq: number;
  kind: "theme" | "topic";
}

export interface IndexMapItem {
  phrase: number;
  tokens: string[];
  start: number;
  end: number;
  row: number;
  occurrence: number;
  hue: number;
}

export interface IndexMapPayload {
  n_lectures: number;
  max_occurrence: number;
  items: IndexMapItem[];
}

export interface ChapterMatchPayload {
  mode: string;
  zoom: number;
  lectures: number[];
  chapters: number[];
  scores: number[][];
  assignments: number[];
  no_signal: boolean[];
  accuracy: number | null;
  groundtruth?: number[][];
  correct?: (boolean | null)[];
}

export interface SimilarityNode {
  lecture: number;
  x: number;
  y: number;
}

export interface SimilarityEdge {
  i: number;
  j: number;
  d: number;
  strength: "strong" | "weak";
}

export interface SimilarityPayload {
  nodes: SimilarityNode[];
  edges: SimilarityEdge[];
  stress: number;
}
