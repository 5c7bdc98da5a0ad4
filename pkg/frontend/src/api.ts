// Typed client plus stale-response protection.
//
// Every view owns one ViewFetcher.  Each request bumps a generation
// counter and aborts the previous in-flight request, so a view has at most
// one request outstanding and rapid slider drags cannot reorder the UI:
// a response is delivered only if no newer request was issued since.

export type FetchJson = (url: string, signal?: AbortSignal) => Promise<unknown>;

export const defaultFetchJson: FetchJson = async (url, signal) => {
  const response = await fetch(url, { signal });
  const body = await response.json();
  if (!response.ok) {
    const message = (body as { error?: string }).error ?? `HTTP ${response.status}`;
    throw new Error(message);
  }
  return body;
};

export class ViewFetcher<T> {
  private generation = 0;
  private controller: AbortController | null = null;
  requestCount = 0;

  constructor(private readonly fetchJson: FetchJson = defaultFetchJson) {}

  /** Resolves with the payload, or null when a newer request superseded it. */
  async request(url: string): Promise<T | null> {
    const mine = ++this.generation;
    this.requestCount += 1;
    this.controller?.abort();
    const controller = typeof AbortController === "undefined" ? null : new AbortController();
    this.controller = controller;
    try {
      const payload = (await this.fetchJson(url, controller?.signal)) as T;
      return mine === this.generation ? payload : null;
    } catch (error) {
      if (mine !== this.generation) {
        return null; // aborted or outrun by a newer request
      }
      throw error;
    }
  }
}

export function indexMapUrl(zoom: number, focus: number, contrast: number): string {
  return `/api/indexmap?zoom=${zoom}&focus=${focus}&contrast=${contrast}`;
}

export function chapterMatchUrl(mode: string, zoom: number): string {
  return `/api/chaptermatch?mode=${encodeURIComponent(mode)}&zoom=${zoom}`;
}

export function similarityUrl(phraseIds: number[]): string {
  return `/api/similarity?phrases=${phraseIds.join(",")}`;
}
