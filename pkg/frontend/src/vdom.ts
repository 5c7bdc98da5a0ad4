// A minimal virtual node so views stay pure and testable without a DOM.

export type Attrs = Record<string, string | number | boolean | EventHandler>;
export type EventHandler = (event: unknown) => void;

export interface VNode {
  tag: string;
  attrs: Attrs;
  children: (VNode | string)[];
}

export function h(tag: string, attrs: Attrs = {}, ...children: (VNode | string | null)[]): VNode {
  return { tag, attrs, children: children.filter((c): c is VNode | string => c !== null) };
}

/** Depth-first search for nodes matching a predicate; used by tests. */
export function findAll(root: VNode, predicate: (node: VNode) => boolean): VNode[] {
  const found: VNode[] = [];
  const walk = (node: VNode) => {
    if (predicate(node)) found.push(node);
    for (const child of node.children) {
      if (typeof child !== "string") walk(child);
    }
  };
  walk(root);
  return found;
}

export function textContent(node: VNode | string): string {
  if (typeof node === "string") return node;
  return node.children.map(textContent).join("");
}

/** Materialize a virtual tree into real DOM nodes (browser only). */
export function mount(node: VNode | string, doc: Document): Node {
  if (typeof node === "string") return doc.createTextNode(node);
  const svgTags = new Set(["svg", "line", "circle", "text", "g", "rect", "title"]);
  const el = svgTags.has(node.tag)
    ? doc.createElementNS("http://www.w3.org/2000/svg", node.tag)
    : doc.createElement(node.tag);
  for (const [key, value] of Object.entries(node.attrs)) {
    if (typeof value === "function") {
      (el as unknown as Record<string, unknown>)[key] = value;
    } else if (value !== false) {
      el.setAttribute(key, String(value));
    }
  }
  for (const child of node.children) {
    el.appendChild(mount(child, doc));
  }
  return el;
}
