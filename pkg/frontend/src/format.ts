/** Display formatting; all values come verbatim from API payloads. */

export function score2(value: number): string {
  return value.toFixed(2);
}

export function dayOf(instant: string): string {
  return instant.slice(0, 10);
}

export function svgEl<K extends keyof SVGElementTagNameMap>(
  name: K, attrs: Record<string, string | number> = {}): SVGElementTagNameMap[K] {
  const el = document.createElementNS("http://www.w3.org/2000/svg", name);
  for (const [key, value] of Object.entries(attrs)) {
    el.setAttribute(key, String(value));
  }
  return el;
}

export function el<K extends keyof HTMLElementTagNameMap>(
  name: K, className = "", text = ""): HTMLElementTagNameMap[K] {
  const node = document.createElement(name);
  if (className) {
    node.className = className;
  }
  if (text) {
    node.textContent = text;
  }
  return node;
}
