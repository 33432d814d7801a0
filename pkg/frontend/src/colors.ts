/** Deterministic colors: the same FE role gets the same color everywhere. */

/** Mirror of the server's label canonicalization (case, whitespace, underscores). */
export function canonicalLabel(raw: string): string {
  return raw
    .trim()
    .toLowerCase()
    .replace(/[\s_]+/g, "_")
    .replace(/^_+|_+$/g, "");
}

function fnv1a(text: string): number {
  let hash = 0x811c9dc5;
  for (let i = 0; i < text.length; i++) {
    hash ^= text.charCodeAt(i);
    hash = Math.imul(hash, 0x01000193) >>> 0;
  }
  return hash >>> 0;
}

/** Hue from the canonical role label; fixed saturation/lightness for legibility. */
export function roleColor(role: string): string {
  const hue = fnv1a(canonicalLabel(role)) % 360;
  return `hsl(${hue}, 65%, 82%)`;
}

export function roleBorderColor(role: string): string {
  const hue = fnv1a(canonicalLabel(role)) % 360;
  return `hsl(${hue}, 55%, 45%)`;
}
