/** Pure SVG/HTML string renderers.
 *
 * Every drawing embeds the state it was given as data attributes
 * (data-vertex, data-arrow, data-diagonal, data-candidate), so tests can
 * read the rendered markup back and compare it with the service state.
 * Layouts are fixed and deterministic: first vertex at the top, then
 * clockwise on a circle.
 */

import type { Pair, Move, SessionState } from './types.js';

export const COLOUR_PALETTE = [
  '#1f77b4', '#d62728', '#2ca02c', '#9467bd',
  '#ff7f0e', '#8c564b', '#17becf', '#7f7f7f',
];

export function colourOf(c: number): string {
  return COLOUR_PALETTE[c % COLOUR_PALETTE.length];
}

function fmt(x: number): string {
  return (Math.round(x * 10000) / 10000).toString();
}

function circlePoint(index: number, total: number, radius: number): { x: number; y: number } {
  const theta = Math.PI / 2 - (2 * Math.PI * index) / total;
  return { x: radius * Math.cos(theta), y: -radius * Math.sin(theta) };
}

export function arrowKey(from: string | number, to: string | number, colour: number, mult: number): string {
  return `${from}|${to}|${colour}|${mult}`;
}

/** Quiver on a circle; every vertex is a click target (data-vertex). */
export function renderQuiverSvg(state: SessionState): string {
  const vertices = state.quiver.vertices.map(String);
  const pos = new Map(vertices.map((v, i) => [v, circlePoint(i, vertices.length, 100)]));
  const parts: string[] = [];
  parts.push(
    '<svg xmlns="http://www.w3.org/2000/svg" viewBox="-130 -130 260 260" class="quiver" ' +
      `data-m="${state.m}" data-arrow-count="${state.quiver.arrows.length}">`,
  );
  parts.push('<defs>');
  for (let c = 0; c <= state.m; c += 1) {
    parts.push(
      `<marker id="head${c}" viewBox="0 0 10 10" refX="9" refY="5" markerWidth="5" ` +
        `markerHeight="5" orient="auto-start-reverse">` +
        `<path d="M 0 0 L 10 5 L 0 10 z" fill="${colourOf(c)}"/></marker>`,
    );
  }
  parts.push('</defs>');

  for (const arrow of state.quiver.arrows) {
    const a = pos.get(String(arrow.from))!;
    const b = pos.get(String(arrow.to))!;
    const dx = b.x - a.x;
    const dy = b.y - a.y;
    const len = Math.hypot(dx, dy) || 1;
    // bow each direction to its own side so dual arrows never overlap
    const nx = -dy / len;
    const ny = dx / len;
    const midx = (a.x + b.x) / 2 + nx * 14;
    const midy = (a.y + b.y) / 2 + ny * 14;
    const trim = 14 / len;
    const sx = a.x + dx * trim + nx * 6;
    const sy = a.y + dy * trim + ny * 6;
    const ex = b.x - dx * trim + nx * 6;
    const ey = b.y - dy * trim + ny * 6;
    const colour = colourOf(arrow.colour);
    const label = arrow.mult > 1 ? `(${arrow.colour}) x${arrow.mult}` : `(${arrow.colour})`;
    parts.push(
      `<path d="M ${fmt(sx)} ${fmt(sy)} Q ${fmt(midx)} ${fmt(midy)} ${fmt(ex)} ${fmt(ey)}" ` +
        `fill="none" stroke="${colour}" stroke-width="1.6" marker-end="url(#head${arrow.colour})" ` +
        `data-arrow="${arrowKey(arrow.from, arrow.to, arrow.colour, arrow.mult)}"/>`,
    );
    parts.push(
      `<text x="${fmt(midx)}" y="${fmt(midy)}" font-size="9" fill="${colour}" ` +
        `text-anchor="middle">${label}</text>`,
    );
  }

  for (const v of vertices) {
    const p = pos.get(v)!;
    parts.push(
      `<g class="vertex" data-vertex="${v}" cursor="pointer">` +
        `<circle cx="${fmt(p.x)}" cy="${fmt(p.y)}" r="13" fill="#fff" stroke="#333"/>` +
        `<text x="${fmt(p.x)}" y="${fmt(p.y + 3)}" font-size="9" text-anchor="middle">${v}</text></g>`,
    );
  }
  parts.push('</svg>');
  return parts.join('');
}

/** The polygon with its angulation; optionally one diagonal selected with
 * its flip candidates dashed, numbered in exchange order. */
export function renderPolygonSvg(state: SessionState, selected: Pair | null = null): string {
  const ang = state.angulation;
  if (!ang) {
    return '<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 10 10" class="polygon empty"></svg>';
  }
  const N = ang.m * ang.n + 2;
  const pos = new Map<number, { x: number; y: number }>();
  for (let k = 1; k <= N; k += 1) {
    pos.set(k, circlePoint(k - 1, N, 100));
  }
  const parts: string[] = [];
  parts.push(
    '<svg xmlns="http://www.w3.org/2000/svg" viewBox="-125 -125 250 250" class="polygon" ' +
      `data-vertex-count="${N}" data-diagonal-count="${ang.diagonals.length}">`,
  );
  const ring = Array.from({ length: N }, (_, i) => {
    const p = pos.get(i + 1)!;
    return `${fmt(p.x)},${fmt(p.y)}`;
  }).join(' ');
  parts.push(`<polygon points="${ring}" fill="none" stroke="#bbb"/>`);

  for (const [i, j] of ang.diagonals) {
    const a = pos.get(i)!;
    const b = pos.get(j)!;
    const isSelected = selected !== null && selected[0] === i && selected[1] === j;
    parts.push(
      `<line x1="${fmt(a.x)}" y1="${fmt(a.y)}" x2="${fmt(b.x)}" y2="${fmt(b.y)}" ` +
        `stroke="${isSelected ? '#d62728' : '#333'}" stroke-width="${isSelected ? 3 : 2}" ` +
        `cursor="pointer" data-diagonal="${i},${j}"/>`,
    );
  }

  if (selected) {
    const flips = state.legal_moves.flips ?? [];
    const entry = flips.find((f) => f.diagonal[0] === selected[0] && f.diagonal[1] === selected[1]);
    for (const [order, [i, j]] of (entry?.candidates ?? []).entries()) {
      const a = pos.get(i)!;
      const b = pos.get(j)!;
      parts.push(
        `<line x1="${fmt(a.x)}" y1="${fmt(a.y)}" x2="${fmt(b.x)}" y2="${fmt(b.y)}" ` +
          `stroke="#d62728" stroke-width="1.5" stroke-dasharray="6,4" cursor="pointer" ` +
          `data-candidate="${i},${j}" data-order="${order + 1}"/>`,
      );
      parts.push(
        `<text x="${fmt((a.x + b.x) / 2)}" y="${fmt((a.y + b.y) / 2)}" font-size="9" ` +
          `fill="#d62728" text-anchor="middle">${order + 1}</text>`,
      );
    }
  }

  for (let k = 1; k <= N; k += 1) {
    const p = pos.get(k)!;
    parts.push(`<circle cx="${fmt(p.x)}" cy="${fmt(p.y)}" r="2.2" fill="#333"/>`);
    parts.push(
      `<text x="${fmt(p.x * 1.12)}" y="${fmt(p.y * 1.12 + 3)}" font-size="8" ` +
        `text-anchor="middle" fill="#555">${k}</text>`,
    );
  }
  parts.push('</svg>');
  return parts.join('');
}

/** Swatch per colour 0..m, nothing more and nothing less. */
export function renderLegend(m: number): string {
  const items: string[] = [];
  for (let c = 0; c <= m; c += 1) {
    items.push(
      `<span class="swatch" data-colour="${c}">` +
        `<span class="dot" style="background:${colourOf(c)}"></span>(${c})</span>`,
    );
  }
  return `<div class="legend">${items.join('')}</div>`;
}

export function describeMove(move: Move): string {
  if (move.type === 'mutate') {
    return `mutate at ${move.vertex}`;
  }
  return `flip (${move.diagonal.join(',')}) to (${move.choice.join(',')})`;
}

export function renderHistory(history: Move[]): string {
  if (history.length === 0) {
    return '<ol class="history"></ol>';
  }
  const items = history.map((move) => `<li>${describeMove(move)}</li>`);
  return `<ol class="history">${items.join('')}</ol>`;
}

/** Pull the data-* encoded state back out of rendered markup (test aid). */
export function extractAttr(markup: string, attr: string): string[] {
  const out: string[] = [];
  const pattern = new RegExp(`${attr}="([^"]*)"`, 'g');
  let match: RegExpExecArray | null;
  while ((match = pattern.exec(markup)) !== null) {
    out.push(match[1]);
  }
  return out;
}
