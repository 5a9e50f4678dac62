/**
 * Pure view builders: editor state in, SVG/HTML markup strings out.
 * Nothing here decides geometry; faces and witnesses are drawn exactly
 * as the service certified them.
 */

import { parseRational, toNumber } from "./rational.js";
import type { EditorState } from "./state.js";
import type { CertificateJson, DrawingJson, FaceJson, PointJson } from "./types.js";
import { edgeKey } from "./types.js";

export const SCALE = 60;

type XY = [number, number];

function toXY(point: PointJson): XY {
  return [toNumber(parseRational(point[0])) * SCALE, -toNumber(parseRational(point[1])) * SCALE];
}

function vertexXY(drawing: DrawingJson, v: number): XY {
  return toXY(drawing.positions[String(v)]!);
}

/** Polyline of an edge, traversed from u to v. */
function arcXY(drawing: DrawingJson, u: number, v: number): XY[] {
  const key = edgeKey(u, v);
  const bends = (drawing.bends[key] ?? []).map(toXY);
  if (u > v) bends.reverse();
  return [vertexXY(drawing, u), ...bends, vertexXY(drawing, v)];
}

function pointsAttr(points: XY[]): string {
  return points.map(([x, y]) => `${round2(x)},${round2(y)}`).join(" ");
}

function round2(value: number): number {
  return Math.round(value * 100) / 100;
}

export function viewBox(drawing: DrawingJson): string {
  const xs: number[] = [];
  const ys: number[] = [];
  for (const [u, v] of drawing.edges) {
    for (const [x, y] of arcXY(drawing, u, v)) {
      xs.push(x);
      ys.push(y);
    }
  }
  for (let v = 0; v < drawing.n; v++) {
    const [x, y] = vertexXY(drawing, v);
    xs.push(x);
    ys.push(y);
  }
  const pad = 30;
  const x0 = Math.min(...xs) - pad;
  const y0 = Math.min(...ys) - pad;
  return `${round2(x0)} ${round2(y0)} ${round2(Math.max(...xs) + pad - x0)} ${round2(
    Math.max(...ys) + pad - y0,
  )}`;
}

function faceMarkup(drawing: DrawingJson, face: FaceJson): string {
  const id = [...face].sort((a, b) => a - b).join(",");
  if (face.length === 1) {
    const [x, y] = vertexXY(drawing, face[0]!);
    return `<circle class="hl hl-vertex" data-face="${id}" cx="${round2(x)}" cy="${round2(
      y,
    )}" r="10"/>`;
  }
  if (face.length === 2) {
    const pts = arcXY(drawing, face[0]!, face[1]!);
    return `<polyline class="hl hl-edge" data-face="${id}" points="${pointsAttr(pts)}"/>`;
  }
  const [a, b, c] = [...face].sort((x, y) => x - y) as [number, number, number];
  const loop = [
    ...arcXY(drawing, a, b).slice(0, -1),
    ...arcXY(drawing, b, c).slice(0, -1),
    ...arcXY(drawing, c, a).slice(0, -1),
  ];
  return `<polygon class="hl hl-triangle" data-face="${id}" points="${pointsAttr(loop)}"/>`;
}

function certificateOverlay(drawing: DrawingJson, cert: CertificateJson): string {
  const faces = cert.family.map((face) => faceMarkup(drawing, face)).join("");
  const [wx, wy] = toXY(cert.witness);
  const witness = `<circle class="witness" data-witness="${cert.witness[0]},${cert.witness[1]}" cx="${round2(
    wx,
  )}" cy="${round2(wy)}" r="5"/>`;
  return `<g class="certificate-overlay">${faces}${witness}</g>`;
}

export function renderSvg(state: EditorState): string {
  const drawing = state.drawing;
  if (!drawing) return `<svg class="board" viewBox="0 0 100 100"></svg>`;
  const edges = drawing.edges
    .map(([u, v]) => {
      const key = edgeKey(u, v);
      return `<polyline class="edge" data-edge="${key}" points="${pointsAttr(
        arcXY(drawing, u, v),
      )}"/>`;
    })
    .join("");
  const bends = Object.entries(drawing.bends)
    .flatMap(([key, chain]) =>
      chain.map((point, i) => {
        const [x, y] = toXY(point);
        return `<circle class="bend" data-bend="${key}:${i}" cx="${round2(x)}" cy="${round2(
          y,
        )}" r="3"/>`;
      }),
    )
    .join("");
  const selected =
    state.selected !== null ? state.certificates[state.selected] : undefined;
  const overlay = selected ? certificateOverlay(drawing, selected) : "";
  const vertices = Array.from({ length: drawing.n }, (_, v) => {
    const [x, y] = vertexXY(drawing, v);
    const pinned = state.pinned.includes(v) ? " pinned" : "";
    return (
      `<circle class="vertex${pinned}" data-vertex="${v}" cx="${round2(x)}" cy="${round2(y)}" r="6"/>` +
      `<text class="label" x="${round2(x + 8)}" y="${round2(y - 8)}">${v}</text>`
    );
  }).join("");
  return (
    `<svg class="board" viewBox="${viewBox(drawing)}">` +
    `<g class="edges">${edges}</g>${overlay}<g class="bends">${bends}</g>` +
    `<g class="vertices">${vertices}</g></svg>`
  );
}

export function renderCountBadge(state: EditorState): string {
  const value =
    state.pending || state.dirty || state.count === null ? "&#8230;" : String(state.count);
  const stale = state.pending || state.dirty ? " stale" : "";
  return `<span class="count-badge${stale}">${value}</span>`;
}

export function renderCertificateList(state: EditorState): string {
  if (!state.certificates.length) {
    return `<ul class="certificates"></ul>`;
  }
  const items = state.certificates
    .map((cert, i) => {
      const label = cert.family
        .map((face) => `{${[...face].sort((a, b) => a - b).join(",")}}`)
        .join(" ");
      const cls = i === state.selected ? ` class="selected"` : "";
      return `<li data-cert="${i}"${cls}>${label} @ (${cert.witness[0]}, ${cert.witness[1]})</li>`;
    })
    .join("");
  return `<ul class="certificates">${items}</ul>`;
}

export function renderStatus(state: EditorState): string {
  if (state.error) return `<p class="status error">${escapeHtml(state.error)}</p>`;
  const parts: string[] = [];
  if (state.gpOk === false) parts.push("degenerate (not in general position)");
  if (state.lastHuntBest !== null) parts.push(`hunt best so far: ${state.lastHuntBest}`);
  if (state.pinned.length) parts.push(`pinned: ${state.pinned.join(", ")}`);
  return `<p class="status">${escapeHtml(parts.join(" | "))}</p>`;
}

function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}
