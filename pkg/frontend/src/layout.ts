/** Schlegel-diagram layout: a Tutte (barycentric) embedding plus the sticker
 * polygons the renderer and hit-testing work with.
 *
 * The outer face is the largest one (ties broken by catalog order); its
 * vertices pin a regular polygon and every interior vertex relaxes to the
 * average of its neighbours, which for a planar 3-connected map yields a
 * crossing-free drawing.  Each face is subdivided into a corner sticker per
 * boundary vertex and a side-edge sticker per boundary edge; the outer
 * face's band is drawn outside its polygon.
 */

import type { FaceInfo, MapDescriptor } from "./api.js";

export interface Point {
  x: number;
  y: number;
}

export interface StickerPolygon {
  /** Global sticker point index (corner block then side-edge block). */
  point: number;
  /** The face whose layer this sticker belongs to (the clickable region). */
  region: string;
  kind: "corner" | "side_edge";
  polygon: Point[];
}

export interface FaceRegion {
  label: string;
  outer: boolean;
  polygon: Point[];
}

export interface Layout {
  width: number;
  height: number;
  positions: Point[];
  faces: FaceRegion[];
  stickers: StickerPolygon[];
  outerFace: string;
}

export class NotPlanarError extends Error {
  constructor(name: string, genus: number) {
    super(`${name} has genus ${genus}; it has no plane diagram to play on`);
    this.name = "NotPlanarError";
  }
}

export function chooseOuterFace(desc: MapDescriptor): FaceInfo {
  let outer = desc.face_list[0]!;
  for (const face of desc.face_list) {
    if (face.size > outer.size) outer = face;
  }
  return outer;
}

export function tutteEmbedding(
  desc: MapDescriptor,
  outer: FaceInfo,
  width: number,
  height: number,
): Point[] {
  const n = desc.vertices;
  const cx = width / 2;
  const cy = height / 2;
  const radius = 0.36 * Math.min(width, height);
  const positions: Point[] = Array.from({ length: n }, () => ({ x: cx, y: cy }));
  const fixed: boolean[] = new Array(n).fill(false);
  outer.vertices.forEach((v, i) => {
    const angle = -Math.PI / 2 + (2 * Math.PI * i) / outer.size;
    positions[v] = { x: cx + radius * Math.cos(angle), y: cy + radius * Math.sin(angle) };
    fixed[v] = true;
  });
  const neighbours: number[][] = Array.from({ length: n }, () => []);
  for (const [a, b] of desc.edge_list) {
    neighbours[a]!.push(b);
    neighbours[b]!.push(a);
  }
  for (let iter = 0; iter < 5000; iter++) {
    let delta = 0;
    for (let v = 0; v < n; v++) {
      const nbrs = neighbours[v]!;
      if (fixed[v] || nbrs.length === 0) continue;
      let sx = 0;
      let sy = 0;
      for (const w of nbrs) {
        sx += positions[w]!.x;
        sy += positions[w]!.y;
      }
      const nx = sx / nbrs.length;
      const ny = sy / nbrs.length;
      delta = Math.max(delta, Math.abs(nx - positions[v]!.x), Math.abs(ny - positions[v]!.y));
      positions[v] = { x: nx, y: ny };
    }
    if (delta < 1e-9) break;
  }
  return positions;
}

function lerp(a: Point, b: Point, t: number): Point {
  return { x: a.x + (b.x - a.x) * t, y: a.y + (b.y - a.y) * t };
}

function centroid(points: Point[]): Point {
  let x = 0;
  let y = 0;
  for (const p of points) {
    x += p.x;
    y += p.y;
  }
  return { x: x / points.length, y: y / points.length };
}

function scaled(points: Point[], c: Point, s: number): Point[] {
  return points.map((p) => ({ x: c.x + s * (p.x - c.x), y: c.y + s * (p.y - c.y) }));
}

export function computeLayout(desc: MapDescriptor, width = 820, height = 820): Layout {
  if (!desc.planar) throw new NotPlanarError(desc.name, desc.genus);
  const outer = chooseOuterFace(desc);
  const positions = tutteEmbedding(desc, outer, width, height);

  const cornerPoint = new Map<string, number>();
  for (const c of desc.corners) cornerPoint.set(`${c.face}:${c.vertex}`, c.point);
  const sidePoint = new Map<string, number>();
  for (const s of desc.side_edges) sidePoint.set(`${s.face}:${s.edge}`, s.point);

  const faces: FaceRegion[] = [];
  const stickers: StickerPolygon[] = [];
  for (const face of desc.face_list) {
    const poly = face.vertices.map((v) => positions[v]!);
    const isOuter = face.label === outer.label;
    faces.push({ label: face.label, outer: isOuter, polygon: poly });
    const c = centroid(poly);
    const [sNear, sFar] = isOuter ? [1.07, 1.55] : [0.93, 0.52];
    const near = scaled(poly, c, sNear);
    const far = scaled(poly, c, sFar);
    const k = face.size;
    for (let i = 0; i < k; i++) {
      const j = (i + 1) % k;
      const prev = (i + k - 1) % k;
      const cPoint = cornerPoint.get(`${face.label}:${face.vertices[i]}`);
      if (cPoint !== undefined) {
        stickers.push({
          point: cPoint,
          region: face.label,
          kind: "corner",
          polygon: [
            lerp(near[prev]!, near[i]!, 2 / 3),
            near[i]!,
            lerp(near[i]!, near[j]!, 1 / 3),
            lerp(far[i]!, far[j]!, 1 / 3),
            far[i]!,
            lerp(far[prev]!, far[i]!, 2 / 3),
          ],
        });
      }
      const ePoint = sidePoint.get(`${face.label}:${face.edges[i]}`);
      if (ePoint !== undefined) {
        stickers.push({
          point: ePoint,
          region: face.label,
          kind: "side_edge",
          polygon: [
            lerp(near[i]!, near[j]!, 1 / 3),
            lerp(near[i]!, near[j]!, 2 / 3),
            lerp(far[i]!, far[j]!, 2 / 3),
            lerp(far[i]!, far[j]!, 1 / 3),
          ],
        });
      }
    }
  }
  return { width, height, positions, faces, stickers, outerFace: outer.label };
}

/** Ray-casting point-in-polygon; used by tests and by click fallbacks. */
export function pointInPolygon(p: Point, polygon: Point[]): boolean {
  let inside = false;
  for (let i = 0, j = polygon.length - 1; i < polygon.length; j = i++) {
    const a = polygon[i]!;
    const b = polygon[j]!;
    if (a.y > p.y !== b.y > p.y && p.x < ((b.x - a.x) * (p.y - a.y)) / (b.y - a.y) + a.x) {
      inside = !inside;
    }
  }
  return inside;
}
