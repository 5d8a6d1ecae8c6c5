/** Pure view model and SVG text generation; the DOM shell only injects the
 * result, so the whole rendering path is testable without a browser. */

import type { MapDescriptor, SessionState } from "./api.js";
import type { Layout, Point } from "./layout.js";

export const PALETTE = [
  "#f5f5f5", "#ffd500", "#c41e3a", "#ff8c00", "#0051ba", "#009e60",
  "#8f00b5", "#00c2c7", "#f06292", "#8d6e63", "#aeea00", "#4e342e",
  "#90caf9", "#ef9a9a", "#c5e1a5", "#ffe082",
] as const;

export interface RenderedPolygon {
  points: Point[];
  fill: string;
  /** Face layer that turns when this polygon is clicked. */
  region: string;
  stickerPoint?: number;
}

export interface RenderModel {
  width: number;
  height: number;
  underlay: RenderedPolygon[];
  stickers: RenderedPolygon[];
  outerFace: string;
}

export function faceColor(desc: MapDescriptor, label: string): string {
  const index = desc.face_list.findIndex((f) => f.label === label);
  return PALETTE[index % PALETTE.length]!;
}

function stickerFill(desc: MapDescriptor, state: SessionState, point: number): string {
  const nCorners = desc.corners.length;
  const home =
    point < nCorners
      ? state.stickers.corners[point]
      : state.stickers.side_edges[point - nCorners];
  return faceColor(desc, home ?? desc.face_list[0]!.label);
}

export function buildRenderModel(
  desc: MapDescriptor,
  layout: Layout,
  state: SessionState,
): RenderModel {
  const underlay: RenderedPolygon[] = layout.faces
    .filter((f) => !f.outer)
    .map((f) => ({ points: f.polygon, fill: "#2b2b2b", region: f.label }));
  const stickers: RenderedPolygon[] = layout.stickers.map((s) => ({
    points: s.polygon,
    fill: stickerFill(desc, state, s.point),
    region: s.region,
    stickerPoint: s.point,
  }));
  return { width: layout.width, height: layout.height, underlay, stickers, outerFace: layout.outerFace };
}

function polygonAttr(points: Point[]): string {
  return points.map((p) => `${p.x.toFixed(2)},${p.y.toFixed(2)}`).join(" ");
}

export function toSvg(model: RenderModel): string {
  const parts: string[] = [
    `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${model.width} ${model.height}">`,
    `<rect width="${model.width}" height="${model.height}" fill="#1d1d20"/>`,
  ];
  for (const poly of model.underlay) {
    parts.push(
      `<polygon points="${polygonAttr(poly.points)}" fill="${poly.fill}" ` +
        `stroke="#1d1d20" stroke-width="1.5" data-face="${poly.region}"/>`,
    );
  }
  for (const poly of model.stickers) {
    parts.push(
      `<polygon points="${polygonAttr(poly.points)}" fill="${poly.fill}" ` +
        `stroke="#111" stroke-width="1" data-face="${poly.region}" ` +
        `data-point="${poly.stickerPoint}"/>`,
    );
  }
  parts.push("</svg>");
  return parts.join("\n");
}
