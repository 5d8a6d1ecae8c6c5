import { describe, expect, it } from "vitest";

import type { MapDescriptor } from "../src/api.js";
import {
  chooseOuterFace,
  computeLayout,
  NotPlanarError,
  pointInPolygon,
  tutteEmbedding,
} from "../src/layout.js";
import prism3Json from "./fixtures/prism3.json";
import cubeJson from "./fixtures/cube.json";
import hexTorusJson from "./fixtures/hex_torus_2x3.json";

const prism3 = prism3Json as unknown as MapDescriptor;
const cube = cubeJson as unknown as MapDescriptor;
const hexTorus = hexTorusJson as unknown as MapDescriptor;

describe("outer face choice", () => {
  it("picks the largest face, earliest on ties", () => {
    const outer = chooseOuterFace(prism3);
    expect(outer.size).toBe(4);
    expect(outer.label).toBe(
      prism3.face_list.find((f) => f.size === 4)!.label,
    );
  });
});

describe("tutte embedding", () => {
  it("fixes the outer face on a convex regular polygon", () => {
    const outer = chooseOuterFace(cube);
    const pos = tutteEmbedding(cube, outer, 800, 800);
    const radii = outer.vertices.map((v) =>
      Math.hypot(pos[v]!.x - 400, pos[v]!.y - 400),
    );
    for (const r of radii) expect(r).toBeCloseTo(radii[0]!, 6);
  });

  it("relaxes interior vertices to their neighbour average", () => {
    const outer = chooseOuterFace(cube);
    const pos = tutteEmbedding(cube, outer, 800, 800);
    const neighbours: number[][] = Array.from({ length: cube.vertices }, () => []);
    for (const [a, b] of cube.edge_list) {
      neighbours[a]!.push(b);
      neighbours[b]!.push(a);
    }
    const outerSet = new Set(outer.vertices);
    for (let v = 0; v < cube.vertices; v++) {
      if (outerSet.has(v)) continue;
      const xs = neighbours[v]!.map((w) => pos[w]!.x);
      const ys = neighbours[v]!.map((w) => pos[w]!.y);
      expect(pos[v]!.x).toBeCloseTo(xs.reduce((a, b) => a + b) / xs.length, 5);
      expect(pos[v]!.y).toBeCloseTo(ys.reduce((a, b) => a + b) / ys.length, 5);
    }
  });

  it("keeps interior vertices strictly inside the outer polygon", () => {
    const layout = computeLayout(prism3);
    const outerPoly = layout.faces.find((f) => f.outer)!.polygon;
    const outerSet = new Set(
      prism3.face_list.find((f) => f.label === layout.outerFace)!.vertices,
    );
    for (let v = 0; v < prism3.vertices; v++) {
      if (!outerSet.has(v)) {
        expect(pointInPolygon(layout.positions[v]!, outerPoly)).toBe(true);
      }
    }
  });
});

describe("sticker polygons", () => {
  it("creates one sticker per corner and side-edge point", () => {
    for (const desc of [prism3, cube]) {
      const layout = computeLayout(desc);
      const points = layout.stickers.map((s) => s.point).sort((a, b) => a - b);
      const expected = Array.from({ length: 6 * desc.vertices }, (_, i) => i);
      expect(points).toEqual(expected);
    }
  });

  it("every sticker is hit-testable to the face it turns", () => {
    const layout = computeLayout(cube);
    const labels = new Set(cube.face_list.map((f) => f.label));
    for (const sticker of layout.stickers) {
      expect(labels.has(sticker.region)).toBe(true);
      expect(sticker.polygon.length).toBeGreaterThanOrEqual(4);
    }
  });

  it("keeps inner-face stickers inside their face polygon", () => {
    const layout = computeLayout(cube);
    const faceByLabel = new Map(layout.faces.map((f) => [f.label, f]));
    for (const sticker of layout.stickers) {
      const face = faceByLabel.get(sticker.region)!;
      if (face.outer) continue;
      const cx =
        sticker.polygon.reduce((a, p) => a + p.x, 0) / sticker.polygon.length;
      const cy =
        sticker.polygon.reduce((a, p) => a + p.y, 0) / sticker.polygon.length;
      expect(pointInPolygon({ x: cx, y: cy }, face.polygon)).toBe(true);
    }
  });
});

describe("non-planar maps", () => {
  it("are rejected with a clear error", () => {
    expect(hexTorus.planar).toBe(false);
    expect(() => computeLayout(hexTorus)).toThrowError(NotPlanarError);
    expect(() => computeLayout(hexTorus)).toThrowError(/genus 1/);
  });
});
