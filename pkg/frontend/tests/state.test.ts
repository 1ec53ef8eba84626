import { describe, expect, it } from "vitest";

import {
  canSubmit,
  clampThreshold,
  colorDomain,
  THRESHOLD_MAX,
  THRESHOLD_MIN,
  visibleFeatures,
} from "../src/state.js";
import type { HeatmapFeature, HeatmapPayload } from "../src/types.js";

function feature(cell: string, probability: number): HeatmapFeature {
  return {
    type: "Feature",
    geometry: { type: "Polygon", coordinates: [[[0, 0], [1, 0], [1, 1], [0, 0]]] },
    properties: { cell, probability },
  };
}

function payload(probs: number[]): HeatmapPayload {
  return {
    type: "FeatureCollection",
    features: probs.map((p, i) => feature(`c${i}`, p)),
    properties: { city: "t", resolution: 11, threshold: null },
  };
}

function deepFreeze<T>(value: T): T {
  if (value && typeof value === "object" && !Object.isFrozen(value)) {
    Object.freeze(value);
    for (const key of Object.getOwnPropertyNames(value)) {
      deepFreeze((value as Record<string, unknown>)[key]);
    }
  }
  return value;
}

// deterministic pseudo-random probabilities, no RNG state shared with src
function lcgProbs(n: number, seed: number): number[] {
  const out: number[] = [];
  let x = seed >>> 0;
  for (let i = 0; i < n; i += 1) {
    x = (1664525 * x + 1013904223) >>> 0;
    out.push(x / 2 ** 32);
  }
  return out;
}

describe("clampThreshold", () => {
  it("bounds the slider range", () => {
    expect(clampThreshold(0)).toBe(THRESHOLD_MIN);
    expect(clampThreshold(1)).toBe(THRESHOLD_MAX);
    expect(clampThreshold(0.05)).toBe(0.05);
    expect(clampThreshold(0.95)).toBe(0.95);
    expect(clampThreshold(0.42)).toBe(0.42);
    expect(clampThreshold(-3)).toBe(THRESHOLD_MIN);
    expect(clampThreshold(Number.NaN)).toBe(THRESHOLD_MIN);
  });
});

describe("canSubmit", () => {
  const base = {
    selectedTrainCities: ["A"],
    targetCity: "B",
    threshold: 0.5,
    activeJob: null,
  };

  it("requires at least one train city", () => {
    expect(canSubmit(base)).toBe(true);
    expect(canSubmit({ ...base, selectedTrainCities: [] })).toBe(false);
  });

  it("requires a target and no job in flight", () => {
    expect(canSubmit({ ...base, targetCity: null })).toBe(false);
    expect(canSubmit({ ...base, activeJob: "job-0001" })).toBe(false);
  });
});

describe("visibleFeatures", () => {
  it("matches an independent recount", () => {
    const doc = payload(lcgProbs(500, 7));
    for (const threshold of [0.05, 0.3, 0.5, 0.77, 0.95]) {
      let manual = 0;
      for (const f of doc.features) {
        if (f.properties.probability >= threshold) manual += 1;
      }
      const got = visibleFeatures(doc, threshold);
      expect(got.length).toBe(manual);
      for (const f of got) {
        expect(f.properties.probability).toBeGreaterThanOrEqual(threshold);
      }
    }
  });

  it("is idempotent over a fixed result", () => {
    const doc = payload(lcgProbs(200, 11));
    const once = visibleFeatures(doc, 0.6);
    const again = visibleFeatures(
      { ...doc, features: once },
      0.6,
    );
    expect(again).toEqual(once);
  });

  it("returns zero hexes above the max probability", () => {
    const doc = payload([0.1, 0.4, 0.62]);
    expect(visibleFeatures(doc, 0.9)).toEqual([]);
  });

  it("never mutates the payload", () => {
    const doc = deepFreeze(payload(lcgProbs(100, 3)));
    const before = JSON.stringify(doc);
    visibleFeatures(doc, 0.5);
    visibleFeatures(doc, 0.05);
    expect(JSON.stringify(doc)).toBe(before);
  });
});

describe("colorDomain", () => {
  it("spans the full payload", () => {
    const doc = payload([0.31, 0.9, 0.55]);
    expect(colorDomain(doc)).toEqual([0.31, 0.9]);
  });

  it("falls back to the unit interval when empty", () => {
    expect(colorDomain(payload([]))).toEqual([0, 1]);
  });
});
