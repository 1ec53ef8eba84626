import type { HeatmapFeature, HeatmapPayload } from "./types.js";

// slider bounds; the request threshold itself lives in (0, 1)
export const THRESHOLD_MIN = 0.05;
export const THRESHOLD_MAX = 0.95;

export interface SessionState {
  selectedTrainCities: string[];
  targetCity: string | null;
  threshold: number;
  activeJob: string | null;
}

export function clampThreshold(value: number): number {
  if (!Number.isFinite(value)) return THRESHOLD_MIN;
  return Math.min(THRESHOLD_MAX, Math.max(THRESHOLD_MIN, value));
}

export function canSubmit(state: SessionState): boolean {
  return (
    state.selectedTrainCities.length > 0 &&
    state.targetCity !== null &&
    state.activeJob === null
  );
}

/**
 * Cells at or above the threshold, in payload order. Pure: the payload
 * is never touched, so the same job result can be re-filtered forever.
 */
export function visibleFeatures(
  payload: HeatmapPayload,
  threshold: number,
): HeatmapFeature[] {
  return payload.features.filter((f) => f.properties.probability >= threshold);
}

/** Probability range of the full payload; colors stay put as the slider moves. */
export function colorDomain(payload: HeatmapPayload): [number, number] {
  let lo = Infinity;
  let hi = -Infinity;
  for (const f of payload.features) {
    const p = f.properties.probability;
    if (p < lo) lo = p;
    if (p > hi) hi = p;
  }
  if (lo > hi) return [0, 1];
  return [lo, hi];
}
