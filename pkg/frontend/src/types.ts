/** JSON payload shapes of the backend HTTP API, mirrored one to one. */

export interface CityInfo {
  name: string;
  stations: number;
  cells: number;
}

export interface CitiesPayload {
  cities: CityInfo[];
}

export interface HeatmapFeature {
  type: "Feature";
  geometry: { type: "Polygon"; coordinates: number[][][] };
  properties: { cell: string; probability: number };
}

export interface HeatmapPayload {
  type: "FeatureCollection";
  features: HeatmapFeature[];
  properties: {
    city: string;
    resolution: number;
    threshold: number | null;
    [key: string]: unknown;
  };
}

export interface StationFeature {
  type: "Feature";
  geometry: { type: "Point"; coordinates: number[] };
  properties: { station_id: string; system: string };
}

export interface StationsPayload {
  type: "FeatureCollection";
  features: StationFeature[];
}

export interface PredictRequest {
  train_cities: string[];
  eval_city: string;
  threshold: number;
  iterations?: number;
}

export type JobStatus = "queued" | "running" | "done" | "failed";

export interface JobMetrics {
  accuracy: number;
  precision: number;
  recall: number;
  f1: number;
  flags: string[];
}

export interface JobResult {
  heatmap: HeatmapPayload;
  metrics: JobMetrics;
  train_cities: string[];
  eval_city: string;
  threshold: number;
  iterations: number;
  base_seed: number;
}

export interface JobSnapshot {
  id: string;
  status: JobStatus;
  error?: string;
  result?: JobResult;
}
