import { rampColor, rampPosition } from "./ramp.js";
import type { HeatmapFeature, StationFeature } from "./types.js";

export interface RenderOptions {
  width?: number;
  /** fixed probability range for coloring; defaults to the features' own */
  colorDomain?: [number, number];
}

interface Projector {
  (lon: number, lat: number): [number, number];
  width: number;
  height: number;
}

function makeProjector(
  lons: number[],
  lats: number[],
  width: number,
): Projector {
  const west = Math.min(...lons);
  const east = Math.max(...lons);
  const south = Math.min(...lats);
  const north = Math.max(...lats);
  const midLat = ((south + north) / 2) * (Math.PI / 180);
  // equirectangular: shrink longitude spans by cos(mid latitude)
  const cosMid = Math.cos(midLat);
  const spanX = Math.max((east - west) * cosMid, 1e-12);
  const spanY = Math.max(north - south, 1e-12);
  const pad = 10;
  const scale = (width - 2 * pad) / spanX;
  const height = Math.ceil(spanY * scale + 2 * pad);
  const project = ((lon: number, lat: number): [number, number] => [
    pad + (lon - west) * cosMid * scale,
    height - pad - (lat - south) * scale,
  ]) as Projector;
  project.width = width;
  project.height = height;
  return project;
}

function round2(v: number): string {
  return v.toFixed(2);
}

/**
 * Self-contained SVG of the filtered hexes plus station dots. Pure
 * string building so a headless test can count what would be drawn.
 */
export function renderMap(
  features: HeatmapFeature[],
  stations: StationFeature[],
  opts: RenderOptions = {},
): string {
  const width = opts.width ?? 860;
  const lons: number[] = [];
  const lats: number[] = [];
  for (const f of features) {
    for (const [lon, lat] of f.geometry.coordinates[0] as [number, number][]) {
      lons.push(lon);
      lats.push(lat);
    }
  }
  for (const s of stations) {
    lons.push(s.geometry.coordinates[0] as number);
    lats.push(s.geometry.coordinates[1] as number);
  }
  if (lons.length === 0) {
    return `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="120" viewBox="0 0 ${width} 120"></svg>`;
  }

  const project = makeProjector(lons, lats, width);
  let lo: number;
  let hi: number;
  if (opts.colorDomain) {
    [lo, hi] = opts.colorDomain;
  } else {
    const probs = features.map((f) => f.properties.probability);
    lo = Math.min(...probs);
    hi = Math.max(...probs);
  }

  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" width="${project.width}" height="${project.height}" viewBox="0 0 ${project.width} ${project.height}">`,
  );
  for (const f of features) {
    const ring = (f.geometry.coordinates[0] as [number, number][])
      .map(([lon, lat]) => project(lon, lat).map(round2).join(","))
      .join(" ");
    const color = rampColor(rampPosition(f.properties.probability, lo, hi));
    const title = `${f.properties.cell}: ${f.properties.probability.toFixed(3)}`;
    parts.push(
      `<polygon points="${ring}" fill="${color}" fill-opacity="0.75" stroke="#333" stroke-width="0.4"><title>${title}</title></polygon>`,
    );
  }
  for (const s of stations) {
    const [x, y] = project(
      s.geometry.coordinates[0] as number,
      s.geometry.coordinates[1] as number,
    );
    parts.push(
      `<circle cx="${round2(x)}" cy="${round2(y)}" r="4" fill="#ffffff" stroke="#000000" stroke-width="1.5"><title>${s.properties.station_id}</title></circle>`,
    );
  }
  parts.push("</svg>");
  return parts.join("\n");
}

/** Gradient legend from the low end (red) to the high end (yellow). */
export function renderLegend(lo: number, hi: number): string {
  const stops = [0, 0.25, 0.5, 0.75, 1]
    .map(
      (t) =>
        `<stop offset="${t * 100}%" stop-color="${rampColor(t)}"></stop>`,
    )
    .join("");
  return [
    `<svg xmlns="http://www.w3.org/2000/svg" width="260" height="44" viewBox="0 0 260 44">`,
    `<defs><linearGradient id="ramp" x1="0" y1="0" x2="1" y2="0">${stops}</linearGradient></defs>`,
    `<rect x="8" y="6" width="244" height="14" fill="url(#ramp)" stroke="#333" stroke-width="0.5"></rect>`,
    `<text x="8" y="36" font-size="11" font-family="system-ui, sans-serif">${lo.toFixed(2)}</text>`,
    `<text x="252" y="36" font-size="11" font-family="system-ui, sans-serif" text-anchor="end">${hi.toFixed(2)}</text>`,
    `<text x="130" y="36" font-size="11" font-family="system-ui, sans-serif" text-anchor="middle">probability</text>`,
    `</svg>`,
  ].join("");
}
