import { describe, expect, it } from "vitest";

import { renderLegend, renderMap } from "../src/render.js";
import type { HeatmapFeature, StationFeature } from "../src/types.js";

function hexAt(lon: number, lat: number, probability: number, cell: string): HeatmapFeature {
  const d = 0.0005;
  return {
    type: "Feature",
    geometry: {
      type: "Polygon",
      coordinates: [[
        [lon - d, lat - d], [lon + d, lat - d], [lon + d, lat + d],
        [lon - d, lat + d], [lon - d, lat - d],
      ]],
    },
    properties: { cell, probability },
  };
}

function stationAt(lon: number, lat: number, id: string): StationFeature {
  return {
    type: "Feature",
    geometry: { type: "Point", coordinates: [lon, lat] },
    properties: { station_id: id, system: "test" },
  };
}

function count(haystack: string, needle: string): number {
  return haystack.split(needle).length - 1;
}

describe("renderMap", () => {
  const hexes = [
    hexAt(21.001, 52.201, 0.5, "a"),
    hexAt(21.003, 52.202, 0.75, "b"),
    hexAt(21.005, 52.203, 1.0, "c"),
  ];
  const stations = [stationAt(21.002, 52.2015, "s1"), stationAt(21.004, 52.2025, "s2")];

  it("draws one polygon per feature and one circle per station", () => {
    const svg = renderMap(hexes, stations);
    expect(count(svg, "<polygon")).toBe(3);
    expect(count(svg, "<circle")).toBe(2);
  });

  it("renders station dots white with black borders", () => {
    const svg = renderMap(hexes, stations);
    expect(svg).toContain('fill="#ffffff" stroke="#000000"');
  });

  it("colors across the given domain", () => {
    const svg = renderMap(hexes, [], { colorDomain: [0.5, 1.0] });
    expect(svg).toContain("#ff0000"); // p = 0.5 sits at the red end
    expect(svg).toContain("#ffff00"); // p = 1.0 at the yellow end
  });

  it("keeps colors put when the visible subset shrinks", () => {
    const domain: [number, number] = [0.5, 1.0];
    const all = renderMap(hexes, [], { colorDomain: domain });
    const some = renderMap(hexes.slice(1), [], { colorDomain: domain });
    const colorOf = (svg: string, cell: string) =>
      svg.split("\n").find((line) => line.includes(`>${cell}:`))?.match(/fill="([^"]+)"/)?.[1];
    expect(colorOf(some, "b")).toBe(colorOf(all, "b"));
    expect(colorOf(some, "c")).toBe(colorOf(all, "c"));
  });

  it("survives an empty layer", () => {
    const svg = renderMap([], []);
    expect(svg).toContain("<svg");
    expect(count(svg, "<polygon")).toBe(0);
    expect(count(svg, "<circle")).toBe(0);
  });
});

describe("renderLegend", () => {
  it("spans red to yellow with labeled ends", () => {
    const svg = renderLegend(0.31, 0.88);
    expect(svg).toContain("#ff0000");
    expect(svg).toContain("#ffff00");
    expect(svg).toContain("0.31");
    expect(svg).toContain("0.88");
  });
});
