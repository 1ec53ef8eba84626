import { beforeAll, describe, expect, inject, it } from "vitest";

import { HttpError, PlannerApi } from "../src/api.js";
import { PlannerController } from "../src/controller.js";
import { renderMap } from "../src/render.js";
import { visibleFeatures } from "../src/state.js";
import type { CitiesPayload, JobResult } from "../src/types.js";

const baseUrl = inject("apiUrl");

function countPolygons(svg: string): number {
  return svg.split("<polygon").length - 1;
}

describe("served fixture contract", () => {
  let api: PlannerApi;

  beforeAll(() => {
    api = new PlannerApi(baseUrl);
  });

  it("lists exactly the cities the backend serves", async () => {
    const raw = (await (await fetch(`${baseUrl}/cities`)).json()) as CitiesPayload;
    const controller = new PlannerController(api);
    await controller.loadCities();
    const s = controller.snapshot();
    expect(s.targetOptions).toEqual(raw.cities.map((c) => c.name));
    expect(s.trainOptions).toEqual(
      raw.cities.filter((c) => c.stations > 0).map((c) => c.name),
    );
    expect(s.trainOptions.length).toBeGreaterThan(0);
    expect(s.banner).toBeNull();
  });

  it("submits, polls, and renders exactly the hexes at or above threshold", async () => {
    const controller = new PlannerController(api);
    await controller.loadCities();
    controller.setTrainCities(["Greenfield"]);
    controller.setTargetCity("Harborview");
    controller.setThreshold(0.5);
    expect(await controller.submit(2)).toBe(true);

    const s = controller.snapshot();
    const result = s.result as JobResult;
    expect(result.eval_city).toBe("Harborview");

    // independent recount straight off the payload
    let expected = 0;
    for (const f of result.heatmap.features) {
      if (f.properties.probability >= 0.5) expected += 1;
    }
    expect(s.visibleCount).toBe(expected);

    const svg = renderMap(s.visible, s.stations?.features ?? [], {
      colorDomain: s.colorDomain ?? undefined,
    });
    expect(countPolygons(svg)).toBe(expected);

    // the target's known stations are drawn as dots over the heatmap
    expect(svg.split("<circle").length - 1).toBe(s.stations?.features.length);
    expect(s.stations?.features.length).toBeGreaterThan(0);

    for (const key of ["accuracy", "precision", "recall", "f1"] as const) {
      expect(result.metrics[key]).toBeGreaterThanOrEqual(0);
      expect(result.metrics[key]).toBeLessThanOrEqual(1);
    }
  });

  it("slider refiltering matches an independent recount at every stop", async () => {
    const controller = new PlannerController(api);
    await controller.loadCities();
    controller.setTrainCities(["Greenfield"]);
    controller.setTargetCity("Harborview");
    await controller.submit(2);
    const result = controller.snapshot().result as JobResult;

    for (const threshold of [0.05, 0.25, 0.5, 0.75, 0.95]) {
      controller.setThreshold(threshold);
      let expected = 0;
      for (const f of result.heatmap.features) {
        if (f.properties.probability >= threshold) expected += 1;
      }
      const s = controller.snapshot();
      expect(s.visibleCount).toBe(expected);
      expect(countPolygons(renderMap(s.visible, []))).toBe(expected);
    }

    // raising the slider past the max probability leaves zero hexes
    const top = Math.max(
      ...result.heatmap.features.map((f) => f.properties.probability),
    );
    if (top < 0.95) {
      controller.setThreshold(0.95);
      expect(controller.snapshot().visibleCount).toBe(0);
    }
  });

  it("renders the identical layer for the identical request", async () => {
    const layers: string[] = [];
    for (let run = 0; run < 2; run += 1) {
      const controller = new PlannerController(api);
      await controller.loadCities();
      controller.setTrainCities(["Greenfield"]);
      controller.setTargetCity("Greenfield");
      controller.setThreshold(0.5);
      await controller.submit(2);
      const s = controller.snapshot();
      layers.push(
        renderMap(s.visible, s.stations?.features ?? [], {
          colorDomain: s.colorDomain ?? undefined,
        }),
      );
    }
    expect(layers[0]).toBe(layers[1]);
  });

  it("keeps the full payload so low probabilities survive the wire", async () => {
    const controller = new PlannerController(api);
    await controller.loadCities();
    controller.setTrainCities(["Greenfield"]);
    controller.setTargetCity("Harborview");
    controller.setThreshold(0.9);
    await controller.submit(2);
    const result = controller.snapshot().result as JobResult;
    const probs = result.heatmap.features.map((f) => f.properties.probability);
    expect(Math.min(...probs)).toBeLessThan(0.9);
  });

  it("surfaces the backend's message for an unknown city", async () => {
    const controller = new PlannerController(api);
    await controller.loadCities();
    controller.setTrainCities(["Greenfield"]);
    controller.setTargetCity("Atlantis");
    expect(await controller.submit(1)).toBe(false);
    expect(controller.snapshot().errorPanel).toContain("Atlantis");
  });

  it("rejects invalid bodies with field errors", async () => {
    try {
      await api.submitPredict({
        train_cities: ["Greenfield"],
        eval_city: "Harborview",
        threshold: 1.5,
      });
      expect.unreachable("backend accepted an out-of-range threshold");
    } catch (err) {
      expect(err).toBeInstanceOf(HttpError);
      expect((err as HttpError).status).toBe(400);
      const body = (err as HttpError).body as {
        errors: { field: string }[];
      };
      expect(body.errors.some((e) => e.field.includes("threshold"))).toBe(true);
    }
  });
});
