import { PlannerApi } from "./api.js";
import { PlannerController, type ControllerSnapshot } from "./controller.js";
import { renderLegend, renderMap } from "./render.js";
import { THRESHOLD_MAX, THRESHOLD_MIN } from "./state.js";

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node as T;
}

const api = new PlannerApi("");
const controller = new PlannerController(api, render);

const trainBox = el<HTMLDivElement>("train-cities");
const targetSelect = el<HTMLSelectElement>("target-city");
const slider = el<HTMLInputElement>("threshold");
const sliderValue = el<HTMLSpanElement>("threshold-value");
const submitButton = el<HTMLButtonElement>("submit");
const banner = el<HTMLDivElement>("banner");
const errorPanel = el<HTMLDivElement>("error-panel");
const hint = el<HTMLSpanElement>("hint");
const badge = el<HTMLSpanElement>("count-badge");
const status = el<HTMLSpanElement>("status");
const map = el<HTMLDivElement>("map");
const legend = el<HTMLDivElement>("legend");
const metrics = el<HTMLDivElement>("metrics");

slider.min = String(THRESHOLD_MIN);
slider.max = String(THRESHOLD_MAX);
slider.step = "0.01";
slider.value = "0.5";

let lastOptionsKey = "";

function render(s: ControllerSnapshot): void {
  const optionsKey = s.cities.map((c) => `${c.name}:${c.stations}`).join("|");
  if (optionsKey !== lastOptionsKey) {
    lastOptionsKey = optionsKey;
    trainBox.replaceChildren(
      ...s.trainOptions.map((name) => {
        const label = document.createElement("label");
        const box = document.createElement("input");
        box.type = "checkbox";
        box.value = name;
        box.addEventListener("change", () => {
          const picked = [
            ...trainBox.querySelectorAll<HTMLInputElement>("input:checked"),
          ].map((n) => n.value);
          controller.setTrainCities(picked);
        });
        label.append(box, ` ${name}`);
        return label;
      }),
    );
    targetSelect.replaceChildren(
      new Option("pick a city", "", true, true),
      ...s.targetOptions.map((name) => new Option(name, name)),
    );
    targetSelect.options[0]!.disabled = true;
  }

  banner.hidden = s.banner === null;
  banner.textContent = s.banner ?? "";
  if (s.banner !== null) {
    const retry = document.createElement("button");
    retry.textContent = "retry";
    retry.addEventListener("click", () => void controller.loadCities());
    banner.append(" ", retry);
  }

  errorPanel.hidden = s.errorPanel === null;
  errorPanel.textContent = s.errorPanel ?? "";

  hint.textContent = s.hint ?? "";
  sliderValue.textContent = s.session.threshold.toFixed(2);
  submitButton.disabled = !controller.canSubmit();
  status.textContent = s.busy ? `running ${s.session.activeJob}...` : "";
  badge.textContent = String(s.visibleCount);

  if (s.result && s.colorDomain) {
    map.innerHTML = renderMap(s.visible, s.stations?.features ?? [], {
      colorDomain: s.colorDomain,
    });
    legend.innerHTML = renderLegend(s.colorDomain[0], s.colorDomain[1]);
    const m = s.result.metrics;
    metrics.textContent =
      `${s.result.eval_city}: accuracy ${m.accuracy.toFixed(3)}, ` +
      `precision ${m.precision.toFixed(3)}, recall ${m.recall.toFixed(3)}, ` +
      `F1 ${m.f1.toFixed(3)} over ${s.result.iterations} iterations`;
  } else {
    map.innerHTML = "";
    legend.innerHTML = "";
    metrics.textContent = "";
  }
}

targetSelect.addEventListener("change", () => {
  controller.setTargetCity(targetSelect.value || null);
});
slider.addEventListener("input", () => {
  controller.setThreshold(Number(slider.value));
});
submitButton.addEventListener("click", () => void controller.submit());

void controller.loadCities();
