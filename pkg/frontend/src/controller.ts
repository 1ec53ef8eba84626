import { describeError, pollJob, type PlannerBackend, type PollOptions } from "./api.js";
import {
  canSubmit,
  clampThreshold,
  colorDomain,
  visibleFeatures,
  type SessionState,
} from "./state.js";
import type {
  CityInfo,
  HeatmapFeature,
  JobResult,
  StationsPayload,
} from "./types.js";

export interface ControllerSnapshot {
  cities: CityInfo[];
  /** only cities that can train a model, i.e. have stations */
  trainOptions: string[];
  /** every served city can be a prediction target */
  targetOptions: string[];
  session: SessionState;
  /** top banner for connectivity problems; retryable via loadCities() */
  banner: string | null;
  /** per-job failure surface, shows the backend's message */
  errorPanel: string | null;
  hint: string | null;
  busy: boolean;
  result: JobResult | null;
  stations: StationsPayload | null;
  visible: HeatmapFeature[];
  visibleCount: number;
  colorDomain: [number, number] | null;
}

type Listener = (snapshot: ControllerSnapshot) => void;

function deepFreeze<T>(value: T): T {
  if (value && typeof value === "object" && !Object.isFrozen(value)) {
    Object.freeze(value);
    for (const key of Object.getOwnPropertyNames(value)) {
      deepFreeze((value as Record<string, unknown>)[key]);
    }
  }
  return value;
}

/**
 * Headless session logic: selections, one-in-flight job submission,
 * polling, and client-side threshold filtering over the held result.
 * Job results are deep-frozen on arrival and only ever re-read.
 */
export class PlannerController {
  private cities: CityInfo[] = [];
  private session: SessionState = {
    selectedTrainCities: [],
    targetCity: null,
    threshold: 0.5,
    activeJob: null,
  };
  private banner: string | null = null;
  private errorPanel: string | null = null;
  private result: JobResult | null = null;
  private stations: StationsPayload | null = null;
  private loaded = false;

  constructor(
    private readonly api: PlannerBackend,
    private readonly listener: Listener = () => {},
    private readonly pollOptions: PollOptions = {},
  ) {}

  snapshot(): ControllerSnapshot {
    const visible = this.result
      ? visibleFeatures(this.result.heatmap, this.session.threshold)
      : [];
    return {
      cities: this.cities,
      trainOptions: this.cities.filter((c) => c.stations > 0).map((c) => c.name),
      targetOptions: this.cities.map((c) => c.name),
      session: { ...this.session, selectedTrainCities: [...this.session.selectedTrainCities] },
      banner: this.banner,
      errorPanel: this.errorPanel,
      hint: this.hintText(),
      busy: this.session.activeJob !== null,
      result: this.result,
      stations: this.stations,
      visible,
      visibleCount: visible.length,
      colorDomain: this.result ? colorDomain(this.result.heatmap) : null,
    };
  }

  private hintText(): string | null {
    if (this.loaded && this.cities.length === 0) {
      return "no cities are served; prepare snapshots and restart the backend";
    }
    if (this.session.selectedTrainCities.length === 0) {
      return "pick at least one reference city";
    }
    if (this.session.targetCity === null) {
      return "pick a target city";
    }
    return null;
  }

  private notify(): void {
    this.listener(this.snapshot());
  }

  async loadCities(): Promise<void> {
    try {
      this.cities = await this.api.listCities();
      this.banner = null;
      this.loaded = true;
    } catch (err) {
      this.banner = `backend unreachable: ${describeError(err)}`;
    }
    this.notify();
  }

  setTrainCities(names: string[]): void {
    if (sameNames(names, this.session.selectedTrainCities)) return;
    this.session.selectedTrainCities = [...names];
    this.invalidateResult();
    this.notify();
  }

  setTargetCity(name: string | null): void {
    if (name === this.session.targetCity) return;
    this.session.targetCity = name;
    this.invalidateResult();
    this.notify();
  }

  /** Re-filters the held result locally; never talks to the backend. */
  setThreshold(value: number): void {
    this.session.threshold = clampThreshold(value);
    this.notify();
  }

  /** A new selection means any held result is for the wrong question. */
  private invalidateResult(): void {
    this.result = null;
    this.stations = null;
    this.errorPanel = null;
  }

  canSubmit(): boolean {
    return canSubmit(this.session);
  }

  /**
   * Post the job, poll it to completion, then fetch the target's
   * stations. Returns false without side effects when a job is already
   * in flight or the selection is incomplete.
   */
  async submit(iterations?: number): Promise<boolean> {
    if (!this.canSubmit()) return false;
    const target = this.session.targetCity as string;
    this.errorPanel = null;
    this.invalidateResult();

    let jobId: string;
    try {
      const accepted = await this.api.submitPredict({
        train_cities: [...this.session.selectedTrainCities],
        eval_city: target,
        threshold: this.session.threshold,
        ...(iterations !== undefined ? { iterations } : {}),
      });
      jobId = accepted.job_id;
    } catch (err) {
      this.errorPanel = describeError(err);
      this.notify();
      return false;
    }

    this.session.activeJob = jobId;
    this.notify();
    try {
      const settled = await pollJob(this.api, jobId, this.pollOptions);
      if (settled.status === "failed") {
        this.errorPanel = settled.error ?? "job failed";
        return false;
      }
      this.result = deepFreeze(settled.result as JobResult);
      this.stations = deepFreeze(await this.api.fetchStations(target));
      return true;
    } catch (err) {
      this.errorPanel = describeError(err);
      return false;
    } finally {
      this.session.activeJob = null;
      this.notify();
    }
  }
}

function sameNames(a: string[], b: string[]): boolean {
  return a.length === b.length && a.every((name, i) => name === b[i]);
}
