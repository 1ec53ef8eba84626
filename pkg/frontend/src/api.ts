import type {
  CitiesPayload,
  CityInfo,
  JobSnapshot,
  JobStatus,
  PredictRequest,
  StationsPayload,
} from "./types.js";

/** Non-2xx response, carrying the decoded body for error display. */
export class HttpError extends Error {
  constructor(
    readonly status: number,
    readonly body: unknown,
    message: string,
  ) {
    super(message);
    this.name = "HttpError";
  }
}

/** Human-readable message out of the backend's error body shapes. */
export function describeError(err: unknown): string {
  if (err instanceof HttpError) {
    const detail = (err.body as { detail?: unknown } | null)?.detail;
    if (typeof detail === "string") return detail;
    if (detail && typeof detail === "object") {
      const d = detail as { message?: string };
      if (d.message) return d.message;
    }
    const errors = (err.body as { errors?: { field: string; message: string }[] })
      ?.errors;
    if (Array.isArray(errors) && errors.length > 0) {
      return errors.map((e) => `${e.field}: ${e.message}`).join("; ");
    }
    return err.message;
  }
  return err instanceof Error ? err.message : String(err);
}

/** What the session logic needs from the backend; PlannerApi is the HTTP one. */
export interface PlannerBackend {
  listCities(): Promise<CityInfo[]>;
  fetchStations(city: string): Promise<StationsPayload>;
  submitPredict(req: PredictRequest): Promise<{ job_id: string; status: JobStatus }>;
  fetchJob(id: string): Promise<JobSnapshot>;
}

export class PlannerApi implements PlannerBackend {
  constructor(
    private readonly baseUrl: string = "",
    private readonly fetchFn: typeof fetch = fetch,
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const resp = await this.fetchFn(`${this.baseUrl}${path}`, init);
    let body: unknown = null;
    try {
      body = await resp.json();
    } catch {
      // non-JSON body: keep null, status is still meaningful
    }
    if (!resp.ok) {
      throw new HttpError(resp.status, body, `${init?.method ?? "GET"} ${path} -> ${resp.status}`);
    }
    return body as T;
  }

  async listCities(): Promise<CityInfo[]> {
    const payload = await this.request<CitiesPayload>("/cities");
    return payload.cities;
  }

  async fetchStations(city: string): Promise<StationsPayload> {
    return this.request<StationsPayload>(`/stations/${encodeURIComponent(city)}`);
  }

  async submitPredict(
    req: PredictRequest,
  ): Promise<{ job_id: string; status: JobStatus }> {
    return this.request("/predict", {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(req),
    });
  }

  async fetchJob(id: string): Promise<JobSnapshot> {
    return this.request<JobSnapshot>(`/jobs/${encodeURIComponent(id)}`);
  }
}

export interface PollOptions {
  baseMs?: number;
  factor?: number;
  maxMs?: number;
  timeoutMs?: number;
  sleep?: (ms: number) => Promise<void>;
  onWait?: (ms: number) => void;
}

const realSleep = (ms: number) => new Promise<void>((r) => setTimeout(r, ms));

/** Poll until the job settles, backing off geometrically between polls. */
export async function pollJob(
  api: Pick<PlannerBackend, "fetchJob">,
  jobId: string,
  opts: PollOptions = {},
): Promise<JobSnapshot> {
  const base = opts.baseMs ?? 250;
  const factor = opts.factor ?? 1.5;
  const max = opts.maxMs ?? 4000;
  const timeout = opts.timeoutMs ?? 120_000;
  const sleep = opts.sleep ?? realSleep;

  let waited = 0;
  let attempt = 0;
  for (;;) {
    const snapshot = await api.fetchJob(jobId);
    if (snapshot.status === "done" || snapshot.status === "failed") {
      return snapshot;
    }
    if (waited >= timeout) {
      throw new Error(`job ${jobId} still ${snapshot.status} after ${timeout}ms`);
    }
    const wait = Math.min(max, base * factor ** attempt);
    opts.onWait?.(wait);
    await sleep(wait);
    waited += wait;
    attempt += 1;
  }
}
