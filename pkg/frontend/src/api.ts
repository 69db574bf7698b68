/**
 * Typed client for the vizlab HTTP service.
 *
 * Every displayed number on the dashboard must come out of a service
 * response, so each call returns both a typed view and the raw parse
 * (with number tokens preserved) of the exact body text. The fetch
 * function is injectable so tests can intercept requests.
 */

import { RawValue, parseRaw, get, opt, num, numToken, str, bool, arr } from "./rawjson.js";

export type MetricKind = "fps" | "frame_time_ms" | "cpu_load_pct" | "ram_mb" | "gpu_frame_time_ms";

export const METRIC_KINDS: readonly MetricKind[] = [
  "fps", "frame_time_ms", "cpu_load_pct", "ram_mb", "gpu_frame_time_ms",
];

export const METRIC_LABELS: Record<MetricKind, string> = {
  fps: "FPS",
  frame_time_ms: "Frame time (ms)",
  cpu_load_pct: "CPU load (%)",
  ram_mb: "RAM (MB)",
  gpu_frame_time_ms: "GPU frame time (ms)",
};

export interface MinimalResponse {
  status: number;
  text(): Promise<string>;
}

export interface FetchLike {
  (url: string, init?: { method?: string; headers?: Record<string, string>; body?: string }): Promise<MinimalResponse>;
}

export class ApiError extends Error {
  constructor(readonly status: number, message: string) {
    super(message);
    this.name = "ApiError";
  }
}

export interface FamilyInfo {
  id: string;
  displayName: string;
  /** Normalized RGB floats exactly as the catalog reports them. */
  color: [number, number, number];
  techniqueCount: number;
}

export interface ParamSpec {
  name: string;
  type: string;
  defaultText: string;
}

export interface TechniqueInfo {
  id: string;
  family: string;
  displayName: string;
  description: string;
  implemented: boolean;
  radar: Record<MetricKind, number>;
  parameters: ParamSpec[];
}

export interface Catalog {
  families: FamilyInfo[];
  techniques: TechniqueInfo[];
}

export interface SessionListEntry {
  name: string;
  description: string;
  dataset: string;
  template: string | null;
  optimizations: string[];
  sampleCount: number;
  duration: number;
}

export interface VerdictView {
  metric: MetricKind;
  winner: "A" | "B" | "tie";
  meanA: number;
  meanB: number;
  /** Byte-exact mean tokens from the response body. */
  meanAToken: string;
  meanBToken: string;
}

export interface CompareAllView {
  a: string;
  b: string;
  verdicts: VerdictView[];
  body: string;
}

export interface ThresholdView {
  metric: MetricKind;
  threshold: number;
  sessions: string[];
  fractions: number[];
  fractionTokens: string[];
  body: string;
}

export interface MultiplesSeriesView {
  name: string;
  t: number[];
  values: number[];
  valueTokens: string[];
}

export interface MultiplesView {
  metric: MetricKind;
  targetPoints: number;
  series: MultiplesSeriesView[];
  body: string;
}

export interface SessionDetail {
  name: string;
  dataset: string;
  template: string | null;
  optimizations: string[];
  sampleCount: number;
  t: number[];
  metric: (kind: MetricKind) => number[];
  /** Byte-exact sample tokens, aligned with metric(kind). */
  metricTokens: (kind: MetricKind) => string[];
  body: string;
}

export interface RunRequest {
  dataset: string;
  template: string;
  name: string;
  description: string;
  timestep: number;
  profile: { name: string; enabled: string[]; params: Record<string, unknown> };
}

export interface RunStatus {
  runId: string;
  status: "queued" | "running" | "done" | "failed";
  name: string;
  session?: string;
  error?: string;
}

function requireMetric(name: string): MetricKind {
  if (!(METRIC_KINDS as readonly string[]).includes(name)) {
    throw new Error(`unknown metric '${name}' in response`);
  }
  return name as MetricKind;
}

function verdictFrom(node: RawValue): VerdictView {
  const winner = str(node, "winner");
  if (winner !== "A" && winner !== "B" && winner !== "tie") {
    throw new Error(`unexpected winner '${winner}'`);
  }
  return {
    metric: requireMetric(str(node, "metric")),
    winner,
    meanA: num(node, "mean_a"),
    meanB: num(node, "mean_b"),
    meanAToken: numToken(node, "mean_a"),
    meanBToken: numToken(node, "mean_b"),
  };
}

export class ApiClient {
  constructor(private readonly fetchFn: FetchLike, readonly base: string = "") {}

  private async request(path: string, init?: Parameters<FetchLike>[1]): Promise<{ status: number; body: string; doc: RawValue }> {
    const res = await this.fetchFn(this.base + path, init);
    const body = await res.text();
    return { status: res.status, body, doc: parseRaw(body) };
  }

  private async getOk(path: string): Promise<{ body: string; doc: RawValue }> {
    const { status, body, doc } = await this.request(path);
    if (status !== 200) throw new ApiError(status, errorMessage(doc, body));
    return { body, doc };
  }

  async catalog(): Promise<Catalog> {
    const { doc } = await this.getOk("/catalog");
    const families = arr(doc, "families").map((f): FamilyInfo => {
      const color = arr(f, "color").map((c) => {
        if (c.kind !== "number") throw new Error("color channel is not a number");
        return c.value;
      });
      if (color.length !== 3) throw new Error("color must have three channels");
      return {
        id: str(f, "id"),
        displayName: str(f, "display_name"),
        color: [color[0], color[1], color[2]],
        techniqueCount: num(f, "technique_count"),
      };
    });
    const techniques = arr(doc, "techniques").map((t): TechniqueInfo => {
      const radar = {} as Record<MetricKind, number>;
      for (const kind of METRIC_KINDS) radar[kind] = num(t, "radar", kind);
      return {
        id: str(t, "id"),
        family: str(t, "family"),
        displayName: str(t, "display_name"),
        description: str(t, "description"),
        implemented: bool(t, "implemented"),
        radar,
        parameters: arr(t, "parameters").map((p) => ({
          name: str(p, "name"),
          type: str(p, "type"),
          defaultText: defaultAsText(get(p, "default")),
        })),
      };
    });
    return { families, techniques };
  }

  async datasets(): Promise<{ id: string; kind: string; description: string }[]> {
    const { doc } = await this.getOk("/datasets");
    return arr(doc, "datasets").map((d) => ({
      id: str(d, "id"),
      kind: str(d, "kind"),
      description: str(d, "description"),
    }));
  }

  async sessions(): Promise<SessionListEntry[]> {
    const { doc } = await this.getOk("/sessions");
    return arr(doc, "sessions").map((s) => ({
      name: str(s, "name"),
      description: str(s, "description"),
      dataset: str(s, "dataset"),
      template: get(s, "template").kind === "null" ? null : str(s, "template"),
      optimizations: arr(s, "optimizations").map((o) => {
        if (o.kind !== "string") throw new Error("optimization id is not a string");
        return o.value;
      }),
      sampleCount: num(s, "sample_count"),
      duration: num(s, "duration"),
    }));
  }

  async session(name: string): Promise<SessionDetail> {
    const { body, doc } = await this.getOk(`/sessions/${encodeURIComponent(name)}`);
    const samples = arr(doc, "samples");
    return {
      name: str(doc, "name"),
      dataset: str(doc, "dataset"),
      template: get(doc, "template").kind === "null" ? null : str(doc, "template"),
      optimizations: arr(doc, "optimizations").map((o) => {
        if (o.kind !== "string") throw new Error("optimization id is not a string");
        return o.value;
      }),
      sampleCount: samples.length,
      t: samples.map((s) => num(s, "t")),
      metric: (kind) => samples.map((s) => num(s, kind)),
      metricTokens: (kind) => samples.map((s) => numToken(s, kind)),
      body,
    };
  }

  async compareAll(a: string, b: string, window?: { t0: number; t1: number }): Promise<CompareAllView> {
    const q = new URLSearchParams({ a, b });
    if (window) {
      q.set("t0", String(window.t0));
      q.set("t1", String(window.t1));
    }
    const { body, doc } = await this.getOk(`/analytics/compare?${q.toString()}`);
    return {
      a: str(doc, "a"),
      b: str(doc, "b"),
      verdicts: arr(doc, "verdicts").map(verdictFrom),
      body,
    };
  }

  async threshold(ids: string[], metric: MetricKind, value: number): Promise<ThresholdView> {
    const q = new URLSearchParams({ ids: ids.join(","), metric, value: String(value) });
    const { body, doc } = await this.getOk(`/analytics/threshold?${q.toString()}`);
    const fractionNodes = arr(doc, "fractions");
    return {
      metric: requireMetric(str(doc, "metric")),
      threshold: num(doc, "threshold"),
      sessions: arr(doc, "sessions").map((s) => {
        if (s.kind !== "string") throw new Error("session id is not a string");
        return s.value;
      }),
      fractions: fractionNodes.map((f) => {
        if (f.kind !== "number") throw new Error("fraction is not a number");
        return f.value;
      }),
      fractionTokens: fractionNodes.map((f) => {
        if (f.kind !== "number") throw new Error("fraction is not a number");
        return f.raw;
      }),
      body,
    };
  }

  async multiples(ids: string[], metric: MetricKind, points?: number): Promise<MultiplesView> {
    const q = new URLSearchParams({ ids: ids.join(","), metric });
    if (points !== undefined) q.set("points", String(points));
    const { body, doc } = await this.getOk(`/analytics/multiples?${q.toString()}`);
    return {
      metric: requireMetric(str(doc, "metric")),
      targetPoints: num(doc, "target_points"),
      series: arr(doc, "series").map((s): MultiplesSeriesView => {
        const valueNodes = arr(s, "values");
        return {
          name: str(s, "name"),
          t: arr(s, "t").map((tv) => {
            if (tv.kind !== "number") throw new Error("t is not a number");
            return tv.value;
          }),
          values: valueNodes.map((v) => {
            if (v.kind !== "number") throw new Error("value is not a number");
            return v.value;
          }),
          valueTokens: valueNodes.map((v) => {
            if (v.kind !== "number") throw new Error("value is not a number");
            return v.raw;
          }),
        };
      }),
      body,
    };
  }

  /** Submit a benchmark run. 202 resolves; 400/409 reject with the service message verbatim. */
  async postRun(req: RunRequest): Promise<RunStatus> {
    const { status, body, doc } = await this.request("/runs", {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(req),
    });
    if (status !== 202) throw new ApiError(status, errorMessage(doc, body));
    return runStatusFrom(doc);
  }

  async run(runId: string): Promise<RunStatus> {
    const { doc } = await this.getOk(`/runs/${encodeURIComponent(runId)}`);
    return runStatusFrom(doc);
  }
}

function runStatusFrom(doc: RawValue): RunStatus {
  const status = str(doc, "status");
  if (status !== "queued" && status !== "running" && status !== "done" && status !== "failed") {
    throw new Error(`unexpected run status '${status}'`);
  }
  const session = opt(doc, "session");
  const error = opt(doc, "error");
  return {
    runId: str(doc, "run_id"),
    status,
    name: str(doc, "name"),
    session: session && session.kind === "string" ? session.value : undefined,
    error: error && error.kind === "string" ? error.value : undefined,
  };
}

function errorMessage(doc: RawValue, body: string): string {
  const node = opt(doc, "error");
  return node && node.kind === "string" ? node.value : body.trim();
}

function defaultAsText(node: RawValue): string {
  switch (node.kind) {
    case "number":
      return node.raw;
    case "string":
      return node.value;
    case "boolean":
      return node.value ? "true" : "false";
    case "null":
      return "";
    case "array":
      return node.items.map(defaultAsText).join(", ");
    case "object":
      return "";
  }
}

/**
 * Drive a submitted run to completion by polling its status.
 *
 * Polls once a second by default; the sleep function is injectable so
 * tests can run the loop synchronously.
 */
export async function pollRun(
  api: ApiClient,
  runId: string,
  opts: { intervalMs?: number; sleep?: (ms: number) => Promise<void>; onUpdate?: (s: RunStatus) => void; maxPolls?: number } = {},
): Promise<RunStatus> {
  const intervalMs = opts.intervalMs ?? 1000;
  const sleep = opts.sleep ?? ((ms: number) => new Promise<void>((r) => setTimeout(r, ms)));
  const maxPolls = opts.maxPolls ?? 600;
  for (let i = 0; i < maxPolls; i += 1) {
    const status = await api.run(runId);
    opts.onUpdate?.(status);
    if (status.status === "done" || status.status === "failed") return status;
    await sleep(intervalMs);
  }
  throw new Error(`run ${runId} did not finish after ${maxPolls} polls`);
}
