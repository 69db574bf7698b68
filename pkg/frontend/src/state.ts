/**
 * Dashboard state: one store, updates applied one at a time.
 *
 * All view state lives in a single AppState value. Transition helpers are
 * pure functions so they can be tested without a DOM. Nothing in here
 * computes analytics; numbers shown in views always originate from a
 * service response held in the fetched-data slots.
 */

import {
  Catalog,
  CompareAllView,
  MetricKind,
  MultiplesView,
  RunRequest,
  SessionDetail,
  SessionListEntry,
  TechniqueInfo,
  ThresholdView,
} from "./api.js";

export type Listener<T> = (state: T) => void;

/**
 * Minimal observable container. Updates queue while listeners run, so a
 * listener that triggers another update never sees interleaved state:
 * each update and its notification complete before the next begins.
 */
export class Store<T> {
  private listeners = new Set<Listener<T>>();
  private queue: Array<(s: T) => T> = [];
  private draining = false;

  constructor(private state: T) {}

  get(): T {
    return this.state;
  }

  subscribe(fn: Listener<T>): () => void {
    this.listeners.add(fn);
    return () => this.listeners.delete(fn);
  }

  update(fn: (s: T) => T): void {
    this.queue.push(fn);
    if (this.draining) return;
    this.draining = true;
    try {
      while (this.queue.length > 0) {
        const step = this.queue.shift()!;
        this.state = step(this.state);
        for (const listener of [...this.listeners]) listener(this.state);
      }
    } finally {
      this.draining = false;
    }
  }
}

// -- optimization menu ---------------------------------------------------

export interface MenuState {
  familyFilter: string | null;
  implementedOnly: boolean;
  /** Selected technique ids; always a subset of the catalog. */
  selected: string[];
  /** Text being edited per technique/parameter; absent means default. */
  paramEdits: Record<string, Record<string, string>>;
  runName: string;
  description: string;
  dataset: string;
  template: string;
  timestep: string;
}

export function initialMenu(): MenuState {
  return {
    familyFilter: null,
    implementedOnly: false,
    selected: [],
    paramEdits: {},
    runName: "",
    description: "",
    dataset: "synthetic:10000",
    template: "t2",
    timestep: "0.016666666666666666",
  };
}

export function visibleTechniques(catalog: Catalog, menu: MenuState): TechniqueInfo[] {
  return catalog.techniques.filter((t) => {
    if (menu.familyFilter !== null && t.family !== menu.familyFilter) return false;
    if (menu.implementedOnly && !t.implemented) return false;
    return true;
  });
}

export function toggleTechnique(menu: MenuState, catalog: Catalog, id: string): MenuState {
  if (!catalog.techniques.some((t) => t.id === id)) return menu;
  const selected = menu.selected.includes(id)
    ? menu.selected.filter((s) => s !== id)
    : [...menu.selected, id];
  return { ...menu, selected };
}

export function setParamEdit(menu: MenuState, tid: string, pname: string, text: string): MenuState {
  const edits = { ...menu.paramEdits, [tid]: { ...(menu.paramEdits[tid] ?? {}), [pname]: text } };
  return { ...menu, paramEdits: edits };
}

/** Parse one parameter text field according to its declared type. */
export function parseParamValue(type: string, text: string): { value?: unknown; error?: string } {
  const trimmed = text.trim();
  if (trimmed === "") return { error: "value required" };
  if (type === "floats") {
    const parts = trimmed.split(",").map((p) => Number(p.trim()));
    if (parts.some((p) => !Number.isFinite(p))) return { error: "expected comma-separated numbers" };
    return { value: parts };
  }
  if (type === "int" || type === "pow2") {
    const n = Number(trimmed);
    if (!Number.isInteger(n)) return { error: "expected an integer" };
    return { value: n };
  }
  // float and unit; range rules are the service's call
  const n = Number(trimmed);
  if (!Number.isFinite(n)) return { error: "expected a number" };
  return { value: n };
}

/** Session names become file names on the service side; keep them tame. */
export const RUN_NAME_RE = /^[A-Za-z0-9][A-Za-z0-9._-]*$/;

export interface RunRequestResult {
  request?: RunRequest;
  errors: string[];
}

/**
 * Assemble the POST /runs body from the menu. Returns errors instead of a
 * request while any field is invalid; the launch button stays disabled
 * until errors is empty. The enabled list is sent sorted, matching the
 * normalized profile the service stores.
 */
export function buildRunRequest(catalog: Catalog, menu: MenuState): RunRequestResult {
  const errors: string[] = [];
  if (!menu.dataset.trim()) errors.push("dataset is required");
  if (!menu.template.trim()) errors.push("template is required");
  if (menu.runName !== "" && !RUN_NAME_RE.test(menu.runName)) {
    errors.push("run name must be letters, digits, dot, dash, underscore");
  }
  const timestep = Number(menu.timestep);
  if (!Number.isFinite(timestep) || timestep <= 0) errors.push("timestep must be a positive number");

  const params: Record<string, Record<string, unknown>> = {};
  for (const tid of menu.selected) {
    const tech = catalog.techniques.find((t) => t.id === tid);
    if (tech === undefined) {
      errors.push(`unknown technique ${tid}`);
      continue;
    }
    const edits = menu.paramEdits[tid] ?? {};
    for (const spec of tech.parameters) {
      const text = edits[spec.name];
      if (text === undefined) continue; // untouched, service fills the default
      const parsed = parseParamValue(spec.type, text);
      if (parsed.error !== undefined) {
        errors.push(`${tid}.${spec.name}: ${parsed.error}`);
        continue;
      }
      (params[tid] ??= {})[spec.name] = parsed.value;
    }
  }
  if (errors.length > 0) return { errors };
  const name = menu.runName || `run-${Date.now().toString(36)}`;
  return {
    errors: [],
    request: {
      dataset: menu.dataset.trim(),
      template: menu.template.trim(),
      name,
      description: menu.description,
      timestep,
      profile: { name, enabled: [...menu.selected].sort(), params },
    },
  };
}

// -- launch lifecycle ------------------------------------------------------

export type LaunchPhase = "idle" | "submitting" | "queued" | "running" | "done" | "failed";

export interface LaunchState {
  phase: LaunchPhase;
  runId: string | null;
  session: string | null;
  error: string | null;
}

export function initialLaunch(): LaunchState {
  return { phase: "idle", runId: null, session: null, error: null };
}

/**
 * A finished run lands the user on the comparison view with the fresh
 * session preselected, keeping at most one previously selected session
 * as the other side.
 */
export function completeLaunch(app: AppState, session: string): AppState {
  const others = app.compare.ids.filter((s) => s !== session);
  const ids = [session, ...others].slice(0, 2);
  return {
    ...app,
    route: "compare",
    launch: { ...app.launch, phase: "done", session },
    compare: { ...app.compare, ids },
  };
}

// -- comparison view -------------------------------------------------------

export interface ComparisonViewState {
  /** At most two session ids; adding a third drops the oldest. */
  ids: string[];
  metric: MetricKind;
  /** One cursor time shared by every chart in the view. */
  cursorT: number;
  window: { t0: number; t1: number } | null;
  layout: "overlay" | "side";
}

export function initialCompare(): ComparisonViewState {
  return { ids: [], metric: "fps", cursorT: 0, window: null, layout: "overlay" };
}

export function toggleCompareSession(state: ComparisonViewState, id: string): ComparisonViewState {
  if (state.ids.includes(id)) {
    return { ...state, ids: state.ids.filter((s) => s !== id) };
  }
  const ids = [...state.ids, id];
  while (ids.length > 2) ids.shift();
  return { ...state, ids };
}

export function setWindow(state: ComparisonViewState, t0: number, t1: number): ComparisonViewState {
  if (!Number.isFinite(t0) || !Number.isFinite(t1)) return state;
  const lo = Math.min(t0, t1);
  const hi = Math.max(t0, t1);
  return { ...state, window: { t0: lo, t1: hi } };
}

export function setCursor(state: ComparisonViewState, t: number, maxT: number): ComparisonViewState {
  const clamped = Math.min(Math.max(t, 0), maxT);
  return { ...state, cursorT: clamped };
}

// -- small multiples view ----------------------------------------------------

export interface MultiplesViewState {
  ids: string[];
  metric: MetricKind;
  thresholdText: string;
  points: number;
  /** One slider position shared by every tile. */
  cursorT: number;
}

export function initialMultiples(): MultiplesViewState {
  return { ids: [], metric: "fps", thresholdText: "30", points: 60, cursorT: 0 };
}

export function toggleMultiplesSession(state: MultiplesViewState, id: string): MultiplesViewState {
  const ids = state.ids.includes(id)
    ? state.ids.filter((s) => s !== id)
    : [...state.ids, id];
  return { ...state, ids };
}

// -- whole app ---------------------------------------------------------------

export type Route = "menu" | "compare" | "multiples";

export interface AppState {
  route: Route;
  catalog: Catalog | null;
  catalogError: string | null;
  sessions: SessionListEntry[];
  datasets: { id: string; kind: string; description: string }[];
  menu: MenuState;
  launch: LaunchState;
  compare: ComparisonViewState;
  multiples: MultiplesViewState;
  /** Latest service responses backing the current views. */
  fetched: {
    compare: CompareAllView | null;
    compareError: string | null;
    details: Record<string, SessionDetail>;
    threshold: ThresholdView | null;
    multiples: MultiplesView | null;
    multiplesError: string | null;
  };
}

export function initialApp(): AppState {
  return {
    route: "menu",
    catalog: null,
    catalogError: null,
    sessions: [],
    datasets: [],
    menu: initialMenu(),
    launch: initialLaunch(),
    compare: initialCompare(),
    multiples: initialMultiples(),
    fetched: {
      compare: null,
      compareError: null,
      details: {},
      threshold: null,
      multiples: null,
      multiplesError: null,
    },
  };
}
