/**
 * Entry point: builds the store and API client, wires actions to service
 * calls, and re-renders on every state change. Served from the same
 * origin as the API, so the client base is empty.
 */

import { ApiClient, ApiError, MetricKind, pollRun } from "./api.js";
import {
  AppState,
  Store,
  buildRunRequest,
  completeLaunch,
  initialApp,
  setCursor,
  setParamEdit,
  setWindow,
  toggleCompareSession,
  toggleMultiplesSession,
  toggleTechnique,
  Route,
} from "./state.js";
import { Actions, render } from "./views.js";

const api = new ApiClient((url, init) => fetch(url, init));
const store = new Store<AppState>(initialApp());

function message(err: unknown): string {
  if (err instanceof ApiError) return err.message; // service text, verbatim
  return err instanceof Error ? err.message : String(err);
}

async function loadCatalog(): Promise<void> {
  try {
    const [catalog, datasets] = await Promise.all([api.catalog(), api.datasets()]);
    store.update((s) => ({ ...s, catalog, datasets, catalogError: null }));
  } catch (err) {
    store.update((s) => ({ ...s, catalogError: message(err) }));
  }
}

async function loadSessions(): Promise<void> {
  try {
    const sessions = await api.sessions();
    store.update((s) => ({ ...s, sessions }));
  } catch (err) {
    store.update((s) => ({ ...s, catalogError: message(err) }));
  }
}

/** Re-query verdicts and both session bodies for the compare view. */
async function refreshCompare(): Promise<void> {
  const { compare } = store.get();
  if (compare.ids.length === 0) {
    store.update((s) => ({ ...s, fetched: { ...s.fetched, compare: null, compareError: null } }));
    return;
  }
  try {
    const details = await Promise.all(compare.ids.map((id) => api.session(id)));
    const detailMap = Object.fromEntries(details.map((d) => [d.name, d]));
    let cmp = null;
    if (compare.ids.length === 2) {
      cmp = await api.compareAll(compare.ids[0], compare.ids[1], compare.window ?? undefined);
    }
    store.update((s) => ({
      ...s,
      fetched: { ...s.fetched, compare: cmp, compareError: null, details: { ...s.fetched.details, ...detailMap } },
    }));
  } catch (err) {
    store.update((s) => ({ ...s, fetched: { ...s.fetched, compareError: message(err) } }));
  }
}

/** Re-query the multiples grid and the threshold fractions that label it. */
async function refreshMultiples(): Promise<void> {
  const { multiples } = store.get();
  if (multiples.ids.length === 0) {
    store.update((s) => ({
      ...s,
      fetched: { ...s.fetched, multiples: null, threshold: null, multiplesError: null },
    }));
    return;
  }
  try {
    const value = Number(multiples.thresholdText);
    const grid = await api.multiples(multiples.ids, multiples.metric, multiples.points);
    const threshold = Number.isFinite(value)
      ? await api.threshold(multiples.ids, multiples.metric, value)
      : null;
    store.update((s) => ({
      ...s,
      fetched: { ...s.fetched, multiples: grid, threshold, multiplesError: null },
    }));
  } catch (err) {
    store.update((s) => ({ ...s, fetched: { ...s.fetched, multiplesError: message(err) } }));
  }
}

async function launch(): Promise<void> {
  const { catalog, menu } = store.get();
  if (catalog === null) return;
  const built = buildRunRequest(catalog, menu);
  if (built.request === undefined) return; // button is disabled in this case
  const request = built.request;
  store.update((s) => ({ ...s, launch: { phase: "submitting", runId: null, session: null, error: null } }));
  try {
    const submitted = await api.postRun(request);
    store.update((s) => ({ ...s, launch: { ...s.launch, phase: "queued", runId: submitted.runId } }));
    const final = await pollRun(api, submitted.runId, {
      intervalMs: 1000,
      onUpdate: (st) =>
        store.update((s) =>
          st.status === "queued" || st.status === "running"
            ? { ...s, launch: { ...s.launch, phase: st.status } }
            : s,
        ),
    });
    if (final.status === "failed" || final.session === undefined) {
      store.update((s) => ({
        ...s,
        launch: { ...s.launch, phase: "failed", error: final.error ?? "run failed" },
      }));
      return;
    }
    await loadSessions();
    store.update((s) => completeLaunch(s, final.session!));
    await refreshCompare();
  } catch (err) {
    // 400/409 bodies surface verbatim here
    store.update((s) => ({ ...s, launch: { ...s.launch, phase: "failed", error: message(err) } }));
  }
}

const actions: Actions = {
  navigate(route: Route) {
    store.update((s) => ({ ...s, route }));
    if (route !== "menu") void loadSessions();
    if (route === "compare") void refreshCompare();
    if (route === "multiples") void refreshMultiples();
  },
  retryCatalog() {
    void loadCatalog();
  },
  setFamilyFilter(family) {
    store.update((s) => ({ ...s, menu: { ...s.menu, familyFilter: family } }));
  },
  setImplementedOnly(on) {
    store.update((s) => ({ ...s, menu: { ...s.menu, implementedOnly: on } }));
  },
  toggleTechnique(id) {
    store.update((s) => (s.catalog === null ? s : { ...s, menu: toggleTechnique(s.menu, s.catalog, id) }));
  },
  setParam(tid, pname, text) {
    store.update((s) => ({ ...s, menu: setParamEdit(s.menu, tid, pname, text) }));
  },
  setMenuField(field, value) {
    store.update((s) => ({ ...s, menu: { ...s.menu, [field]: value } }));
  },
  launch() {
    void launch();
  },
  toggleCompareSession(id) {
    store.update((s) => ({ ...s, compare: toggleCompareSession(s.compare, id) }));
    void refreshCompare();
  },
  setCompareMetric(metric: MetricKind) {
    store.update((s) => ({ ...s, compare: { ...s.compare, metric } }));
  },
  setLayout(layout) {
    store.update((s) => ({ ...s, compare: { ...s.compare, layout } }));
  },
  setCursor(t) {
    store.update((s) => {
      const details = s.compare.ids.map((id) => s.fetched.details[id]).filter((d) => d !== undefined);
      const maxT = Math.max(0, ...details.map((d) => (d.t.length > 0 ? d.t[d.t.length - 1] : 0)));
      return { ...s, compare: setCursor(s.compare, t, maxT) };
    });
  },
  applyWindow(t0Text, t1Text) {
    const t0 = Number(t0Text);
    const t1 = Number(t1Text);
    if (!Number.isFinite(t0) || !Number.isFinite(t1)) {
      store.update((s) => ({
        ...s,
        fetched: { ...s.fetched, compareError: "window bounds must be numbers" },
      }));
      return;
    }
    store.update((s) => ({ ...s, compare: setWindow(s.compare, t0, t1) }));
    void refreshCompare();
  },
  clearWindow() {
    store.update((s) => ({ ...s, compare: { ...s.compare, window: null } }));
    void refreshCompare();
  },
  toggleMultiplesSession(id) {
    store.update((s) => ({ ...s, multiples: toggleMultiplesSession(s.multiples, id) }));
    void refreshMultiples();
  },
  setMultiplesMetric(metric: MetricKind) {
    store.update((s) => ({ ...s, multiples: { ...s.multiples, metric } }));
    void refreshMultiples();
  },
  setMultiplesThreshold(text) {
    store.update((s) => ({ ...s, multiples: { ...s.multiples, thresholdText: text } }));
    void refreshMultiples();
  },
  setMultiplesCursor(t) {
    store.update((s) => ({ ...s, multiples: { ...s.multiples, cursorT: t } }));
  },
};

const root = document.getElementById("app");
if (root === null) throw new Error("missing #app container");
store.subscribe((state) => render(root, state, actions));
render(root, store.get(), actions);
void loadCatalog();
void loadSessions();
