/**
 * DOM rendering. Each state change re-renders the active view from
 * scratch; inputs carry stable ids so focus can be restored afterwards.
 * All numeric text placed into the DOM comes from the view models, which
 * carry service response bytes.
 */

import { MetricKind, METRIC_KINDS, METRIC_LABELS, TechniqueInfo } from "./api.js";
import { LineChartModel, pathFrom, polygonAttr, radarChart } from "./charts.js";
import { AppState, buildRunRequest, Route } from "./state.js";
import {
  compareCharts,
  familyGroups,
  multiplesTiles,
  thresholdLabels,
  verdictBadges,
} from "./viewmodels.js";

export interface Actions {
  navigate(route: Route): void;
  retryCatalog(): void;
  setFamilyFilter(family: string | null): void;
  setImplementedOnly(on: boolean): void;
  toggleTechnique(id: string): void;
  setParam(tid: string, pname: string, text: string): void;
  setMenuField(field: "runName" | "description" | "dataset" | "template" | "timestep", value: string): void;
  launch(): void;
  toggleCompareSession(id: string): void;
  setCompareMetric(metric: MetricKind): void;
  setLayout(layout: "overlay" | "side"): void;
  setCursor(t: number): void;
  applyWindow(t0Text: string, t1Text: string): void;
  clearWindow(): void;
  toggleMultiplesSession(id: string): void;
  setMultiplesMetric(metric: MetricKind): void;
  setMultiplesThreshold(text: string): void;
  setMultiplesCursor(t: number): void;
}

type Attrs = Record<string, string | boolean | ((ev: Event) => void)>;

function el(tag: string, attrs: Attrs = {}, children: (Node | string)[] = []): HTMLElement {
  const node = document.createElement(tag);
  for (const [key, value] of Object.entries(attrs)) {
    if (typeof value === "function") {
      (node as unknown as Record<string, unknown>)[key] = value;
    } else if (typeof value === "boolean") {
      if (key === "checked") (node as HTMLInputElement).checked = value;
      else if (key === "disabled") (node as HTMLButtonElement).disabled = value;
      else if (value) node.setAttribute(key, "");
    } else {
      if (key === "value") (node as HTMLInputElement).value = value;
      else node.setAttribute(key, value);
    }
  }
  for (const child of children) {
    node.append(child instanceof Node ? child : document.createTextNode(child));
  }
  return node;
}

function svgContainer(markup: string, cls: string, viewW: number, viewH: number): HTMLElement {
  const wrap = el("div", { class: cls });
  wrap.innerHTML =
    `<svg viewBox="0 0 ${viewW} ${viewH}" preserveAspectRatio="xMidYMid meet" ` +
    `xmlns="http://www.w3.org/2000/svg">${markup}</svg>`;
  return wrap;
}

function esc(text: string): string {
  return text.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;").replace(/"/g, "&quot;");
}

// -- shared chart markup -----------------------------------------------------

function lineChartSvg(model: LineChartModel, extra: string = ""): string {
  const r = model.rect;
  const axis =
    `<line x1="${r.padL}" y1="${r.padT}" x2="${r.padL}" y2="${r.h - r.padB}" class="axis"/>` +
    `<line x1="${r.padL}" y1="${r.h - r.padB}" x2="${r.w - r.padR}" y2="${r.h - r.padB}" class="axis"/>`;
  const tickT = model.ticksT
    .map(
      (t) =>
        `<text x="${t.x.toFixed(1)}" y="${r.h - 6}" class="tick" text-anchor="middle">${t.v.toFixed(1)}</text>`,
    )
    .join("");
  const tickV = model.ticksV
    .map(
      (t) =>
        `<text x="${r.padL - 4}" y="${(t.y + 3).toFixed(1)}" class="tick" text-anchor="end">${fmtTick(t.v)}</text>`,
    )
    .join("");
  const paths = model.series
    .map((s) => `<path d="${pathFrom(s.points)}" fill="none" stroke="${s.color}" stroke-width="1.5"/>`)
    .join("");
  const markers = model.series
    .map(
      (s) =>
        `<circle cx="${s.cursorPoint.x.toFixed(2)}" cy="${s.cursorPoint.y.toFixed(2)}" r="3.5" ` +
        `fill="${s.color}" class="cursor-marker" data-t="${model.cursor.t}"/>`,
    )
    .join("");
  const cursor =
    `<line x1="${model.cursor.x.toFixed(2)}" y1="${r.padT}" x2="${model.cursor.x.toFixed(2)}" ` +
    `y2="${r.h - r.padB}" class="cursor-line" data-t="${model.cursor.t}"/>`;
  return axis + tickT + tickV + paths + extra + cursor + markers;
}

function fmtTick(v: number): string {
  const a = Math.abs(v);
  if (a !== 0 && (a >= 10000 || a < 0.01)) return v.toExponential(1);
  return a >= 100 ? v.toFixed(0) : v.toFixed(2);
}

// -- menu view -----------------------------------------------------------------

function radarSvg(tech: TechniqueInfo, color: string): HTMLElement {
  const model = radarChart(tech.radar);
  const rings = model.rings
    .map((ring) => `<polygon points="${polygonAttr(ring)}" class="radar-ring"/>`)
    .join("");
  const axes = model.axes
    .map(
      (a) =>
        `<line x1="${model.center.x}" y1="${model.center.y}" x2="${a.end.x.toFixed(1)}" ` +
        `y2="${a.end.y.toFixed(1)}" class="radar-axis"/>`,
    )
    .join("");
  const labels = model.axes
    .map((a) => {
      const lx = model.center.x + (a.end.x - model.center.x) * 1.22;
      const ly = model.center.y + (a.end.y - model.center.y) * 1.22 + 3;
      return `<text x="${lx.toFixed(1)}" y="${ly.toFixed(1)}" class="radar-label" text-anchor="middle">${axisShort(a.metric)}</text>`;
    })
    .join("");
  const poly = `<polygon points="${polygonAttr(model.polygon)}" fill="${color}" fill-opacity="0.35" stroke="${color}"/>`;
  return svgContainer(rings + axes + poly + labels, "radar", 120, 120);
}

function axisShort(metric: MetricKind): string {
  switch (metric) {
    case "fps": return "fps";
    case "frame_time_ms": return "ft";
    case "cpu_load_pct": return "cpu";
    case "ram_mb": return "ram";
    case "gpu_frame_time_ms": return "gpu";
  }
}

function renderMenu(app: AppState, actions: Actions): HTMLElement {
  const catalog = app.catalog;
  const root = el("div", { class: "view menu-view" });
  if (catalog === null) return root;

  const controls = el("div", { class: "menu-controls" }, [
    el("label", {}, [
      "Family ",
      el(
        "select",
        {
          id: "family-filter",
          onchange: (ev) => {
            const v = (ev.target as HTMLSelectElement).value;
            actions.setFamilyFilter(v === "" ? null : v);
          },
        },
        [
          el("option", { value: "" }, ["all"]),
          ...catalog.families.map((f) =>
            el("option", { value: f.id, ...(app.menu.familyFilter === f.id ? { selected: true } : {}) }, [f.displayName]),
          ),
        ],
      ),
    ]),
    el("label", { class: "impl-toggle" }, [
      el("input", {
        type: "checkbox",
        id: "implemented-only",
        checked: app.menu.implementedOnly,
        onchange: (ev) => actions.setImplementedOnly((ev.target as HTMLInputElement).checked),
      }),
      " implemented only",
    ]),
  ]);

  const groups = el("div", { class: "family-groups" });
  for (const group of familyGroups(catalog, app.menu)) {
    const header = el("div", { class: "family-header" }, [
      el("span", { class: "family-swatch" }),
      `${group.family.displayName} (${group.techniques.length})`,
    ]);
    (header.querySelector(".family-swatch") as HTMLElement).style.background = group.cssColor;
    header.style.borderLeftColor = group.cssColor;
    header.dataset.family = group.family.id;

    const cards = group.techniques.map((tech) => {
      const selected = app.menu.selected.includes(tech.id);
      const card = el("div", { class: `tech-card${selected ? " selected" : ""}${tech.implemented ? "" : " catalog-only"}` });
      card.append(
        el("label", { class: "tech-title" }, [
          el("input", {
            type: "checkbox",
            id: `tech-${tech.id}`,
            checked: selected,
            ...(tech.implemented ? {} : { disabled: true }),
            onchange: () => actions.toggleTechnique(tech.id),
          }),
          ` ${tech.displayName}`,
          tech.implemented ? "" : el("span", { class: "tag" }, ["catalog only"]),
        ]),
        radarSvg(tech, group.cssColor),
        el("p", { class: "tech-desc" }, [tech.description]),
      );
      if (selected && tech.parameters.length > 0) {
        const form = el("div", { class: "param-form" });
        for (const p of tech.parameters) {
          const current = app.menu.paramEdits[tech.id]?.[p.name] ?? p.defaultText;
          form.append(
            el("label", { class: "param" }, [
              `${p.name} (${p.type}) `,
              el("input", {
                type: "text",
                id: `param-${tech.id}-${p.name}`,
                value: current,
                oninput: (ev) => actions.setParam(tech.id, p.name, (ev.target as HTMLInputElement).value),
              }),
            ]),
          );
        }
        card.append(form);
      }
      return card;
    });
    groups.append(el("section", { class: "family-group" }, [header, ...cards]));
  }

  const check = buildRunRequest(catalog, app.menu);
  const launching = app.launch.phase === "submitting" || app.launch.phase === "queued" || app.launch.phase === "running";
  const form = el("div", { class: "run-form" }, [
    el("h3", {}, ["Launch run"]),
    el("label", {}, [
      "Dataset ",
      el(
        "select",
        {
          id: "run-dataset",
          onchange: (ev) => actions.setMenuField("dataset", (ev.target as HTMLSelectElement).value),
        },
        app.datasets.length > 0
          ? app.datasets.map((d) =>
              el("option", { value: d.id, ...(app.menu.dataset === d.id ? { selected: true } : {}) }, [d.id]),
            )
          : [el("option", { value: app.menu.dataset, selected: true }, [app.menu.dataset])],
      ),
    ]),
    el("label", {}, [
      "Template ",
      el(
        "select",
        {
          id: "run-template",
          onchange: (ev) => actions.setMenuField("template", (ev.target as HTMLSelectElement).value),
        },
        ["t1", "t2", "t3"].map((t) =>
          el("option", { value: t, ...(app.menu.template === t ? { selected: true } : {}) }, [t.toUpperCase()]),
        ),
      ),
    ]),
    el("label", {}, [
      "Timestep (s) ",
      el("input", {
        type: "text",
        id: "run-timestep",
        value: app.menu.timestep,
        oninput: (ev) => actions.setMenuField("timestep", (ev.target as HTMLInputElement).value),
      }),
    ]),
    el("label", {}, [
      "Name ",
      el("input", {
        type: "text",
        id: "run-name",
        placeholder: "auto",
        value: app.menu.runName,
        oninput: (ev) => actions.setMenuField("runName", (ev.target as HTMLInputElement).value),
      }),
    ]),
    el("label", {}, [
      "Description ",
      el("input", {
        type: "text",
        id: "run-desc",
        value: app.menu.description,
        oninput: (ev) => actions.setMenuField("description", (ev.target as HTMLInputElement).value),
      }),
    ]),
    el("div", { class: "selected-list" }, [
      "Enabled: ",
      app.menu.selected.length > 0 ? [...app.menu.selected].sort().join(", ") : "(none)",
    ]),
    el("ul", { class: "form-errors" }, check.errors.map((e) => el("li", {}, [e]))),
    el(
      "button",
      {
        id: "launch-button",
        disabled: check.errors.length > 0 || launching,
        onclick: () => actions.launch(),
      },
      [launching ? `run ${app.launch.phase}...` : "Launch"],
    ),
    renderLaunchStatus(app),
  ]);

  root.append(controls, el("div", { class: "menu-columns" }, [groups, form]));
  return root;
}

function renderLaunchStatus(app: AppState): HTMLElement {
  const { phase, error, session, runId } = app.launch;
  if (phase === "idle") return el("div", { class: "launch-status" });
  if (phase === "failed") {
    // service message shown verbatim
    return el("div", { class: "launch-status error", id: "launch-error" }, [error ?? "run failed"]);
  }
  if (phase === "done") {
    return el("div", { class: "launch-status done" }, [`run ${runId ?? ""} done: session ${session ?? ""}`]);
  }
  return el("div", { class: "launch-status" }, [`run ${runId ?? ""} ${phase}`]);
}

// -- compare view ----------------------------------------------------------------

function sessionPicker(
  app: AppState,
  checked: (id: string) => boolean,
  onToggle: (id: string) => void,
  idPrefix: string,
): HTMLElement {
  const list = el("div", { class: "session-picker" });
  for (const s of app.sessions) {
    list.append(
      el("label", { class: "session-row" }, [
        el("input", {
          type: "checkbox",
          id: `${idPrefix}-${s.name}`,
          checked: checked(s.name),
          onchange: () => onToggle(s.name),
        }),
        ` ${s.name} `,
        el("span", { class: "session-meta" }, [
          `${s.template ?? "free"} / ${s.dataset || "?"} / ${s.sampleCount} samples`,
        ]),
      ]),
    );
  }
  if (app.sessions.length === 0) list.append(el("p", { class: "empty" }, ["no sessions on the service yet"]));
  return list;
}

function metricSelect(id: string, current: MetricKind, onChange: (m: MetricKind) => void): HTMLElement {
  return el(
    "select",
    { id, onchange: (ev) => onChange((ev.target as HTMLSelectElement).value as MetricKind) },
    METRIC_KINDS.map((m) =>
      el("option", { value: m, ...(current === m ? { selected: true } : {}) }, [METRIC_LABELS[m]]),
    ),
  );
}

function renderCompare(app: AppState, actions: Actions): HTMLElement {
  const root = el("div", { class: "view compare-view" });
  root.append(
    el("h3", {}, ["Sessions (pick two)"]),
    sessionPicker(app, (id) => app.compare.ids.includes(id), actions.toggleCompareSession, "cmp"),
  );

  const controls = el("div", { class: "compare-controls" }, [
    el("label", {}, ["Metric ", metricSelect("cmp-metric", app.compare.metric, actions.setCompareMetric)]),
    el("label", { class: "layout-toggle" }, [
      el("input", {
        type: "checkbox",
        id: "layout-toggle",
        checked: app.compare.layout === "side",
        onchange: (ev) => actions.setLayout((ev.target as HTMLInputElement).checked ? "side" : "overlay"),
      }),
      " side by side",
    ]),
    el("label", {}, [
      "t0 ",
      el("input", {
        type: "text",
        id: "win-t0",
        class: "win",
        value: app.compare.window ? String(app.compare.window.t0) : "",
      }),
    ]),
    el("label", {}, [
      "t1 ",
      el("input", {
        type: "text",
        id: "win-t1",
        class: "win",
        value: app.compare.window ? String(app.compare.window.t1) : "",
      }),
    ]),
    el(
      "button",
      {
        id: "win-apply",
        onclick: () => {
          const t0 = (document.getElementById("win-t0") as HTMLInputElement).value;
          const t1 = (document.getElementById("win-t1") as HTMLInputElement).value;
          actions.applyWindow(t0, t1);
        },
      },
      ["Apply window"],
    ),
    el("button", { id: "win-clear", onclick: () => actions.clearWindow() }, ["Full range"]),
  ]);
  root.append(controls);

  if (app.fetched.compareError !== null) {
    root.append(el("div", { class: "error-banner", id: "compare-error" }, [app.fetched.compareError]));
  }

  const cmp = app.fetched.compare;
  if (cmp !== null) {
    const badgeRow = el("div", { class: "badges" });
    for (const b of verdictBadges(cmp)) {
      badgeRow.append(
        el("div", { class: `badge winner-${b.winner}`, "data-metric": b.metric }, [
          el("div", { class: "badge-metric" }, [b.label]),
          el("div", { class: "badge-winner" }, [b.winnerText]),
          el("div", { class: "badge-means" }, [
            el("span", { class: "mean-a" }, [b.meanAText]),
            " vs ",
            el("span", { class: "mean-b" }, [b.meanBText]),
          ]),
        ]),
      );
    }
    root.append(
      el("div", { class: "compare-names" }, [`A = ${cmp.a}   B = ${cmp.b}`]),
      badgeRow,
    );
  }

  const details = app.compare.ids
    .map((id) => app.fetched.details[id])
    .filter((d): d is NonNullable<typeof d> => d !== undefined);
  if (details.length > 0) {
    const vm = compareCharts(details, app.compare.metric, app.compare.cursorT, app.compare.layout);
    const chartsWrap = el("div", { class: `charts ${app.compare.layout}` });
    for (const chart of vm.charts) {
      const fig = el("figure", { class: "chart" }, [el("figcaption", {}, [chart.title])]);
      fig.append(svgContainer(lineChartSvg(chart.model), "chart-svg", chart.model.rect.w, chart.model.rect.h));
      const readouts = el("div", { class: "readouts" });
      for (const r of chart.readouts) {
        const item = el("span", { class: "readout" }, [`${r.name}: `, el("b", {}, [r.valueText])]);
        item.style.color = r.color;
        readouts.append(item);
      }
      fig.append(readouts);
      chartsWrap.append(fig);
    }
    root.append(chartsWrap);

    const max = vm.maxT;
    root.append(
      el("div", { class: "cursor-row" }, [
        "t ",
        el("input", {
          type: "range",
          id: "cursor-slider",
          min: "0",
          max: String(max),
          step: String(max > 0 ? max / 500 : 1),
          value: String(app.compare.cursorT),
          oninput: (ev) => actions.setCursor(Number((ev.target as HTMLInputElement).value)),
        }),
        el("span", { class: "cursor-t" }, [app.compare.cursorT.toFixed(3), " s"]),
      ]),
    );
  } else if (app.compare.ids.length > 0) {
    root.append(el("p", { class: "empty" }, ["loading session data..."]));
  }
  return root;
}

// -- multiples view ----------------------------------------------------------------

function renderMultiples(app: AppState, actions: Actions): HTMLElement {
  const root = el("div", { class: "view multiples-view" });
  root.append(
    el("h3", {}, ["Sessions"]),
    sessionPicker(app, (id) => app.multiples.ids.includes(id), actions.toggleMultiplesSession, "mul"),
    el("div", { class: "multiples-controls" }, [
      el("label", {}, ["Metric ", metricSelect("mul-metric", app.multiples.metric, actions.setMultiplesMetric)]),
      el("label", {}, [
        "Threshold ",
        el("input", {
          type: "text",
          id: "mul-threshold",
          value: app.multiples.thresholdText,
          onchange: (ev) => actions.setMultiplesThreshold((ev.target as HTMLInputElement).value),
        }),
      ]),
    ]),
  );

  if (app.fetched.multiplesError !== null) {
    root.append(el("div", { class: "error-banner", id: "multiples-error" }, [app.fetched.multiplesError]));
  }

  const view = app.fetched.multiples;
  if (view !== null && view.series.length > 0) {
    const tiles = multiplesTiles(view, app.fetched.threshold, app.multiples.cursorT);
    const grid = el("div", { class: "tile-grid" });
    let maxT = 0;
    for (const tile of tiles) {
      const last = tile.model.domainT[1];
      if (last > maxT) maxT = last;
      const extra =
        tile.thresholdY !== null
          ? `<line x1="${tile.model.rect.padL}" y1="${tile.thresholdY.toFixed(2)}" ` +
            `x2="${tile.model.rect.w - tile.model.rect.padR}" y2="${tile.thresholdY.toFixed(2)}" class="threshold-line"/>`
          : "";
      const fig = el("figure", { class: "tile", "data-session": tile.name }, [
        el("figcaption", {}, [tile.name]),
      ]);
      fig.append(svgContainer(lineChartSvg(tile.model, extra), "tile-svg", tile.model.rect.w, tile.model.rect.h));
      const caption = el("div", { class: "tile-caption" }, [
        el("span", { class: "tile-readout" }, [esc("value "), el("b", {}, [tile.cursor.valueText])]),
      ]);
      if (tile.fractionText !== null) {
        caption.append(
          el("span", { class: "fraction-label" }, ["meets threshold: ", el("b", {}, [tile.fractionText])]),
        );
      }
      fig.append(caption);
      grid.append(fig);
    }
    root.append(grid);
    root.append(
      el("div", { class: "cursor-row" }, [
        "t ",
        el("input", {
          type: "range",
          id: "mul-cursor",
          min: "0",
          max: String(maxT),
          step: String(maxT > 0 ? maxT / 500 : 1),
          value: String(app.multiples.cursorT),
          oninput: (ev) => actions.setMultiplesCursor(Number((ev.target as HTMLInputElement).value)),
        }),
        el("span", { class: "cursor-t" }, [app.multiples.cursorT.toFixed(3), " s"]),
      ]),
    );
  } else if (app.multiples.ids.length > 0) {
    root.append(el("p", { class: "empty" }, ["loading small multiples..."]));
  }
  return root;
}

// -- shell -----------------------------------------------------------------------

export function render(root: HTMLElement, app: AppState, actions: Actions): void {
  const active = document.activeElement;
  const activeId = active instanceof HTMLElement ? active.id : "";
  let selection: [number, number] | null = null;
  if (active instanceof HTMLInputElement && active.type === "text") {
    selection = [active.selectionStart ?? 0, active.selectionEnd ?? 0];
  }

  root.textContent = "";
  const tabs = el("nav", { class: "tabs" });
  const routes: [Route, string][] = [
    ["menu", "Optimizations"],
    ["compare", "Compare"],
    ["multiples", "Small multiples"],
  ];
  for (const [route, label] of routes) {
    tabs.append(
      el(
        "button",
        {
          id: `tab-${route}`,
          class: app.route === route ? "tab active" : "tab",
          onclick: () => actions.navigate(route),
        },
        [label],
      ),
    );
  }
  root.append(el("header", {}, [el("h1", {}, ["vizlab"]), tabs]));

  if (app.catalogError !== null) {
    root.append(
      el("div", { class: "error-banner" }, [
        `catalog unavailable: ${app.catalogError} `,
        el("button", { id: "retry-catalog", onclick: () => actions.retryCatalog() }, ["retry"]),
      ]),
    );
    return;
  }
  if (app.catalog === null) {
    root.append(el("p", { class: "empty" }, ["loading catalog..."]));
    return;
  }

  if (app.route === "menu") root.append(renderMenu(app, actions));
  else if (app.route === "compare") root.append(renderCompare(app, actions));
  else root.append(renderMultiples(app, actions));

  if (activeId !== "") {
    const next = document.getElementById(activeId);
    if (next instanceof HTMLElement) {
      next.focus();
      if (next instanceof HTMLInputElement && selection !== null && next.type === "text") {
        try {
          next.setSelectionRange(selection[0], selection[1]);
        } catch {
          // number-like inputs refuse selection ranges; focus is enough
        }
      }
    }
  }
}
