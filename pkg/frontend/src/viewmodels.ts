/**
 * View models: the displayable strings and geometry for each panel.
 *
 * Anything shown as a number is the raw token from a service response
 * body, carried through untouched. Building these as plain data keeps the
 * fidelity checks independent of DOM rendering.
 */

import {
  Catalog,
  CompareAllView,
  FamilyInfo,
  MetricKind,
  METRIC_LABELS,
  MultiplesView,
  SessionDetail,
  TechniqueInfo,
  ThresholdView,
} from "./api.js";
import {
  ChartRect,
  DEFAULT_RECT,
  LineChartModel,
  SESSION_COLORS,
  cssColor,
  lineChart,
  thresholdLineY,
} from "./charts.js";
import { MenuState, visibleTechniques } from "./state.js";

// -- optimization menu ---------------------------------------------------

export interface FamilyGroupVM {
  family: FamilyInfo;
  /** Exact catalog floats; display color derives from these at render time. */
  color: [number, number, number];
  cssColor: string;
  techniques: TechniqueInfo[];
}

/** Techniques grouped under family headers, honoring the menu filters. */
export function familyGroups(catalog: Catalog, menu: MenuState): FamilyGroupVM[] {
  const visible = visibleTechniques(catalog, menu);
  return catalog.families
    .map((family) => ({
      family,
      color: family.color,
      cssColor: cssColor(family.color),
      techniques: visible.filter((t) => t.family === family.id),
    }))
    .filter((g) => g.techniques.length > 0);
}

// -- comparison view -------------------------------------------------------

export interface VerdictBadgeVM {
  metric: MetricKind;
  label: string;
  winner: "A" | "B" | "tie";
  /** "A wins" / "B wins" / "tie" */
  winnerText: string;
  /** Raw mean tokens from the compare response. */
  meanAText: string;
  meanBText: string;
}

export function verdictBadges(compare: CompareAllView): VerdictBadgeVM[] {
  return compare.verdicts.map((v) => ({
    metric: v.metric,
    label: METRIC_LABELS[v.metric],
    winner: v.winner,
    winnerText: v.winner === "tie" ? "tie" : `${v.winner} wins`,
    meanAText: v.meanAToken,
    meanBText: v.meanBToken,
  }));
}

export interface CompareChartVM {
  title: string;
  model: LineChartModel;
  /** Per-series readout at the shared cursor; valueText is a response token. */
  readouts: { name: string; color: string; valueText: string; sampleT: number }[];
}

export interface CompareViewVM {
  charts: CompareChartVM[];
  /** Cursor time each chart reports; the view asserts these stay equal. */
  cursorTs: number[];
  maxT: number;
}

/**
 * Build the compare charts for the chosen layout. Overlay puts both
 * sessions on one chart; side-by-side builds one chart per session. The
 * cursor time is the same value in every chart model.
 */
export function compareCharts(
  details: SessionDetail[],
  metric: MetricKind,
  cursorT: number,
  layout: "overlay" | "side",
  rect: ChartRect = DEFAULT_RECT,
): CompareViewVM {
  const inputs = details.map((d, i) => ({
    name: d.name,
    color: SESSION_COLORS[i % SESSION_COLORS.length],
    t: d.t,
    values: d.metric(metric),
  }));
  const tokens = details.map((d) => d.metricTokens(metric));
  const charts: CompareChartVM[] = [];
  if (layout === "overlay") {
    const model = lineChart(inputs, cursorT, rect);
    charts.push({
      title: METRIC_LABELS[metric],
      model,
      readouts: model.series.map((s, i) => ({
        name: s.name,
        color: s.color,
        valueText: tokens[i][s.cursorIndex] ?? "",
        sampleT: details[i].t[s.cursorIndex] ?? 0,
      })),
    });
  } else {
    inputs.forEach((input, i) => {
      const model = lineChart([input], cursorT, rect);
      const s = model.series[0];
      charts.push({
        title: `${input.name} - ${METRIC_LABELS[metric]}`,
        model,
        readouts: [
          {
            name: input.name,
            color: input.color,
            valueText: tokens[i][s.cursorIndex] ?? "",
            sampleT: details[i].t[s.cursorIndex] ?? 0,
          },
        ],
      });
    });
  }
  const maxT = Math.max(0, ...details.map((d) => (d.t.length > 0 ? d.t[d.t.length - 1] : 0)));
  return { charts, cursorTs: charts.map((c) => c.model.cursor.t), maxT };
}

// -- threshold + small multiples ---------------------------------------------

export interface ThresholdLabelVM {
  session: string;
  /** Raw fraction token from the threshold response. */
  fractionText: string;
  fraction: number;
}

export function thresholdLabels(report: ThresholdView): ThresholdLabelVM[] {
  return report.sessions.map((session, i) => ({
    session,
    fractionText: report.fractionTokens[i],
    fraction: report.fractions[i],
  }));
}

export interface MultiplesTileVM {
  name: string;
  model: LineChartModel;
  thresholdY: number | null;
  /** Fraction label under the tile, bytes from /analytics/threshold. */
  fractionText: string | null;
  /** Readout at the shared slider position; valueText is a response token. */
  cursor: { t: number; valueText: string; sampleT: number };
}

export function multiplesTiles(
  view: MultiplesView,
  threshold: ThresholdView | null,
  cursorT: number,
  rect: ChartRect = { w: 240, h: 120, padL: 34, padR: 6, padT: 6, padB: 16 },
): MultiplesTileVM[] {
  const fractionBySession = new Map<string, string>();
  threshold?.sessions.forEach((s, i) => fractionBySession.set(s, threshold.fractionTokens[i]));
  return view.series.map((series) => {
    const model = lineChart(
      [{ name: series.name, color: SESSION_COLORS[0], t: series.t, values: series.values }],
      cursorT,
      rect,
      threshold !== null ? [threshold.threshold] : [],
    );
    const geom = model.series[0];
    return {
      name: series.name,
      model,
      thresholdY: threshold !== null ? thresholdLineY(model, threshold.threshold) : null,
      fractionText: fractionBySession.get(series.name) ?? null,
      cursor: {
        t: model.cursor.t,
        valueText: series.valueTokens[geom.cursorIndex] ?? "",
        sampleT: series.t[geom.cursorIndex] ?? 0,
      },
    };
  });
}
