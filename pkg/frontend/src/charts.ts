/**
 * Chart geometry. Pure functions from series data to pixel coordinates;
 * rendering (SVG markup) happens in the views. Readout values are never
 * computed here: the cursor resolves to a sample index so views can show
 * the service's own bytes for that sample.
 */

import { MetricKind, METRIC_KINDS } from "./api.js";

export interface Pt {
  x: number;
  y: number;
}

export interface ChartRect {
  w: number;
  h: number;
  padL: number;
  padR: number;
  padT: number;
  padB: number;
}

export const DEFAULT_RECT: ChartRect = { w: 560, h: 220, padL: 46, padR: 12, padT: 10, padB: 22 };

export function extent(values: number[]): [number, number] {
  if (values.length === 0) return [0, 1];
  let lo = values[0];
  let hi = values[0];
  for (const v of values) {
    if (v < lo) lo = v;
    if (v > hi) hi = v;
  }
  if (lo === hi) {
    // flat series still needs a visible band
    const pad = lo === 0 ? 1 : Math.abs(lo) * 0.05;
    return [lo - pad, hi + pad];
  }
  return [lo, hi];
}

export function scaleLinear(domain: [number, number], range: [number, number]): (v: number) => number {
  const [d0, d1] = domain;
  const [r0, r1] = range;
  const span = d1 - d0;
  if (span === 0) return () => (r0 + r1) / 2;
  return (v: number) => r0 + ((v - d0) / span) * (r1 - r0);
}

export function ticks(domain: [number, number], count: number): number[] {
  const out: number[] = [];
  for (let i = 0; i <= count; i += 1) {
    out.push(domain[0] + ((domain[1] - domain[0]) * i) / count);
  }
  return out;
}

/** Index of the sample whose time is nearest to t; earlier sample wins ties. */
export function nearestIndex(ts: number[], t: number): number {
  if (ts.length === 0) throw new Error("empty series");
  let best = 0;
  let bestDist = Math.abs(ts[0] - t);
  for (let i = 1; i < ts.length; i += 1) {
    const d = Math.abs(ts[i] - t);
    if (d < bestDist) {
      best = i;
      bestDist = d;
    }
  }
  return best;
}

export interface SeriesInput {
  name: string;
  color: string;
  t: number[];
  values: number[];
}

export interface SeriesGeom {
  name: string;
  color: string;
  points: Pt[];
  /** Sample index the shared cursor resolves to for this series. */
  cursorIndex: number;
  cursorPoint: Pt;
}

export interface LineChartModel {
  rect: ChartRect;
  domainT: [number, number];
  domainV: [number, number];
  series: SeriesGeom[];
  /** Cursor time: identical across every chart built from the same cursor. */
  cursor: { t: number; x: number };
  ticksT: { v: number; x: number }[];
  ticksV: { v: number; y: number }[];
}

export function lineChart(
  inputs: SeriesInput[],
  cursorT: number,
  rect: ChartRect = DEFAULT_RECT,
  includeV: number[] = [],
): LineChartModel {
  const allT = inputs.flatMap((s) => s.t);
  const allV = inputs.flatMap((s) => s.values);
  const domainT = extent(allT);
  // guide values (e.g. a threshold) must land inside the plot
  const domainV = extent(allV.concat(includeV.filter((v) => Number.isFinite(v))));
  const sx = scaleLinear(domainT, [rect.padL, rect.w - rect.padR]);
  const sy = scaleLinear(domainV, [rect.h - rect.padB, rect.padT]);
  const series = inputs.map((s): SeriesGeom => {
    const points = s.t.map((tv, i) => ({ x: sx(tv), y: sy(s.values[i]) }));
    const cursorIndex = s.t.length > 0 ? nearestIndex(s.t, cursorT) : 0;
    return {
      name: s.name,
      color: s.color,
      points,
      cursorIndex,
      cursorPoint: points[cursorIndex] ?? { x: sx(cursorT), y: rect.h - rect.padB },
    };
  });
  return {
    rect,
    domainT,
    domainV,
    series,
    cursor: { t: cursorT, x: sx(cursorT) },
    ticksT: ticks(domainT, 4).map((v) => ({ v, x: sx(v) })),
    ticksV: ticks(domainV, 4).map((v) => ({ v, y: sy(v) })),
  };
}

/** Horizontal guide for a threshold value in the chart's value domain. */
export function thresholdLineY(model: LineChartModel, threshold: number): number {
  const sy = scaleLinear(model.domainV, [model.rect.h - model.rect.padB, model.rect.padT]);
  return sy(threshold);
}

// -- radar -------------------------------------------------------------------

export interface RadarModel {
  center: Pt;
  radius: number;
  /** One axis per metric, in catalog metric order. */
  axes: { metric: MetricKind; end: Pt }[];
  /** Polygon vertices for the technique's expected-impact scores. */
  polygon: Pt[];
  rings: Pt[][];
}

/** Map an expected-impact score in [-2, 2] onto a radius fraction. */
export function radarRadius(score: number): number {
  const clamped = Math.min(2, Math.max(-2, score));
  return (clamped + 3) / 5; // -2 -> 0.2, 0 -> 0.6, +2 -> 1.0
}

export function radarChart(
  radar: Record<MetricKind, number>,
  center: Pt = { x: 60, y: 60 },
  radius: number = 46,
): RadarModel {
  const n = METRIC_KINDS.length;
  const angle = (i: number) => -Math.PI / 2 + (2 * Math.PI * i) / n;
  const at = (i: number, r: number): Pt => ({
    x: center.x + r * Math.cos(angle(i)),
    y: center.y + r * Math.sin(angle(i)),
  });
  const axes = METRIC_KINDS.map((metric, i) => ({ metric, end: at(i, radius) }));
  const polygon = METRIC_KINDS.map((metric, i) => at(i, radius * radarRadius(radar[metric])));
  const rings = [0.2, 0.6, 1.0].map((f) => METRIC_KINDS.map((_, i) => at(i, radius * f)));
  return { center, radius, axes, polygon, rings };
}

// -- colors ------------------------------------------------------------------

/**
 * CSS color for a catalog family. Display only: the state keeps the
 * catalog's float triple untouched, and that triple is what fidelity
 * checks compare against.
 */
export function cssColor(rgb: [number, number, number]): string {
  const ch = (c: number) => Math.max(0, Math.min(255, Math.round(c * 255)));
  return `rgb(${ch(rgb[0])}, ${ch(rgb[1])}, ${ch(rgb[2])})`;
}

/** Line colors for overlaid sessions (A, then B). */
export const SESSION_COLORS = ["#4f8dd8", "#d8784f"];

// -- svg helpers ---------------------------------------------------------------

export function pathFrom(points: Pt[]): string {
  if (points.length === 0) return "";
  return points
    .map((p, i) => `${i === 0 ? "M" : "L"}${p.x.toFixed(2)},${p.y.toFixed(2)}`)
    .join(" ");
}

export function polygonAttr(points: Pt[]): string {
  return points.map((p) => `${p.x.toFixed(2)},${p.y.toFixed(2)}`).join(" ");
}
