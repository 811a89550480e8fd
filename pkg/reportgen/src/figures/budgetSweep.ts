// Two-panel budget sweep: community temperature (left) and rank (right)
// versus edges added, one line per detector with mean +- SE bands.

import { CurveRow } from "../csv.js";
import { prefixSeries } from "../aggregate.js";
import { distinct } from "../aggregate.js";
import { AxesBox, drawAxes, drawLegend, linearScale, PALETTE, SvgBuilder } from "../svg.js";

const PANEL_W = 360;
const PANEL_H = 260;
const MARGIN = { left: 64, right: 20, top: 36, bottom: 48 };

function drawPanel(svg: SvgBuilder, box: AxesBox, rows: CurveRow[],
                   detectors: string[], column: "rank" | "t_comm",
                   title: string, yDomain?: [number, number]): void {
    const maxPrefix = Math.max(...rows.map(r => r.prefix_size));
    const xScale = linearScale([0, maxPrefix], [box.x0, box.x1]);
    let lo = Infinity;
    let hi = -Infinity;
    const series = detectors.map(det => {
        const pts = prefixSeries(rows.filter(r => r.detector === det), column);
        for (const p of pts) {
            lo = Math.min(lo, p.mean - p.stderr);
            hi = Math.max(hi, p.mean + p.stderr);
        }
        return pts;
    });
    if (yDomain) {
        [lo, hi] = yDomain;
    } else if (lo === hi) {
        lo -= 1;
        hi += 1;
    }
    const yScale = linearScale([lo, hi], [box.y1, box.y0]);
    drawAxes(svg, box, xScale, yScale, "edges added", column === "rank" ? "target rank" : "community temperature", title);
    series.forEach((pts, i) => {
        const color = PALETTE[i % PALETTE.length];
        svg.band(
            pts.map(p => [xScale.apply(p.prefix), yScale.apply(p.mean + p.stderr)]),
            pts.map(p => [xScale.apply(p.prefix), yScale.apply(p.mean - p.stderr)]),
            color);
        svg.polyline(pts.map(p => [xScale.apply(p.prefix), yScale.apply(p.mean)]), color);
    });
}

export function renderBudgetSweep(rows: CurveRow[], dataset?: string): string {
    const selected = dataset ? rows.filter(r => r.dataset === dataset) : rows;
    if (selected.length === 0) {
        throw new Error(`empty selection${dataset ? ` for dataset ${dataset}` : ""}`);
    }
    const detectors = distinct(selected.map(r => r.detector));
    const width = MARGIN.left + PANEL_W + 70 + MARGIN.left + PANEL_W + MARGIN.right + 120;
    const height = MARGIN.top + PANEL_H + MARGIN.bottom;
    const svg = new SvgBuilder(width, height);
    const name = dataset ?? distinct(selected.map(r => r.dataset)).join("+");
    const left: AxesBox = { x0: MARGIN.left, y0: MARGIN.top, x1: MARGIN.left + PANEL_W, y1: MARGIN.top + PANEL_H };
    const rightX = MARGIN.left + PANEL_W + 70 + MARGIN.left;
    const right: AxesBox = { x0: rightX, y0: MARGIN.top, x1: rightX + PANEL_W, y1: MARGIN.top + PANEL_H };
    drawPanel(svg, left, selected, detectors, "t_comm", `${name}: temperature`, [-1, 1]);
    drawPanel(svg, right, selected, detectors, "rank", `${name}: rank`);
    drawLegend(svg, right.x1 + 24, MARGIN.top + 12,
        detectors.map((d, i) => ({ label: d, color: PALETTE[i % PALETTE.length] })));
    return svg.finish();
}
