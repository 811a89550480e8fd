// Expected rank versus attack probability, one line per detector.

import { TradeoffRow } from "../csv.js";
import { distinct } from "../aggregate.js";
import { drawAxes, drawLegend, linearScale, PALETTE, SvgBuilder } from "../svg.js";

const W = 420;
const H = 300;
const MARGIN = { left: 64, right: 140, top: 40, bottom: 52 };

export function renderTradeoffCurves(rows: TradeoffRow[]): string {
    if (rows.length === 0) {
        throw new Error("empty selection");
    }
    const detectors = distinct(rows.map(r => r.detector));
    const svg = new SvgBuilder(MARGIN.left + W + MARGIN.right, MARGIN.top + H + MARGIN.bottom);
    const box = { x0: MARGIN.left, y0: MARGIN.top, x1: MARGIN.left + W, y1: MARGIN.top + H };
    const xs = rows.map(r => r.p_attack);
    const ys = rows.map(r => r.expected_rank);
    const xScale = linearScale([Math.min(...xs), Math.max(...xs)], [box.x0, box.x1]);
    const yScale = linearScale([0, Math.max(...ys) * 1.05], [box.y1, box.y0]);
    drawAxes(svg, box, xScale, yScale, "attack probability", "expected rank",
             distinct(rows.map(r => r.dataset)).join("+"));
    detectors.forEach((det, i) => {
        const pts = rows.filter(r => r.detector === det)
            .sort((a, b) => a.p_attack - b.p_attack)
            .map(r => [xScale.apply(r.p_attack), yScale.apply(r.expected_rank)] as [number, number]);
        svg.polyline(pts, PALETTE[i % PALETTE.length]);
    });
    drawLegend(svg, box.x1 + 20, MARGIN.top + 12,
        detectors.map((d, i) => ({ label: d, color: PALETTE[i % PALETTE.length] })));
    return svg.finish();
}
