// Normalized best-attack rank per detector: bar = mean over targets of the
// attacker's argmax rank divided by the node count, with SE error bars.

import { CurveRow } from "../csv.js";
import { bestRankPerTarget, distinct } from "../aggregate.js";
import { mean, stderr } from "../stats.js";
import { drawAxes, linearScale, PALETTE, SvgBuilder } from "../svg.js";

const W = 460;
const H = 300;
const MARGIN = { left: 64, right: 24, top: 40, bottom: 56 };

export function renderStackelbergBars(rows: CurveRow[], nNodes: number): string {
    if (rows.length === 0) {
        throw new Error("empty selection");
    }
    const detectors = distinct(rows.map(r => r.detector));
    const best = bestRankPerTarget(rows);
    const bars = detectors.map(det => {
        const byAttack = best.get(det)!;
        const perTarget = new Map<number, number>();
        for (const byTarget of byAttack.values()) {
            for (const [target, rank] of byTarget) {
                perTarget.set(target, Math.max(perTarget.get(target) ?? 0, rank));
            }
        }
        const normalized = [...perTarget.values()].map(r => r / nNodes);
        return { det, mean: mean(normalized), stderr: stderr(normalized) };
    });
    const svg = new SvgBuilder(MARGIN.left + W + MARGIN.right, MARGIN.top + H + MARGIN.bottom);
    const box = { x0: MARGIN.left, y0: MARGIN.top, x1: MARGIN.left + W, y1: MARGIN.top + H };
    const hi = Math.min(1, Math.max(...bars.map(b => b.mean + b.stderr)) * 1.15);
    const xScale = linearScale([0, bars.length], [box.x0, box.x1]);
    const yScale = linearScale([0, hi], [box.y1, box.y0]);
    drawAxes(svg, box, xScale, yScale, "", "rank / N", "best attack, normalized rank");
    const slot = (box.x1 - box.x0) / bars.length;
    bars.forEach((b, i) => {
        const cx = box.x0 + slot * (i + 0.5);
        const barW = slot * 0.6;
        svg.rect(cx - barW / 2, yScale.apply(b.mean), barW,
                 box.y1 - yScale.apply(b.mean), PALETTE[i % PALETTE.length], 0.85);
        svg.line(cx, yScale.apply(b.mean - b.stderr), cx, yScale.apply(b.mean + b.stderr), "#333", 1.5);
        svg.line(cx - 5, yScale.apply(b.mean - b.stderr), cx + 5, yScale.apply(b.mean - b.stderr));
        svg.line(cx - 5, yScale.apply(b.mean + b.stderr), cx + 5, yScale.apply(b.mean + b.stderr));
        svg.text(cx, box.y1 + 16, b.det, 11, "middle");
    });
    return svg.finish();
}
