// Minimal deterministic SVG emission: no timestamps, fixed number format.

import { fmt } from "./stats.js";

export const PALETTE = [
    "#4269d0", "#efb118", "#ff725c", "#6cc5b0", "#3ca951",
    "#ff8ab7", "#a463f2", "#97bbf5", "#9c6b4e", "#9498a0",
];

export interface Scale {
    domain: [number, number];
    range: [number, number];
    apply(x: number): number;
}

export function linearScale(domain: [number, number], range: [number, number]): Scale {
    const [d0, d1] = domain;
    const [r0, r1] = range;
    const span = d1 - d0 || 1;
    return {
        domain,
        range,
        apply: (x: number) => r0 + ((x - d0) / span) * (r1 - r0),
    };
}

export function niceTicks(lo: number, hi: number, count = 5): number[] {
    const span = hi - lo || 1;
    const step = Math.pow(10, Math.floor(Math.log10(span / count)));
    const err = (span / count) / step;
    const factor = err >= 7.5 ? 10 : err >= 3.5 ? 5 : err >= 1.5 ? 2 : 1;
    const s = step * factor;
    const start = Math.ceil(lo / s) * s;
    const ticks: number[] = [];
    for (let v = start; v <= hi + 1e-9; v += s) {
        ticks.push(Number(v.toFixed(10)));
    }
    return ticks;
}

export class SvgBuilder {
    private parts: string[] = [];

    constructor(readonly width: number, readonly height: number) {
        this.parts.push(
            `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" ` +
            `viewBox="0 0 ${width} ${height}" font-family="Helvetica, Arial, sans-serif">`);
        this.parts.push(`<rect width="${width}" height="${height}" fill="white"/>`);
    }

    line(x1: number, y1: number, x2: number, y2: number, stroke = "#333", width = 1): void {
        this.parts.push(`<line x1="${fmt(x1)}" y1="${fmt(y1)}" x2="${fmt(x2)}" y2="${fmt(y2)}" ` +
            `stroke="${stroke}" stroke-width="${width}"/>`);
    }

    polyline(points: Array<[number, number]>, stroke: string, width = 1.5): void {
        const pts = points.map(([x, y]) => `${fmt(x)},${fmt(y)}`).join(" ");
        this.parts.push(`<polyline points="${pts}" fill="none" stroke="${stroke}" stroke-width="${width}"/>`);
    }

    band(upper: Array<[number, number]>, lower: Array<[number, number]>, fill: string): void {
        const forward = upper.map(([x, y]) => `${fmt(x)},${fmt(y)}`);
        const back = [...lower].reverse().map(([x, y]) => `${fmt(x)},${fmt(y)}`);
        this.parts.push(`<polygon points="${forward.concat(back).join(" ")}" fill="${fill}" ` +
            `fill-opacity="0.18" stroke="none"/>`);
    }

    rect(x: number, y: number, w: number, h: number, fill: string, opacity = 1): void {
        this.parts.push(`<rect x="${fmt(x)}" y="${fmt(y)}" width="${fmt(w)}" height="${fmt(h)}" ` +
            `fill="${fill}" fill-opacity="${opacity}"/>`);
    }

    text(x: number, y: number, content: string, size = 11, anchor = "start", extra = ""): void {
        this.parts.push(`<text x="${fmt(x)}" y="${fmt(y)}" font-size="${size}" ` +
            `text-anchor="${anchor}"${extra ? " " + extra : ""}>${escapeXml(content)}</text>`);
    }

    finish(): string {
        return this.parts.join("\n") + "\n</svg>\n";
    }
}

export function escapeXml(s: string): string {
    return s.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

export interface AxesBox {
    x0: number;
    y0: number;
    x1: number;
    y1: number;
}

export function drawAxes(svg: SvgBuilder, box: AxesBox, xScale: Scale, yScale: Scale,
                         xLabel: string, yLabel: string, title: string): void {
    svg.line(box.x0, box.y1, box.x1, box.y1);
    svg.line(box.x0, box.y0, box.x0, box.y1);
    for (const t of niceTicks(xScale.domain[0], xScale.domain[1])) {
        const px = xScale.apply(t);
        svg.line(px, box.y1, px, box.y1 + 4);
        svg.text(px, box.y1 + 16, String(t), 10, "middle");
    }
    for (const t of niceTicks(yScale.domain[0], yScale.domain[1])) {
        const py = yScale.apply(t);
        svg.line(box.x0 - 4, py, box.x0, py);
        svg.text(box.x0 - 7, py + 3.5, String(t), 10, "end");
    }
    svg.text((box.x0 + box.x1) / 2, box.y1 + 32, xLabel, 12, "middle");
    svg.text((box.x0 + box.x1) / 2, box.y0 - 8, title, 13, "middle", 'font-weight="bold"');
    svg.text(box.x0 - 38, (box.y0 + box.y1) / 2, yLabel, 12, "middle",
             `transform="rotate(-90 ${fmt(box.x0 - 38)} ${fmt((box.y0 + box.y1) / 2)})"`);
}

export function drawLegend(svg: SvgBuilder, x: number, y: number,
                           entries: Array<{ label: string; color: string }>): void {
    entries.forEach((e, i) => {
        const ey = y + i * 16;
        svg.line(x, ey - 4, x + 18, ey - 4, e.color, 2);
        svg.text(x + 24, ey, e.label, 11);
    });
}
