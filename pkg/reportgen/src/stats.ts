// Aggregation helpers matching the harness's conventions.

export function mean(values: number[]): number {
    if (values.length === 0) {
        throw new Error("mean of empty selection");
    }
    return values.reduce((a, b) => a + b, 0) / values.length;
}

// Sample standard error with ddof=1, zero for a single observation.
export function stderr(values: number[]): number {
    if (values.length < 2) {
        return 0;
    }
    const m = mean(values);
    const variance = values.reduce((acc, v) => acc + (v - m) * (v - m), 0) / (values.length - 1);
    return Math.sqrt(variance / values.length);
}

// Banker's rounding to the nearest integer (round half to even).
export function roundHalfEven(x: number): number {
    const floor = Math.floor(x);
    const diff = x - floor;
    if (diff > 0.5) return floor + 1;
    if (diff < 0.5) return floor;
    return floor % 2 === 0 ? floor : floor + 1;
}

// Stable deterministic number formatting for SVG coordinates.
export function fmt(x: number): string {
    if (!Number.isFinite(x)) {
        throw new Error(`non-finite coordinate ${x}`);
    }
    const s = x.toFixed(3);
    return s.replace(/\.?0+$/, "") || "0";
}
