// CSV readers for the harness schemas (leading "# schema:" comment line).

import { readFileSync } from "node:fs";

export interface CurveRow {
    dataset: string;
    detector: string;
    attack: string;
    target: number;
    prefix_size: number;
    rank: number;
    t_comm: number;
}

export interface TradeoffRow {
    dataset: string;
    detector: string;
    p_attack: number;
    expected_rank: number;
    chosen: number;
}

export class CsvError extends Error {}

function parseTable(path: string): { header: string[]; rows: string[][] } {
    const text = readFileSync(path, "utf-8");
    const lines = text.split("\n").filter(line => line.length > 0 && !line.startsWith("#"));
    if (lines.length < 1) {
        throw new CsvError(`${path}: empty CSV`);
    }
    const header = lines[0].split(",");
    const rows = lines.slice(1).map(line => line.split(","));
    return { header, rows };
}

function columnIndex(header: string[], names: string[], path: string): number[] {
    const missing = names.filter(n => !header.includes(n));
    if (missing.length > 0) {
        throw new CsvError(`${path}: missing columns ${missing.join(", ")} (have ${header.join(", ")})`);
    }
    return names.map(n => header.indexOf(n));
}

export function readCurves(path: string): CurveRow[] {
    const { header, rows } = parseTable(path);
    const [d, det, atk, tgt, pre, rnk, tc] = columnIndex(
        header, ["dataset", "detector", "attack", "target", "prefix_size", "rank", "t_comm"], path);
    return rows.map(r => ({
        dataset: r[d],
        detector: r[det],
        attack: r[atk],
        target: Number(r[tgt]),
        prefix_size: Number(r[pre]),
        rank: Number(r[rnk]),
        t_comm: Number(r[tc]),
    }));
}

export function readTradeoff(path: string): TradeoffRow[] {
    const { header, rows } = parseTable(path);
    const [d, det, p, er, ch] = columnIndex(
        header, ["dataset", "detector", "p_attack", "expected_rank", "chosen"], path);
    return rows.map(r => ({
        dataset: r[d],
        detector: r[det],
        p_attack: Number(r[p]),
        expected_rank: Number(r[er]),
        chosen: Number(r[ch]),
    }));
}
