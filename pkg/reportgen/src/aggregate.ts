// Grouping and the game's aggregation conventions over curve rows.

import { CurveRow } from "./csv.js";
import { mean, stderr } from "./stats.js";

export function distinct<T>(values: T[]): T[] {
    return [...new Set(values)];
}

// Best rank per (detector, attack, target): max over prefixes.
export function bestRankPerTarget(rows: CurveRow[]): Map<string, Map<string, Map<number, number>>> {
    const out = new Map<string, Map<string, Map<number, number>>>();
    for (const r of rows) {
        let byAttack = out.get(r.detector);
        if (!byAttack) out.set(r.detector, byAttack = new Map());
        let byTarget = byAttack.get(r.attack);
        if (!byTarget) byAttack.set(r.attack, byTarget = new Map());
        const prev = byTarget.get(r.target);
        byTarget.set(r.target, prev === undefined ? r.rank : Math.max(prev, r.rank));
    }
    return out;
}

export interface SeriesPoint {
    prefix: number;
    mean: number;
    stderr: number;
}

// Mean +- SE over targets of a column, per prefix size.
export function prefixSeries(rows: CurveRow[], column: "rank" | "t_comm"): SeriesPoint[] {
    const byPrefix = new Map<number, number[]>();
    for (const r of rows) {
        const vals = byPrefix.get(r.prefix_size);
        if (vals) vals.push(r[column]);
        else byPrefix.set(r.prefix_size, [r[column]]);
    }
    return [...byPrefix.keys()].sort((a, b) => a - b).map(prefix => {
        const vals = byPrefix.get(prefix)!;
        return { prefix, mean: mean(vals), stderr: stderr(vals) };
    });
}

export interface TableCell {
    mean: number;
    stderr: number;
}

export interface RankTable {
    datasets: string[];
    detectors: string[];
    attacks: string[];
    // cells[dataset][detector][attack]
    cells: Map<string, Map<string, Map<string, TableCell>>>;
    // attacker's argmax attack per (dataset, detector), by mean
    chosenAttack: Map<string, Map<string, string>>;
    // defender's two smallest mean-best-rank detectors per dataset
    topTwo: Map<string, string[]>;
}

export function buildRankTable(rows: CurveRow[]): RankTable {
    const datasets = distinct(rows.map(r => r.dataset));
    const detectors = distinct(rows.map(r => r.detector));
    const attacks = distinct(rows.map(r => r.attack));
    const cells = new Map<string, Map<string, Map<string, TableCell>>>();
    const chosenAttack = new Map<string, Map<string, string>>();
    const topTwo = new Map<string, string[]>();
    for (const dataset of datasets) {
        const dsRows = rows.filter(r => r.dataset === dataset);
        const best = bestRankPerTarget(dsRows);
        const byDetector = new Map<string, Map<string, TableCell>>();
        const chosenByDetector = new Map<string, string>();
        const defenderScore = new Map<string, number>();
        for (const detector of detectors) {
            const byAttack = new Map<string, TableCell>();
            const perTargetBest = new Map<number, number>();
            let bestAttack = "";
            let bestMean = -Infinity;
            for (const attack of attacks) {
                const byTarget = best.get(detector)?.get(attack);
                if (!byTarget) continue;
                const vals = [...byTarget.values()];
                const cell = { mean: mean(vals), stderr: stderr(vals) };
                byAttack.set(attack, cell);
                if (cell.mean > bestMean) {
                    bestMean = cell.mean;
                    bestAttack = attack;
                }
                for (const [target, rank] of byTarget) {
                    perTargetBest.set(target, Math.max(perTargetBest.get(target) ?? 0, rank));
                }
            }
            byDetector.set(detector, byAttack);
            chosenByDetector.set(detector, bestAttack);
            if (perTargetBest.size > 0) {
                defenderScore.set(detector, mean([...perTargetBest.values()]));
            }
        }
        cells.set(dataset, byDetector);
        chosenAttack.set(dataset, chosenByDetector);
        topTwo.set(dataset, [...defenderScore.entries()]
            .sort((a, b) => a[1] - b[1])
            .slice(0, 2)
            .map(([name]) => name));
    }
    return { datasets, detectors, attacks, cells, chosenAttack, topTwo };
}
