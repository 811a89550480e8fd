// reportgen <spec.json>: render one figure spec into its output file.

import { readFileSync, writeFileSync } from "node:fs";
import { dirname, resolve } from "node:path";

import { parseSpec, SpecError } from "./types.js";
import { CsvError, readCurves, readTradeoff } from "./csv.js";
import { renderBudgetSweep } from "./figures/budgetSweep.js";
import { renderRankTable } from "./figures/rankTable.js";
import { renderStackelbergBars } from "./figures/stackelbergBars.js";
import { renderTradeoffCurves } from "./figures/tradeoffCurves.js";

export function renderSpecFile(specPath: string): string {
    const spec = parseSpec(JSON.parse(readFileSync(specPath, "utf-8")));
    const base = dirname(resolve(specPath));
    const inputs = spec.inputs.map(p => resolve(base, p));
    let content: string;
    switch (spec.kind) {
        case "budget_sweep":
            content = renderBudgetSweep(inputs.flatMap(p => readCurves(p)), spec.options.dataset);
            break;
        case "rank_table":
            content = renderRankTable(inputs.flatMap(p => readCurves(p)));
            break;
        case "stackelberg_bars":
            content = renderStackelbergBars(inputs.flatMap(p => readCurves(p)), spec.options.n_nodes!);
            break;
        case "tradeoff_curves":
            content = renderTradeoffCurves(inputs.flatMap(p => readTradeoff(p)));
            break;
    }
    const outPath = resolve(base, spec.output);
    writeFileSync(outPath, content);
    return outPath;
}

function main(): number {
    const args = process.argv.slice(2);
    if (args.length !== 1) {
        console.error("usage: reportgen <spec.json>");
        return 2;
    }
    try {
        const out = renderSpecFile(args[0]);
        console.log(`wrote ${out}`);
        return 0;
    } catch (err) {
        if (err instanceof SpecError || err instanceof CsvError) {
            console.error(`spec error: ${(err as Error).message}`);
            return 2;
        }
        console.error(`error: ${(err as Error).message}`);
        return 1;
    }
}

if (process.argv[1] && resolve(process.argv[1]).endsWith("index.js")) {
    process.exit(main());
}
