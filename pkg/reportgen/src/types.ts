// Figure specifications consumed from the harness's report_specs directory.

export type FigureKind = "budget_sweep" | "rank_table" | "stackelberg_bars" | "tradeoff_curves";

export interface FigureSpec {
    kind: FigureKind;
    inputs: string[];
    output: string;
    options: {
        dataset?: string;
        n_nodes?: number;
        width?: number;
        height?: number;
    };
}

export class SpecError extends Error {}

const KINDS: FigureKind[] = ["budget_sweep", "rank_table", "stackelberg_bars", "tradeoff_curves"];

export function parseSpec(raw: unknown): FigureSpec {
    if (typeof raw !== "object" || raw === null) {
        throw new SpecError("spec must be a JSON object");
    }
    const obj = raw as Record<string, unknown>;
    const kind = obj.kind as FigureKind;
    if (!KINDS.includes(kind)) {
        throw new SpecError(`unknown figure kind ${JSON.stringify(obj.kind)}; valid: ${KINDS.join(", ")}`);
    }
    if (!Array.isArray(obj.inputs) || obj.inputs.length === 0 || obj.inputs.some(p => typeof p !== "string")) {
        throw new SpecError("spec.inputs must be a non-empty list of CSV paths");
    }
    if (typeof obj.output !== "string" || obj.output.length === 0) {
        throw new SpecError("spec.output must name one output file");
    }
    const options = (obj.options ?? {}) as FigureSpec["options"];
    if (kind === "stackelberg_bars" && typeof options.n_nodes !== "number") {
        throw new SpecError("stackelberg_bars needs options.n_nodes to normalize ranks");
    }
    return { kind, inputs: obj.inputs as string[], output: obj.output, options };
}
