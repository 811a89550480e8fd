// Mean +- SE best-rank table per (dataset, detector, attack), as HTML.
// The attacker's argmax attack is bold per row; the defender's two best
// detectors per dataset carry superscript markers 1 and 2.

import { CurveRow } from "../csv.js";
import { buildRankTable } from "../aggregate.js";
import { roundHalfEven } from "../stats.js";
import { escapeXml } from "../svg.js";

export function renderRankTable(rows: CurveRow[]): string {
    const table = buildRankTable(rows);
    const head = ["dataset", "CD", ...table.attacks]
        .map(h => `<th>${escapeXml(h)}</th>`).join("");
    const body: string[] = [];
    for (const dataset of table.datasets) {
        const topTwo = table.topTwo.get(dataset) ?? [];
        for (const detector of table.detectors) {
            const byAttack = table.cells.get(dataset)?.get(detector);
            if (!byAttack || byAttack.size === 0) continue;
            const chosen = table.chosenAttack.get(dataset)?.get(detector);
            const mark = topTwo[0] === detector ? "<sup>1</sup>"
                : topTwo[1] === detector ? "<sup>2</sup>" : "";
            const cells = table.attacks.map(attack => {
                const cell = byAttack.get(attack);
                if (!cell) return "<td></td>";
                const text = `${roundHalfEven(cell.mean)} &plusmn; ${roundHalfEven(cell.stderr)}`;
                return attack === chosen ? `<td><b>${text}</b></td>` : `<td>${text}</td>`;
            }).join("");
            body.push(`<tr><td>${escapeXml(dataset)}</td>` +
                `<td>${escapeXml(detector)}${mark}</td>${cells}</tr>`);
        }
    }
    return [
        "<!DOCTYPE html>",
        "<html><head><meta charset=\"utf-8\"><title>rank table</title>",
        "<style>table{border-collapse:collapse}td,th{border:1px solid #999;padding:4px 8px;text-align:center}</style>",
        "</head><body>",
        "<table>",
        `<thead><tr>${head}</tr></thead>`,
        "<tbody>",
        ...body,
        "</tbody>",
        "</table>",
        "</body></html>",
        "",
    ].join("\n");
}
