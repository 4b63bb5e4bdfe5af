function esc(text) {
    return text
        .replaceAll("&", "&amp;")
        .replaceAll("<", "&lt;")
        .replaceAll(">", "&gt;")
        .replaceAll('"', "&quot;");
}
export function renderBadge(vm) {
    if (vm.badge === "pending") {
        return `<span class="badge pending">CR pending</span>`;
    }
    const cr = vm.consistency?.cr ?? "";
    const cls = vm.badge === "ok" ? "ok" : "warn";
    return `<span class="badge ${cls}">CR ${esc(cr)}</span>`;
}
export function renderPrompt(cell) {
    return `<p class="prompt">${esc(cell.prompt)}</p>`;
}
export function renderCompletion(set, total) {
    return `<span class="completion">${set}/${total} judgments</span>`;
}
function renderBars(bars) {
    return bars
        .map((b) => `<div class="bar-row"><span class="bar-label">${esc(b.label)}</span>` +
        `<span class="bar" style="width:${b.width}%"></span>` +
        `<span class="bar-value">${esc(b.valueText)}</span></div>`)
        .join("\n");
}
export function renderResult(vm) {
    const rank = vm.rankList.map((name, idx) => `<li>${idx + 1}. ${esc(name)}</li>`).join("");
    return [
        `<section class="result" data-method="${esc(vm.method)}">`,
        `<h3>Criteria weights</h3>`,
        renderBars(vm.criteriaBars),
        `<h3>Global scores</h3>`,
        renderBars(vm.scoreBars),
        `<h3>Ranking</h3>`,
        `<ol class="ranking">${rank}</ol>`,
        `</section>`,
    ].join("\n");
}
export function renderComparison(vm) {
    const rows = vm.rows
        .map((r) => `<tr class="${r.flipped ? "flipped" : ""}"><td>${esc(r.alternative)}</td>` +
        `<td>${esc(r.scoreA)}</td><td>${esc(r.scoreB)}</td></tr>`)
        .join("");
    const verdict = vm.topChoiceAgrees
        ? `<p class="agree">Top choice agrees</p>`
        : `<p class="disagree">Top choice differs</p>`;
    const flips = vm.flips.length
        ? `<p class="flips">Rank flips: ${vm.flips.map((f) => esc(f.join(" vs "))).join("; ")}</p>`
        : `<p class="flips none">No rank flips</p>`;
    return [
        `<table class="compare"><thead><tr><th>Alternative</th>` +
            `<th>${esc(vm.methodA)}</th><th>${esc(vm.methodB)}</th></tr></thead>`,
        `<tbody>${rows}</tbody></table>`,
        verdict,
        flips,
    ].join("\n");
}
export function renderRevisionOffer(names, triad) {
    if (triad === null) {
        return `<p class="revise">Judgments look inconsistent; consider revising.</p>`;
    }
    const trio = [names[triad.i], names[triad.j], names[triad.k]].map(esc).join(", ");
    return (`<p class="revise">Judgments are inconsistent (CR above 0.10). ` +
        `The comparisons among ${trio} clash the most; revise one of them?</p>`);
}
