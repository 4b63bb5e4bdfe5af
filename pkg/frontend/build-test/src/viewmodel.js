// Linguistic-first input: the five named grades, with the even values as a
// fine-tune in between.
export const LINGUISTIC_GRADES = [
    { label: "Equally important", grade: 1 },
    { label: "Moderately important", grade: 3 },
    { label: "Strongly important", grade: 5 },
    { label: "Very strongly important", grade: 7 },
    { label: "Extremely important", grade: 9 },
];
export const INTERMEDIATE_GRADES = [2, 4, 6, 8];
export function cellKey(i, j) {
    return `${i},${j}`;
}
function elementNames(state, matrix) {
    return matrix === "criteria" ? state.criteria : state.alternatives;
}
export function upperCellPrompts(state, matrix) {
    const names = elementNames(state, matrix);
    const scope = matrix === "criteria" ? `toward "${state.goal}"` : `under ${matrix}`;
    const prompts = [];
    for (let i = 0; i < names.length; i++) {
        for (let j = i + 1; j < names.length; j++) {
            prompts.push({
                matrix,
                i,
                j,
                left: names[i],
                right: names[j],
                prompt: `How important is ${names[i]} vs ${names[j]} (${scope})?`,
            });
        }
    }
    return prompts;
}
export function badgeFromConsistency(complete, consistency) {
    if (!complete || consistency === null) {
        return "pending";
    }
    return consistency.consistent ? "ok" : "warn";
}
export function completionText(set, total) {
    return `${set}/${total}`;
}
export function buildJudgmentViewModel(state, matrix, values, consistency) {
    const m = state.matrices[matrix];
    return {
        matrix,
        prompts: upperCellPrompts(state, matrix),
        values,
        cellsSet: m.cells_set,
        cellsTotal: m.cells_total,
        completionText: completionText(m.cells_set, m.cells_total),
        badge: badgeFromConsistency(m.complete, consistency),
        consistency,
    };
}
function bars(labels, values) {
    return labels.map((label, idx) => ({
        label,
        valueText: values[idx],
        width: Math.round(parseFloat(values[idx]) * 1000) / 10,
    }));
}
export function buildResultViewModel(doc) {
    const locals = {};
    for (const criterion of doc.criteria) {
        locals[criterion] = bars(doc.alternatives, doc.local_weights[criterion]);
    }
    return {
        method: doc.method,
        criteriaBars: bars(doc.criteria, doc.criteria_weights),
        scoreBars: bars(doc.alternatives, doc.global_scores),
        rankList: doc.ranking,
        localBars: locals,
    };
}
export function buildComparePanel(doc) {
    const flipped = new Set(doc.flips.flat());
    return {
        methodA: doc.method_a,
        methodB: doc.method_b,
        rows: doc.alternatives.map((alternative, idx) => ({
            alternative,
            scoreA: doc.scores_a[idx],
            scoreB: doc.scores_b[idx],
            flipped: flipped.has(alternative),
        })),
        flips: doc.flips,
        topChoiceAgrees: doc.top_choice_agrees,
    };
}
// Pairs of alternatives whose relative order differs between two server
// rankings.  Positions come from the server's rank_order permutations; no
// weights are recomputed here.
export function rankingFlips(alternatives, rankOrderA, rankOrderB) {
    const posA = new Array(alternatives.length);
    const posB = new Array(alternatives.length);
    rankOrderA.forEach((alt, rank) => (posA[alt] = rank));
    rankOrderB.forEach((alt, rank) => (posB[alt] = rank));
    const flips = [];
    for (let i = 0; i < alternatives.length; i++) {
        for (let j = i + 1; j < alternatives.length; j++) {
            if ((posA[i] - posA[j]) * (posB[i] - posB[j]) < 0) {
                flips.push([alternatives[i], alternatives[j]]);
            }
        }
    }
    return flips;
}
// Numeric view of an entered judgment, used only for inconsistency guidance
// (triad hunting); displayed numbers always come from the server.
export function judgmentAsRatio(value) {
    if (typeof value === "number") {
        return value;
    }
    if (Array.isArray(value)) {
        return value[1]; // peak of the fuzzy range
    }
    if ("saaty" in value) {
        return value.reciprocal ? 1 / value.saaty : value.saaty;
    }
    const named = LINGUISTIC_GRADES.find((g) => g.label.toLowerCase() === value.label.toLowerCase());
    const grade = named ? named.grade : NaN;
    return value.reciprocal ? 1 / grade : grade;
}
