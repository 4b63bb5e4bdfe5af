import { JudgmentValue } from "./types.js";
import { cellKey, judgmentAsRatio } from "./viewmodel.js";

export interface Triad {
  i: number;
  j: number;
  k: number;
  score: number; // |log a_ij + log a_jk - log a_ik|, 0 for a perfect triad
}

function ratioAt(values: Record<string, JudgmentValue>, a: number, b: number): number {
  if (a === b) {
    return 1;
  }
  const upper = values[cellKey(Math.min(a, b), Math.max(a, b))];
  if (upper === undefined) {
    return NaN;
  }
  const r = judgmentAsRatio(upper);
  return a < b ? r : 1 / r;
}

// The triad (i, j, k) that breaks transitivity hardest: if the decision
// maker says i over j and j over k, the implied i-over-k is the product;
// the biggest log deviation from what they actually entered is the best
// place to suggest a revision.
export function worstTriad(values: Record<string, JudgmentValue>, n: number): Triad | null {
  let worst: Triad | null = null;
  for (let i = 0; i < n; i++) {
    for (let j = i + 1; j < n; j++) {
      for (let k = j + 1; k < n; k++) {
        const aij = ratioAt(values, i, j);
        const ajk = ratioAt(values, j, k);
        const aik = ratioAt(values, i, k);
        if (!isFinite(aij) || !isFinite(ajk) || !isFinite(aik)) {
          continue;
        }
        const score = Math.abs(Math.log(aij) + Math.log(ajk) - Math.log(aik));
        if (worst === null || score > worst.score) {
          worst = { i, j, k, score };
        }
      }
    }
  }
  return worst;
}
