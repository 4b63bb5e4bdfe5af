import { CompareDoc, ConsistencyDoc, JudgmentValue, ResultDoc, SessionState } from "./types.js";

// Linguistic-first input: the five named grades, with the even values as a
// fine-tune in between.
export const LINGUISTIC_GRADES: { label: string; grade: number }[] = [
  { label: "Equally important", grade: 1 },
  { label: "Moderately important", grade: 3 },
  { label: "Strongly important", grade: 5 },
  { label: "Very strongly important", grade: 7 },
  { label: "Extremely important", grade: 9 },
];

export const INTERMEDIATE_GRADES = [2, 4, 6, 8];

export type BadgeState = "ok" | "warn" | "pending";

export interface CellPrompt {
  matrix: string;
  i: number;
  j: number;
  left: string;
  right: string;
  prompt: string;
}

export interface JudgmentViewModel {
  matrix: string;
  prompts: CellPrompt[];
  values: Record<string, JudgmentValue>;
  cellsSet: number;
  cellsTotal: number;
  completionText: string; // exact count, not a rounded percentage
  badge: BadgeState;
  consistency: ConsistencyDoc | null;
}

export function cellKey(i: number, j: number): string {
  return `${i},${j}`;
}

function elementNames(state: SessionState, matrix: string): string[] {
  return matrix === "criteria" ? state.criteria : state.alternatives;
}

export function upperCellPrompts(state: SessionState, matrix: string): CellPrompt[] {
  const names = elementNames(state, matrix);
  const scope = matrix === "criteria" ? `toward "${state.goal}"` : `under ${matrix}`;
  const prompts: CellPrompt[] = [];
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

export function badgeFromConsistency(
  complete: boolean,
  consistency: ConsistencyDoc | null,
): BadgeState {
  if (!complete || consistency === null) {
    return "pending";
  }
  return consistency.consistent ? "ok" : "warn";
}

export function completionText(set: number, total: number): string {
  return `${set}/${total}`;
}

export function buildJudgmentViewModel(
  state: SessionState,
  matrix: string,
  values: Record<string, JudgmentValue>,
  consistency: ConsistencyDoc | null,
): JudgmentViewModel {
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

export interface Bar {
  label: string;
  valueText: string; // the server string, verbatim
  width: number; // presentation-only scaling of the same value
}

export interface ResultViewModel {
  method: string;
  criteriaBars: Bar[];
  scoreBars: Bar[];
  rankList: string[];
  localBars: Record<string, Bar[]>;
}

function bars(labels: string[], values: string[]): Bar[] {
  return labels.map((label, idx) => ({
    label,
    valueText: values[idx],
    width: Math.round(parseFloat(values[idx]) * 1000) / 10,
  }));
}

export function buildResultViewModel(doc: ResultDoc): ResultViewModel {
  const locals: Record<string, Bar[]> = {};
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

export interface ComparePanelViewModel {
  methodA: string;
  methodB: string;
  rows: { alternative: string; scoreA: string; scoreB: string; flipped: boolean }[];
  flips: [string, string][];
  topChoiceAgrees: boolean;
}

export function buildComparePanel(doc: CompareDoc): ComparePanelViewModel {
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
export function rankingFlips(
  alternatives: string[],
  rankOrderA: number[],
  rankOrderB: number[],
): [string, string][] {
  const posA = new Array<number>(alternatives.length);
  const posB = new Array<number>(alternatives.length);
  rankOrderA.forEach((alt, rank) => (posA[alt] = rank));
  rankOrderB.forEach((alt, rank) => (posB[alt] = rank));
  const flips: [string, string][] = [];
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
export function judgmentAsRatio(value: JudgmentValue): number {
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
