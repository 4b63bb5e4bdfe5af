// Wire types for the decision-service JSON API.  Every numeric weight or
// score arrives as a 4-decimal string and is displayed verbatim; the client
// never recomputes weights.

export type Mode = "crisp" | "fuzzy";

export type Attitude = "pessimistic" | "moderate" | "optimistic";

export type JudgmentValue =
  | number
  | [number, number, number]
  | { saaty: number; reciprocal?: boolean }
  | { label: string; reciprocal?: boolean };

export interface MatrixState {
  size: number;
  cells_set: number;
  cells_total: number;
  complete: boolean;
  cells: Record<string, unknown>;
}

export interface SessionState {
  id: string;
  goal: string;
  mode: Mode;
  criteria: string[];
  alternatives: string[];
  cells_set: number;
  cells_total: number;
  completion: string;
  complete: boolean;
  matrices: Record<string, MatrixState>;
  created: number;
  updated: number;
}

export interface ConsistencyDoc {
  lambda_max: string;
  ci: string;
  cr: string;
  consistent: boolean;
  warning?: string;
}

export interface SubmitOutcome {
  matrix: string;
  cells_set: number;
  cells_total: number;
  completion: string;
  matrix_cells_set: number;
  matrix_cells_total: number;
  matrix_complete: boolean;
  consistency: ConsistencyDoc | null;
}

export interface ResultDoc {
  criteria: string[];
  alternatives: string[];
  method: string;
  criteria_weights: string[];
  local_weights: Record<string, string[]>;
  global_scores: string[];
  rank_order: number[];
  ranking: string[];
  diagnostics: Record<string, ConsistencyDoc> | null;
}

export interface CompareDoc {
  alternatives: string[];
  method_a: string;
  method_b: string;
  scores_a: string[];
  scores_b: string[];
  ranking_a: string[];
  ranking_b: string[];
  flips: [string, string][];
  top_choice_agrees: boolean;
}

export interface ErrorDoc {
  error: string;
  detail: { message?: string; missing?: [string, number, number][] } & Record<string, unknown>;
}
