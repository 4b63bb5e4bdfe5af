import { ApiClient } from "./api.js";
import { ConsistencyDoc, JudgmentValue, SessionState, SubmitOutcome } from "./types.js";
import {
  BadgeState,
  CellPrompt,
  badgeFromConsistency,
  cellKey,
  completionText,
  upperCellPrompts,
} from "./viewmodel.js";
import { Triad, worstTriad } from "./triad.js";

export interface StepOutcome {
  outcome: SubmitOutcome;
  matrixComplete: boolean;
  badge: BadgeState;
  offerRevision: boolean;
  triad: Triad | null;
  done: boolean;
}

// Walks the decision maker through every upper-triangle cell, one judgment
// at a time.  Each submission round-trips to the service; the CR badge and
// completion counters always reflect the most recent server response.
export class ElicitationFlow {
  readonly cells: CellPrompt[];
  private position = 0;
  private values = new Map<string, Record<string, JudgmentValue>>();
  private consistency = new Map<string, ConsistencyDoc | null>();
  private matrixDone = new Map<string, boolean>();
  private lastOutcome: SubmitOutcome | null = null;

  constructor(
    private client: ApiClient,
    readonly session: SessionState,
  ) {
    const selectors = ["criteria", ...session.criteria];
    this.cells = selectors.flatMap((sel) => upperCellPrompts(session, sel));
    for (const sel of selectors) {
      this.values.set(sel, {});
      this.consistency.set(sel, null);
      this.matrixDone.set(sel, false);
    }
  }

  current(): CellPrompt | null {
    return this.position < this.cells.length ? this.cells[this.position] : null;
  }

  done(): boolean {
    return this.position >= this.cells.length;
  }

  solveEnabled(): boolean {
    return this.lastOutcome !== null && this.lastOutcome.cells_set === this.lastOutcome.cells_total;
  }

  valuesFor(matrix: string): Record<string, JudgmentValue> {
    return this.values.get(matrix) ?? {};
  }

  badgeFor(matrix: string): BadgeState {
    return badgeFromConsistency(
      this.matrixDone.get(matrix) ?? false,
      this.consistency.get(matrix) ?? null,
    );
  }

  consistencyFor(matrix: string): ConsistencyDoc | null {
    return this.consistency.get(matrix) ?? null;
  }

  completion(): { set: number; total: number; text: string } {
    const set = this.lastOutcome?.cells_set ?? this.session.cells_set;
    const total = this.lastOutcome?.cells_total ?? this.session.cells_total;
    return { set, total, text: completionText(set, total) };
  }

  async submitCurrent(value: JudgmentValue): Promise<StepOutcome> {
    const cell = this.current();
    if (cell === null) {
      throw new Error("all judgments are already set");
    }
    const outcome = await this.client.submitJudgment(
      this.session.id,
      cell.matrix,
      cell.i,
      cell.j,
      value,
    );
    this.lastOutcome = outcome;
    this.values.get(cell.matrix)![cellKey(cell.i, cell.j)] = value;
    this.matrixDone.set(cell.matrix, outcome.matrix_complete);
    this.consistency.set(cell.matrix, outcome.consistency);
    this.position += 1;

    const badge = badgeFromConsistency(outcome.matrix_complete, outcome.consistency);
    const offerRevision = badge === "warn";
    const names = cell.matrix === "criteria" ? this.session.criteria : this.session.alternatives;
    return {
      outcome,
      matrixComplete: outcome.matrix_complete,
      badge,
      offerRevision,
      triad: offerRevision ? worstTriad(this.values.get(cell.matrix)!, names.length) : null,
      done: this.done(),
    };
  }

  // Revision: jump back to one cell of an offending matrix and resubmit.
  revisitCell(matrix: string, i: number, j: number): void {
    const idx = this.cells.findIndex((c) => c.matrix === matrix && c.i === i && c.j === j);
    if (idx >= 0) {
      this.position = idx;
    }
  }
}
