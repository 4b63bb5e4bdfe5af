import { badgeFromConsistency, cellKey, completionText, upperCellPrompts, } from "./viewmodel.js";
import { worstTriad } from "./triad.js";
// Walks the decision maker through every upper-triangle cell, one judgment
// at a time.  Each submission round-trips to the service; the CR badge and
// completion counters always reflect the most recent server response.
export class ElicitationFlow {
    client;
    session;
    cells;
    position = 0;
    values = new Map();
    consistency = new Map();
    matrixDone = new Map();
    lastOutcome = null;
    constructor(client, session) {
        this.client = client;
        this.session = session;
        const selectors = ["criteria", ...session.criteria];
        this.cells = selectors.flatMap((sel) => upperCellPrompts(session, sel));
        for (const sel of selectors) {
            this.values.set(sel, {});
            this.consistency.set(sel, null);
            this.matrixDone.set(sel, false);
        }
    }
    current() {
        return this.position < this.cells.length ? this.cells[this.position] : null;
    }
    done() {
        return this.position >= this.cells.length;
    }
    solveEnabled() {
        return this.lastOutcome !== null && this.lastOutcome.cells_set === this.lastOutcome.cells_total;
    }
    valuesFor(matrix) {
        return this.values.get(matrix) ?? {};
    }
    badgeFor(matrix) {
        return badgeFromConsistency(this.matrixDone.get(matrix) ?? false, this.consistency.get(matrix) ?? null);
    }
    consistencyFor(matrix) {
        return this.consistency.get(matrix) ?? null;
    }
    completion() {
        const set = this.lastOutcome?.cells_set ?? this.session.cells_set;
        const total = this.lastOutcome?.cells_total ?? this.session.cells_total;
        return { set, total, text: completionText(set, total) };
    }
    async submitCurrent(value) {
        const cell = this.current();
        if (cell === null) {
            throw new Error("all judgments are already set");
        }
        const outcome = await this.client.submitJudgment(this.session.id, cell.matrix, cell.i, cell.j, value);
        this.lastOutcome = outcome;
        this.values.get(cell.matrix)[cellKey(cell.i, cell.j)] = value;
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
            triad: offerRevision ? worstTriad(this.values.get(cell.matrix), names.length) : null,
            done: this.done(),
        };
    }
    // Revision: jump back to one cell of an offending matrix and resubmit.
    revisitCell(matrix, i, j) {
        const idx = this.cells.findIndex((c) => c.matrix === matrix && c.i === i && c.j === j);
        if (idx >= 0) {
            this.position = idx;
        }
    }
}
