import { buildResultViewModel, rankingFlips } from "./viewmodel.js";
// Three-way attitude toggle over a complete fuzzy session.  The panel opens
// on the moderate solve; after that every toggle issues exactly one solve
// request (the service replays cached bytes when nothing changed) and flips
// are flagged against the moderate ranking.
export class AttitudePanel {
    client;
    sessionId;
    moderate = null;
    solveCount = 0;
    constructor(client, sessionId) {
        this.client = client;
        this.sessionId = sessionId;
    }
    async init() {
        return this.toggle("moderate");
    }
    async toggle(attitude) {
        const result = await this.client.solve(this.sessionId, { attitude });
        this.solveCount += 1;
        if (attitude === "moderate") {
            this.moderate = result;
        }
        if (this.moderate === null) {
            throw new Error("toggle before init: the moderate baseline is not loaded");
        }
        const flips = attitude === "moderate"
            ? []
            : rankingFlips(result.alternatives, this.moderate.rank_order, result.rank_order);
        return {
            attitude,
            view: buildResultViewModel(result),
            result,
            flipsVsModerate: flips,
            flagged: flips.length > 0,
        };
    }
}
