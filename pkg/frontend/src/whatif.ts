import { ApiClient } from "./api.js";
import { Attitude, ResultDoc } from "./types.js";
import { ResultViewModel, buildResultViewModel, rankingFlips } from "./viewmodel.js";

export interface AttitudeView {
  attitude: Attitude;
  view: ResultViewModel;
  result: ResultDoc;
  flipsVsModerate: [string, string][];
  flagged: boolean;
}

// Three-way attitude toggle over a complete fuzzy session.  The panel opens
// on the moderate solve; after that every toggle issues exactly one solve
// request (the service replays cached bytes when nothing changed) and flips
// are flagged against the moderate ranking.
export class AttitudePanel {
  private moderate: ResultDoc | null = null;
  solveCount = 0;

  constructor(
    private client: ApiClient,
    private sessionId: string,
  ) {}

  async init(): Promise<AttitudeView> {
    return this.toggle("moderate");
  }

  async toggle(attitude: Attitude): Promise<AttitudeView> {
    const result = await this.client.solve(this.sessionId, { attitude });
    this.solveCount += 1;
    if (attitude === "moderate") {
      this.moderate = result;
    }
    if (this.moderate === null) {
      throw new Error("toggle before init: the moderate baseline is not loaded");
    }
    const flips =
      attitude === "moderate"
        ? ([] as [string, string][])
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
