import { ApiClient, ApiError, HttpTransport } from "./api.js";
import { ElicitationFlow, StepOutcome } from "./flow.js";
import { renderBadge, renderCompletion, renderComparison, renderPrompt, renderResult, renderRevisionOffer } from "./render.js";
import { Attitude, JudgmentValue, Mode, SessionState } from "./types.js";
import {
  INTERMEDIATE_GRADES,
  LINGUISTIC_GRADES,
  buildComparePanel,
  buildJudgmentViewModel,
  buildResultViewModel,
} from "./viewmodel.js";
import { AttitudePanel } from "./whatif.js";

const $ = (id: string) => document.getElementById(id)!;

let client: ApiClient;
let session: SessionState | null = null;
let flow: ElicitationFlow | null = null;
let panel: AttitudePanel | null = null;

function apiClient(): ApiClient {
  const base = ($("service-url") as HTMLInputElement).value.replace(/\/+$/, "");
  return new ApiClient(new HttpTransport(base));
}

function setStatus(text: string, isError = false): void {
  const el = $("status");
  el.textContent = text;
  el.className = isError ? "error" : "";
}

async function guarded(action: () => Promise<void>): Promise<void> {
  try {
    await action();
    setStatus("");
  } catch (err) {
    if (err instanceof ApiError) {
      setStatus(`${err.code}: ${err.detail.message ?? ""}`, true);
    } else {
      setStatus(`offline or unreachable service (${err})`, true);
      ($("submit-judgment") as HTMLButtonElement).disabled = true;
    }
  }
}

function startFlow(state: SessionState): void {
  session = state;
  flow = new ElicitationFlow(client, state);
  panel = null;
  $("session-box").classList.remove("hidden");
  $("results").innerHTML = "";
  $("whatif").innerHTML = "";
  $("compare-box").innerHTML = "";
  renderStep();
}

function renderStep(outcome?: StepOutcome): void {
  if (flow === null || session === null) {
    return;
  }
  const { set, total, text } = flow.completion();
  $("completion").innerHTML = renderCompletion(set, total);
  void text;
  const badges = ["criteria", ...session.criteria]
    .map((sel) => {
      const vm = buildJudgmentViewModel(
        { ...session!, matrices: { ...session!.matrices, [sel]: sessionMatrixState(sel) } },
        sel,
        flow!.valuesFor(sel),
        flow!.consistencyFor(sel),
      );
      return `<div class="matrix-badge">${sel}: ${renderBadge(vm)}</div>`;
    })
    .join("");
  $("badges").innerHTML = badges;

  const cell = flow.current();
  const solveBtn = $("solve-controls") as HTMLDivElement;
  if (cell === null) {
    $("prompt-box").innerHTML = `<p class="prompt">All judgments captured.</p>`;
    ($("submit-judgment") as HTMLButtonElement).disabled = true;
    solveBtn.classList.remove("hidden");
  } else {
    $("prompt-box").innerHTML = renderPrompt(cell);
    ($("submit-judgment") as HTMLButtonElement).disabled = false;
    solveBtn.classList.toggle("hidden", !flow.solveEnabled());
  }
  if (outcome?.offerRevision && session) {
    const names = outcome.outcome.matrix === "criteria" ? session.criteria : session.alternatives;
    $("revision").innerHTML = renderRevisionOffer([...names], outcome.triad);
  } else {
    $("revision").innerHTML = "";
  }
}

function sessionMatrixState(sel: string) {
  // local count of entered cells; totals come from the created session
  const entered = Object.keys(flow!.valuesFor(sel)).length;
  const base = session!.matrices[sel];
  return {
    ...base,
    cells_set: entered,
    complete: entered === base.cells_total,
  };
}

function currentJudgment(): JudgmentValue {
  const grade = parseInt(($("grade") as HTMLSelectElement).value, 10);
  const reciprocal = ($("direction") as HTMLSelectElement).value === "right";
  if (grade === 1) {
    return { saaty: 1 };
  }
  return { saaty: grade, reciprocal };
}

async function showResult(params: { method?: "eigen" | "geomean"; attitude?: Attitude }): Promise<void> {
  const result = await client.solve(session!.id, params);
  $("results").innerHTML = renderResult(buildResultViewModel(result));
}

function wire(): void {
  const gradeSelect = $("grade") as HTMLSelectElement;
  for (const { label, grade } of LINGUISTIC_GRADES) {
    const opt = document.createElement("option");
    opt.value = String(grade);
    opt.textContent = `${label} (${grade})`;
    gradeSelect.appendChild(opt);
  }
  for (const grade of INTERMEDIATE_GRADES) {
    const opt = document.createElement("option");
    opt.value = String(grade);
    opt.textContent = `Intermediate (${grade})`;
    gradeSelect.appendChild(opt);
  }

  $("new-session").onclick = () =>
    guarded(async () => {
      client = apiClient();
      const goal = ($("goal") as HTMLInputElement).value || "Pick the best alternative";
      const criteria = ($("criteria") as HTMLInputElement).value.split(";").map((s) => s.trim()).filter(Boolean);
      const alternatives = ($("alternatives") as HTMLInputElement).value.split(";").map((s) => s.trim()).filter(Boolean);
      const mode = ($("mode") as HTMLSelectElement).value as Mode;
      startFlow(await client.createSession(goal, criteria, alternatives, mode));
    });

  for (const mode of ["crisp", "fuzzy"] as Mode[]) {
    $(`demo-${mode}`).onclick = () =>
      guarded(async () => {
        client = apiClient();
        startFlow(await client.loadFixture(mode));
        renderStep();
        if (flow && session) {
          $("prompt-box").innerHTML = `<p class="prompt">Demo fixture loaded; judgments are complete.</p>`;
          ($("submit-judgment") as HTMLButtonElement).disabled = true;
          $("solve-controls").classList.remove("hidden");
        }
      });
  }

  $("submit-judgment").onclick = () =>
    guarded(async () => {
      if (flow === null) {
        return;
      }
      const outcome = await flow.submitCurrent(currentJudgment());
      renderStep(outcome);
    });

  $("solve-geomean").onclick = () =>
    guarded(() => showResult(session!.mode === "crisp" ? { method: "geomean" } : {}));
  $("solve-eigen").onclick = () =>
    guarded(() => showResult(session!.mode === "crisp" ? { method: "eigen" } : {}));

  for (const attitude of ["pessimistic", "moderate", "optimistic"] as Attitude[]) {
    $(`attitude-${attitude}`).onclick = () =>
      guarded(async () => {
        if (session!.mode !== "fuzzy") {
          setStatus("attitudes apply to fuzzy sessions", true);
          return;
        }
        if (panel === null) {
          panel = new AttitudePanel(client, session!.id);
          await panel.init();
        }
        const view = await panel.toggle(attitude);
        $("whatif").innerHTML =
          renderResult(view.view) +
          (view.flagged
            ? `<p class="flips">Flips vs moderate: ${view.flipsVsModerate
                .map((f) => f.join(" vs "))
                .join("; ")}</p>`
            : `<p class="flips none">No flips vs moderate</p>`);
      });
  }

  $("run-compare").onclick = () =>
    guarded(async () => {
      const cmp = await client.compare(session!.id, {});
      $("compare-box").innerHTML = renderComparison(buildComparePanel(cmp));
    });
}

wire();
