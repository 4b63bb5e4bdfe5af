"""Session-scoped HTTP facade for incremental judgment elicitation.

Sessions live in memory, one per decision problem under construction.  The
client sets upper-triangle cells one at a time (reciprocals are implied),
gets live consistency feedback as matrices complete, and runs solves,
what-ifs, and comparisons.  All numerics in responses are 4-decimal strings;
a re-solve without intervening edits replays the cached bytes.
"""

from __future__ import annotations

import json
import threading
import time
import uuid

from fastapi import Body, FastAPI, Request, Response
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from . import store
from .comparison import consistency, validate_matrix
from .engine import (
    DecisionProblem,
    compare_rankings,
    fuzzify_problem,
    solve_crisp,
    solve_fuzzy,
    what_if_attitude,
)
from .errors import (
    AhpError,
    BadRequest,
    CellOutOfRange,
    IncompleteJudgments,
    LowerTriangleRejected,
    MatrixValidationError,
    ParseError,
    UnknownSession,
)
from .fuzzy import ATTITUDES, Tfn, tfn_invert, validate_fuzzy_matrix

CRISP_MIN, CRISP_MAX = 1.0 / 9.0, 9.0

_STATUS = {
    "bad_request": 400,
    "parse_error": 400,
    "unknown_label": 400,
    "unknown_session": 404,
    "cell_out_of_range": 422,
    "lower_triangle_rejected": 422,
    "incomplete_judgments": 409,
    "io_error": 500,
}


class Session:
    """One decision problem under construction, plus its result cache."""

    def __init__(self, goal: str, criteria: tuple[str, ...], alternatives: tuple[str, ...], mode: str):
        self.id = uuid.uuid4().hex
        self.goal = goal
        self.criteria = criteria
        self.alternatives = alternatives
        self.mode = mode
        # selector -> {(i, j): crisp float | Tfn}
        self.cells: dict[str, dict[tuple[int, int], object]] = {"criteria": {}}
        for name in criteria:
            self.cells[name] = {}
        now = time.time()
        self.created = now
        self.updated = now
        self.result_cache: dict[str, bytes] = {}
        self.lock = threading.Lock()

    def matrix_size(self, selector: str) -> int:
        return len(self.criteria) if selector == "criteria" else len(self.alternatives)

    def cells_total(self, selector: str) -> int:
        n = self.matrix_size(selector)
        return n * (n - 1) // 2

    def completion(self) -> tuple[int, int]:
        done = sum(len(c) for c in self.cells.values())
        total = sum(self.cells_total(sel) for sel in self.cells)
        return done, total

    def missing_cells(self) -> list[tuple[str, int, int]]:
        out = []
        for sel in ("criteria", *self.criteria):
            n = self.matrix_size(sel)
            have = self.cells[sel]
            for i in range(n):
                for j in range(i + 1, n):
                    if (i, j) not in have:
                        out.append((sel, i, j))
        return out

    def build_matrix(self, selector: str):
        n = self.matrix_size(selector)
        labels = self.criteria if selector == "criteria" else self.alternatives
        if self.mode == "crisp":
            full = [[1.0] * n for _ in range(n)]
            for (i, j), v in self.cells[selector].items():
                full[i][j] = v
                full[j][i] = 1.0 / v
            return validate_matrix(full, labels, matrix=selector)
        one = Tfn(1.0, 1.0, 1.0)
        full = [[one] * n for _ in range(n)]
        for (i, j), t in self.cells[selector].items():
            full[i][j] = t
            full[j][i] = tfn_invert(t)
        return validate_fuzzy_matrix(full, labels, matrix=selector)

    def build_problem(self) -> DecisionProblem:
        missing = self.missing_cells()
        if missing:
            raise IncompleteJudgments(missing)
        return DecisionProblem(
            goal=self.goal,
            criteria=self.criteria,
            alternatives=self.alternatives,
            criteria_matrix=self.build_matrix("criteria"),
            alternative_matrices=tuple(self.build_matrix(c) for c in self.criteria),
            mode=self.mode,
        )


def _fmt(x: float) -> str:
    return f"{x:.4f}"


def _render_cell(v) -> object:
    if isinstance(v, Tfn):
        return [v.l, v.m, v.u]
    return v


def _consistency_doc(report) -> dict:
    doc = {
        "lambda_max": _fmt(report.lambda_max),
        "ci": _fmt(report.ci),
        "cr": _fmt(report.cr),
        "consistent": report.consistent,
    }
    if not report.consistent:
        doc["warning"] = "judgments are inconsistent (CR > 0.10); consider revising"
    return doc


def _comparison_doc(cmp) -> dict:
    return {
        "alternatives": list(cmp.alternatives),
        "method_a": cmp.method_a,
        "method_b": cmp.method_b,
        "scores_a": [_fmt(s) for s in cmp.scores_a],
        "scores_b": [_fmt(s) for s in cmp.scores_b],
        "ranking_a": [cmp.alternatives[i] for i in cmp.rank_a],
        "ranking_b": [cmp.alternatives[i] for i in cmp.rank_b],
        "flips": [list(f) for f in cmp.flips],
        "top_choice_agrees": cmp.top_choice_agrees,
    }


def create_app() -> FastAPI:
    app = FastAPI(title="ahpkit", docs_url=None, redoc_url=None)
    # desk-scale single-operator tool, no auth; let a locally served UI call us
    app.add_middleware(CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"])
    sessions: dict[str, Session] = {}
    registry_lock = threading.Lock()

    @app.exception_handler(AhpError)
    async def _ahp_error(_request: Request, exc: AhpError):
        status = _STATUS.get(exc.code, 422)
        if isinstance(exc, ParseError):
            status = 400
        return JSONResponse(status_code=status, content={"error": exc.code, "detail": exc.detail()})

    def get_session(session_id: str) -> Session:
        s = sessions.get(session_id)
        if s is None:
            raise UnknownSession(f"no session {session_id!r}")
        return s

    def session_state(s: Session) -> dict:
        done, total = s.completion()
        matrices = {}
        for sel in ("criteria", *s.criteria):
            have = s.cells[sel]
            matrices[sel] = {
                "size": s.matrix_size(sel),
                "cells_set": len(have),
                "cells_total": s.cells_total(sel),
                "complete": len(have) == s.cells_total(sel),
                "cells": {f"{i},{j}": _render_cell(v) for (i, j), v in sorted(have.items())},
            }
        return {
            "id": s.id,
            "goal": s.goal,
            "mode": s.mode,
            "criteria": list(s.criteria),
            "alternatives": list(s.alternatives),
            "cells_set": done,
            "cells_total": total,
            "completion": _fmt(done / total if total else 1.0),
            "complete": done == total,
            "matrices": matrices,
            "created": s.created,
            "updated": s.updated,
        }

    @app.post("/sessions", status_code=201)
    def create_session(payload: dict = Body(...)):
        criteria = payload.get("criteria")
        alternatives = payload.get("alternatives")
        mode = payload.get("mode", "crisp")
        goal = str(payload.get("goal", ""))
        if mode not in ("crisp", "fuzzy"):
            raise BadRequest(f"mode must be crisp or fuzzy, got {mode!r}")
        for field, value in (("criteria", criteria), ("alternatives", alternatives)):
            if not isinstance(value, list) or len(value) < 2:
                raise BadRequest(f"{field} must list at least two names")
            if any(not isinstance(x, str) or not x.strip() for x in value):
                raise BadRequest(f"{field} names must be non-empty strings")
            if len(set(value)) != len(value):
                raise BadRequest(f"duplicate {field} names")
        s = Session(goal, tuple(criteria), tuple(alternatives), mode)
        with registry_lock:
            sessions[s.id] = s
        return session_state(s)

    @app.get("/sessions/{session_id}")
    def get_state(session_id: str):
        return session_state(get_session(session_id))

    @app.put("/sessions/{session_id}/judgments")
    def submit_judgment(session_id: str, payload: dict = Body(...)):
        s = get_session(session_id)
        selector = payload.get("matrix", "criteria")
        if selector not in s.cells:
            raise BadRequest(f"unknown matrix selector {selector!r}")
        i, j = payload.get("i"), payload.get("j")
        n = s.matrix_size(selector)
        if not (isinstance(i, int) and isinstance(j, int)) or not (0 <= i < n and 0 <= j < n) or i == j:
            raise CellOutOfRange(f"cell ({i},{j}) is not an off-diagonal position of a {n}x{n} matrix")
        if i > j:
            raise LowerTriangleRejected(
                f"cell ({i},{j}) is below the diagonal; submit ({j},{i}) and the reciprocal is implied"
            )
        raw = payload.get("value")
        if s.mode == "crisp":
            value = store.decode_crisp_value(raw)
            if not (CRISP_MIN - 1e-9 <= value <= CRISP_MAX + 1e-9):
                raise CellOutOfRange(f"crisp judgment {value!r} outside [1/9, 9]")
        else:
            try:
                value = store.decode_fuzzy_value(raw)
            except ParseError as exc:
                raise CellOutOfRange(str(exc)) from None
            if not value.is_positive():
                raise CellOutOfRange("fuzzy judgment must have l > 0")
        with s.lock:
            s.cells[selector][(i, j)] = value
            s.updated = time.time()
            s.result_cache.clear()
        have = s.cells[selector]
        done, total = s.completion()
        matrix_complete = len(have) == s.cells_total(selector)
        body = {
            "matrix": selector,
            "cells_set": done,
            "cells_total": total,
            "completion": _fmt(done / total if total else 1.0),
            "matrix_cells_set": len(have),
            "matrix_cells_total": s.cells_total(selector),
            "matrix_complete": matrix_complete,
            "consistency": None,
        }
        if matrix_complete and s.mode == "crisp":
            body["consistency"] = _consistency_doc(consistency(s.build_matrix(selector)))
        return body

    def _solve(s: Session, payload: dict):
        method = payload.get("method")
        attitude = payload.get("attitude")
        if method is not None and attitude is not None:
            raise BadRequest("pass either method or attitude, not both")
        if s.mode == "crisp":
            if attitude is not None:
                raise BadRequest("attitudes apply to fuzzy sessions; crisp sessions take a method")
            method = {"geomean": "geometric-mean", None: "geometric-mean"}.get(method, method)
            if method not in ("eigen", "geometric-mean"):
                raise BadRequest(f"method must be eigen or geomean, got {payload.get('method')!r}")
            return solve_crisp(s.build_problem(), method)
        if method is not None:
            raise BadRequest("fuzzy sessions solve by extent analysis; pass attitude for a crisp what-if")
        if attitude is not None:
            if attitude not in ATTITUDES:
                raise BadRequest(f"attitude must be one of {ATTITUDES}")
            return what_if_attitude(s.build_problem(), attitude)
        return solve_fuzzy(s.build_problem())

    @app.post("/sessions/{session_id}/solve")
    def solve_session(session_id: str, payload: dict = Body(default={})):
        s = get_session(session_id)
        key = "solve:" + json.dumps(payload, sort_keys=True)
        cached = s.result_cache.get(key)
        if cached is not None:
            return Response(content=cached, media_type="application/json")
        doc = store.result_to_document(_solve(s, payload))
        body = json.dumps(doc, sort_keys=True).encode()
        with s.lock:
            s.result_cache[key] = body
        return Response(content=body, media_type="application/json")

    @app.post("/sessions/{session_id}/compare")
    def compare_session(session_id: str, payload: dict = Body(default={})):
        s = get_session(session_id)
        key = "compare:" + json.dumps(payload, sort_keys=True)
        cached = s.result_cache.get(key)
        if cached is not None:
            return Response(content=cached, media_type="application/json")
        problem = s.build_problem()
        attitudes = payload.get("attitudes")
        if attitudes is not None:
            if s.mode != "fuzzy":
                raise BadRequest("attitude comparison requires a fuzzy session")
            if (
                not isinstance(attitudes, list)
                or len(attitudes) != 2
                or any(a not in ATTITUDES for a in attitudes)
            ):
                raise BadRequest(f"attitudes must be two of {ATTITUDES}")
            a, b = attitudes
            cmp = compare_rankings(what_if_attitude(problem, a), what_if_attitude(problem, b))
        elif s.mode == "crisp":
            method = payload.get("method", "geomean")
            method = {"geomean": "geometric-mean"}.get(method, method)
            cmp = compare_rankings(solve_crisp(problem, method), solve_fuzzy(fuzzify_problem(problem)))
        else:
            cmp = compare_rankings(what_if_attitude(problem, "moderate"), solve_fuzzy(problem))
        body = json.dumps(_comparison_doc(cmp), sort_keys=True).encode()
        with s.lock:
            s.result_cache[key] = body
        return Response(content=body, media_type="application/json")

    @app.get("/fixtures/paper-case")
    def load_fixture(mode: str = "crisp"):
        if mode not in ("crisp", "fuzzy"):
            raise BadRequest(f"mode must be crisp or fuzzy, got {mode!r}")
        problem = store.load_problem(store.fixture_path(f"paper-case-{mode}.json"))
        s = Session(problem.goal, problem.criteria, problem.alternatives, mode)
        mats = {"criteria": problem.criteria_matrix}
        mats.update(dict(zip(problem.criteria, problem.alternative_matrices)))
        for sel, m in mats.items():
            n = m.order
            for i in range(n):
                for j in range(i + 1, n):
                    if mode == "crisp":
                        s.cells[sel][(i, j)] = float(m.entries[i][j])
                    else:
                        s.cells[sel][(i, j)] = m.entries[i][j]
        with registry_lock:
            sessions[s.id] = s
        return session_state(s)

    return app


app = create_app()
