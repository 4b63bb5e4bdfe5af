import {
  Attitude,
  CompareDoc,
  ErrorDoc,
  JudgmentValue,
  Mode,
  ResultDoc,
  SessionState,
  SubmitOutcome,
} from "./types.js";

export interface TransportResponse {
  status: number;
  body: unknown;
}

// Seam for tests: the fake transport implements the same wire contract.
export interface Transport {
  request(method: string, path: string, body?: unknown): Promise<TransportResponse>;
}

export class HttpTransport implements Transport {
  constructor(private baseUrl: string) {}

  async request(method: string, path: string, body?: unknown): Promise<TransportResponse> {
    const resp = await fetch(this.baseUrl + path, {
      method,
      headers: body === undefined ? undefined : { "content-type": "application/json" },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    return { status: resp.status, body: await resp.json() };
  }
}

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    readonly detail: ErrorDoc["detail"],
  ) {
    super(`${code}: ${detail.message ?? ""}`);
  }
}

function unwrap<T>(resp: TransportResponse, expected: number): T {
  if (resp.status !== expected) {
    const err = resp.body as ErrorDoc;
    throw new ApiError(resp.status, err?.error ?? "unknown", err?.detail ?? {});
  }
  return resp.body as T;
}

export class ApiClient {
  constructor(private transport: Transport) {}

  async createSession(
    goal: string,
    criteria: string[],
    alternatives: string[],
    mode: Mode,
  ): Promise<SessionState> {
    const resp = await this.transport.request("POST", "/sessions", {
      goal,
      criteria,
      alternatives,
      mode,
    });
    return unwrap<SessionState>(resp, 201);
  }

  async getSession(id: string): Promise<SessionState> {
    return unwrap<SessionState>(await this.transport.request("GET", `/sessions/${id}`), 200);
  }

  async loadFixture(mode: Mode): Promise<SessionState> {
    return unwrap<SessionState>(
      await this.transport.request("GET", `/fixtures/paper-case?mode=${mode}`),
      200,
    );
  }

  async submitJudgment(
    id: string,
    matrix: string,
    i: number,
    j: number,
    value: JudgmentValue,
  ): Promise<SubmitOutcome> {
    const resp = await this.transport.request("PUT", `/sessions/${id}/judgments`, {
      matrix,
      i,
      j,
      value,
    });
    return unwrap<SubmitOutcome>(resp, 200);
  }

  async solve(
    id: string,
    params: { method?: "eigen" | "geomean"; attitude?: Attitude },
  ): Promise<ResultDoc> {
    return unwrap<ResultDoc>(
      await this.transport.request("POST", `/sessions/${id}/solve`, params),
      200,
    );
  }

  async compare(
    id: string,
    params: { attitudes?: [Attitude, Attitude] } = {},
  ): Promise<CompareDoc> {
    return unwrap<CompareDoc>(
      await this.transport.request("POST", `/sessions/${id}/compare`, params),
      200,
    );
  }
}
