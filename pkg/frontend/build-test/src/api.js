export class HttpTransport {
    baseUrl;
    constructor(baseUrl) {
        this.baseUrl = baseUrl;
    }
    async request(method, path, body) {
        const resp = await fetch(this.baseUrl + path, {
            method,
            headers: body === undefined ? undefined : { "content-type": "application/json" },
            body: body === undefined ? undefined : JSON.stringify(body),
        });
        return { status: resp.status, body: await resp.json() };
    }
}
export class ApiError extends Error {
    status;
    code;
    detail;
    constructor(status, code, detail) {
        super(`${code}: ${detail.message ?? ""}`);
        this.status = status;
        this.code = code;
        this.detail = detail;
    }
}
function unwrap(resp, expected) {
    if (resp.status !== expected) {
        const err = resp.body;
        throw new ApiError(resp.status, err?.error ?? "unknown", err?.detail ?? {});
    }
    return resp.body;
}
export class ApiClient {
    transport;
    constructor(transport) {
        this.transport = transport;
    }
    async createSession(goal, criteria, alternatives, mode) {
        const resp = await this.transport.request("POST", "/sessions", {
            goal,
            criteria,
            alternatives,
            mode,
        });
        return unwrap(resp, 201);
    }
    async getSession(id) {
        return unwrap(await this.transport.request("GET", `/sessions/${id}`), 200);
    }
    async loadFixture(mode) {
        return unwrap(await this.transport.request("GET", `/fixtures/paper-case?mode=${mode}`), 200);
    }
    async submitJudgment(id, matrix, i, j, value) {
        const resp = await this.transport.request("PUT", `/sessions/${id}/judgments`, {
            matrix,
            i,
            j,
            value,
        });
        return unwrap(resp, 200);
    }
    async solve(id, params) {
        return unwrap(await this.transport.request("POST", `/sessions/${id}/solve`, params), 200);
    }
    async compare(id, params = {}) {
        return unwrap(await this.transport.request("POST", `/sessions/${id}/compare`, params), 200);
    }
}
