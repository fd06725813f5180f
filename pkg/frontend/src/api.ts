/** Thin typed client over the service's HTTP/JSON contract. */
import type {
  ComparisonJson,
  FilterSpecJson,
  LogEntry,
  Metric,
  SchemaJson,
  SessionJson,
  SliceJson,
} from "./types.js";

export class ApiError extends Error {
  code: string;
  status: number;

  constructor(status: number, code: string, message: string) {
    super(message);
    this.code = code;
    this.status = status;
  }
}

async function request<T>(url: string, init?: RequestInit): Promise<T> {
  const response = await fetch(url, init);
  if (!response.ok) {
    let code = "error";
    let message = `${response.status} ${response.statusText}`;
    try {
      const body = await response.json();
      code = body?.error?.code ?? code;
      message = body?.error?.message ?? message;
    } catch {
      // non-JSON error body; keep the status line
    }
    throw new ApiError(response.status, code, message);
  }
  return response.json() as Promise<T>;
}

function post<T>(url: string, body: unknown, signal?: AbortSignal): Promise<T> {
  return request<T>(url, {
    method: "POST",
    headers: { "Content-Type": "application/json" },
    body: JSON.stringify(body),
    signal,
  });
}

export class ApiClient {
  constructor(private baseUrl = "") {}

  listLogs(): Promise<LogEntry[]> {
    return request(`${this.baseUrl}/api/logs`);
  }

  getSchema(logId: string, signal?: AbortSignal): Promise<SchemaJson> {
    return request(`${this.baseUrl}/api/logs/${encodeURIComponent(logId)}/schema`, { signal });
  }

  createSession(logId: string): Promise<SessionJson> {
    return post(`${this.baseUrl}/api/sessions`, { log_id: logId });
  }

  getSession(sessionId: string): Promise<SessionJson> {
    return request(`${this.baseUrl}/api/sessions/${encodeURIComponent(sessionId)}`);
  }

  addSlice(sessionId: string, label: string, filter: FilterSpecJson,
           signal?: AbortSignal): Promise<{ index: number; slice: SliceJson }> {
    return post(`${this.baseUrl}/api/sessions/${encodeURIComponent(sessionId)}/slices`,
                { label, filter }, signal);
  }

  setActivePair(sessionId: string, left: number, right: number): Promise<SessionJson> {
    return request(`${this.baseUrl}/api/sessions/${encodeURIComponent(sessionId)}/active_pair`, {
      method: "PUT",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ left_index: left, right_index: right }),
    });
  }

  getComparison(sessionId: string, metric: Metric, signal?: AbortSignal): Promise<ComparisonJson> {
    const url = `${this.baseUrl}/api/sessions/${encodeURIComponent(sessionId)}/comparison`
      + `?metric=${metric}`;
    return request(url, { signal });
  }

  exportUrl(sessionId: string, kind: string, metric: Metric): string {
    return `${this.baseUrl}/api/sessions/${encodeURIComponent(sessionId)}/export`
      + `?kind=${encodeURIComponent(kind)}&metric=${metric}`;
  }
}
