/** Typed client for the session API; the UI performs no mutations locally. */

import type { CreateRequest, Pair, SessionExport, SessionState } from './types.js';

export class ApiError extends Error {
  constructor(public status: number, detail: string) {
    super(detail);
  }
}

async function request<T>(url: string, init?: RequestInit): Promise<T> {
  const response = await fetch(url, init);
  const body = await response.json().catch(() => ({}));
  if (!response.ok) {
    const detail = (body as { detail?: string }).detail ?? response.statusText;
    throw new ApiError(response.status, detail);
  }
  return body as T;
}

function post(body: unknown): RequestInit {
  return {
    method: 'POST',
    headers: { 'content-type': 'application/json' },
    body: JSON.stringify(body),
  };
}

export class SessionApi {
  constructor(private baseUrl = '') {}

  create(body: CreateRequest): Promise<{ id: string; state: SessionState }> {
    return request(`${this.baseUrl}/session`, post(body));
  }

  state(id: string): Promise<SessionState> {
    return request(`${this.baseUrl}/session/${id}`);
  }

  mutate(id: string, vertex: string): Promise<SessionState> {
    return request(`${this.baseUrl}/session/${id}/mutate`, post({ vertex }));
  }

  flip(id: string, diagonal: Pair, choice: Pair): Promise<SessionState> {
    return request(`${this.baseUrl}/session/${id}/flip`, post({ diagonal, choice }));
  }

  undo(id: string): Promise<SessionState> {
    return request(`${this.baseUrl}/session/${id}/undo`, post({}));
  }

  exportSession(id: string): Promise<SessionExport> {
    return request(`${this.baseUrl}/session/${id}/export`);
  }
}
