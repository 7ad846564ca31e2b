import {
  CreateSessionResponse,
  EventFrame,
  ObservationView,
  SessionListResponse,
  SubmitActionResponse,
} from './types.js';

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly detail: string,
  ) {
    super(`HTTP ${status}: ${detail}`);
  }
}

type FetchLike = typeof fetch;

/** Thin typed client over the play-service HTTP API. */
export class ApiClient {
  constructor(
    readonly baseUrl: string,
    private readonly fetchFn: FetchLike = fetch,
  ) {}

  private async request(path: string, init?: RequestInit): Promise<unknown> {
    const response = await this.fetchFn(`${this.baseUrl}${path}`, init);
    const body = await response.json().catch(() => ({}));
    if (!response.ok) {
      const detail =
        typeof (body as { detail?: unknown }).detail === 'string'
          ? (body as { detail: string }).detail
          : response.statusText;
      throw new ApiError(response.status, detail);
    }
    return body;
  }

  async createSession(
    game: string,
    seats: string[],
    seed?: number,
  ): Promise<CreateSessionResponse> {
    const body = await this.request('/sessions', {
      method: 'POST',
      headers: { 'content-type': 'application/json' },
      body: JSON.stringify({ game, seats, seed: seed ?? null }),
    });
    return CreateSessionResponse.parse(body);
  }

  async listSessions(): Promise<SessionListResponse> {
    return SessionListResponse.parse(await this.request('/sessions'));
  }

  async getObservation(
    sessionId: string,
    seat: string,
  ): Promise<ObservationView> {
    const query = new URLSearchParams({ seat });
    return ObservationView.parse(
      await this.request(`/sessions/${sessionId}/observation?${query}`),
    );
  }

  async submitAction(
    sessionId: string,
    seat: string,
    actionId: string,
  ): Promise<SubmitActionResponse> {
    const body = await this.request(`/sessions/${sessionId}/action`, {
      method: 'POST',
      headers: { 'content-type': 'application/json' },
      body: JSON.stringify({ seat, actionId }),
    });
    return SubmitActionResponse.parse(body);
  }

  /** Server-sent events of a session, one validated frame at a time. */
  async *streamEvents(
    sessionId: string,
    signal?: AbortSignal,
  ): AsyncGenerator<EventFrame> {
    const response = await this.fetchFn(
      `${this.baseUrl}/sessions/${sessionId}/events`,
      { signal },
    );
    if (!response.ok || response.body === null) {
      throw new ApiError(response.status, 'event stream unavailable');
    }
    const reader = response.body.getReader();
    const decoder = new TextDecoder();
    let buffer = '';
    try {
      for (;;) {
        const { done, value } = await reader.read();
        if (done) break;
        buffer += decoder.decode(value, { stream: true });
        for (;;) {
          const split = buffer.indexOf('\n\n');
          if (split < 0) break;
          const frame = buffer.slice(0, split);
          buffer = buffer.slice(split + 2);
          for (const line of frame.split('\n')) {
            if (line.startsWith('data: ')) {
              yield EventFrame.parse(JSON.parse(line.slice(6)));
            }
          }
        }
      }
    } finally {
      reader.releaseLock();
    }
  }
}
