/**
 * Typed client for the game server's /v1 JSON API.
 *
 * The UI performs no game logic: every legality decision comes from the
 * server.  Coordinates arrive as exact strings of the form "num/2^k";
 * they are parsed only to position boxes proportionally on screen.
 */

export interface IntervalView {
  lo: string;
  hi: string;
  color: string;
  move_index: number;
}

export interface StateView {
  session_id: string;
  status: "awaiting-color" | "finished";
  omega: number;
  target_colors: number;
  walls: [string, string];
  used_colors: string[];
  intervals: IntervalView[];
  pending: { lo: string; hi: string } | null;
  legal_colors: string[];
  matrix: { sides: number[]; colors: string[] };
  matched_patterns: string[];
}

/** Parse an exact dyadic coordinate string "num/2^k" into a number in [0, 1]. */
export function parseCoord(text: string): number {
  const m = /^(\d+)\/2\^(\d+)$/.exec(text);
  if (!m) throw new Error(`bad coordinate: ${text}`);
  return Number(m[1]) / 2 ** Number(m[2]);
}

export class ApiError extends Error {
  constructor(
    public status: number,
    public detail: unknown,
  ) {
    super(`API error ${status}: ${JSON.stringify(detail)}`);
  }
}

async function call<T>(
  base: string,
  path: string,
  init?: RequestInit,
): Promise<T> {
  const resp = await fetch(base + path, {
    headers: { "content-type": "application/json" },
    ...init,
  });
  const body = await resp.json();
  if (!resp.ok) throw new ApiError(resp.status, body.detail ?? body);
  return body as T;
}

export class GameClient {
  constructor(readonly base: string = "") {}

  createSession(): Promise<StateView> {
    return call(this.base, "/v1/sessions", {
      method: "POST",
      body: JSON.stringify({}),
    });
  }

  getState(sessionId: string): Promise<StateView> {
    return call(this.base, `/v1/sessions/${sessionId}`);
  }

  postColor(sessionId: string, color: string): Promise<StateView> {
    return call(this.base, `/v1/sessions/${sessionId}/color`, {
      method: "POST",
      body: JSON.stringify({ color }),
    });
  }

  getTrace(sessionId: string): Promise<unknown> {
    return call(this.base, `/v1/sessions/${sessionId}/trace`);
  }
}
