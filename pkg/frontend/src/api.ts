/** Typed client for the eulercurves HTTP API.
 *
 * The editor performs no numerical computation; every polyline and norm
 * value comes from these endpoints.
 */

export interface PointsBody {
  version: number;
  n: number;
  d: number;
  periodic: boolean;
  points: number[][];
}

export interface SmoothRequest {
  points: PointsBody;
  m: number;
  samples: number;
  apply_shift?: boolean;
  q?: number;
  alpha?: number[] | null;
}

export interface NormReport {
  m: number;
  q: number;
  alpha: number[] | null;
  discrete: number[] | null;
  member: boolean[] | null;
  slack: number[] | null;
}

export interface SmoothResponse {
  curve: number[][];
  spline: Record<string, unknown>;
  s0: number[][];
  s1: number[][];
  norms: NormReport;
  distance_s0: number;
  distance_s1: number;
  continuity_order: number;
  max_knot_jump: number;
}

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly detail: string,
  ) {
    super(`API ${status}: ${detail}`);
  }
}

async function post<T>(base: string, path: string, body: unknown): Promise<T> {
  const res = await fetch(base + path, {
    method: "POST",
    headers: { "content-type": "application/json" },
    body: JSON.stringify(body),
  });
  if (!res.ok) {
    let detail = res.statusText;
    try {
      const doc = await res.json();
      detail = typeof doc.detail === "string" ? doc.detail : JSON.stringify(doc.detail);
    } catch {
      // non-JSON error body; keep the status text
    }
    throw new ApiError(res.status, detail);
  }
  return res.json() as Promise<T>;
}

export class ApiClient {
  constructor(readonly base: string = "") {}

  async health(): Promise<{ version: string }> {
    const res = await fetch(this.base + "/api/health");
    if (!res.ok) throw new ApiError(res.status, res.statusText);
    return res.json();
  }

  smooth(req: SmoothRequest): Promise<SmoothResponse> {
    return post(this.base, "/api/smooth", req);
  }
}

export function pointsBody(points: number[][], periodic: boolean): PointsBody {
  return { version: 1, n: points.length, d: 2, periodic, points };
}
