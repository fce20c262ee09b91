/** Thin client for the analysis service; keeps raw response text so
 * exported history is byte-identical to what the service sent. */
import type { Report, Roi, ThresholdOverrides, UploadResponse } from "./types.js";

export class ApiError extends Error {
  constructor(
    public status: number,
    public kind: string,
    public detail: string,
  ) {
    super(`${kind}: ${detail}`);
  }
}

export interface AnalyzeResult {
  report: Report;
  rawJson: string; // exact body bytes as text
}

export class ApiClient {
  constructor(private baseUrl: string = "") {}

  async upload(file: Blob, contentType: string): Promise<UploadResponse> {
    const resp = await fetch(`${this.baseUrl}/api/v1/images`, {
      method: "POST",
      headers: { "Content-Type": contentType },
      body: file,
    });
    if (!resp.ok) throw await this.toError(resp);
    return (await resp.json()) as UploadResponse;
  }

  async analyze(
    session: string, roi: Roi, thresholds?: ThresholdOverrides,
  ): Promise<AnalyzeResult> {
    const body: Record<string, unknown> = { roi };
    if (thresholds && Object.keys(thresholds).length > 0) {
      body.thresholds = thresholds;
    }
    const resp = await fetch(
      `${this.baseUrl}/api/v1/images/${session}/analyze`, {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify(body),
      });
    if (!resp.ok) throw await this.toError(resp);
    const rawJson = await resp.text();
    return { report: JSON.parse(rawJson) as Report, rawJson };
  }

  async healthy(): Promise<boolean> {
    try {
      const resp = await fetch(`${this.baseUrl}/healthz`);
      return resp.ok;
    } catch {
      return false;
    }
  }

  private async toError(resp: Response): Promise<ApiError> {
    try {
      const body = await resp.json();
      return new ApiError(resp.status, body.error ?? `HTTP ${resp.status}`,
        body.detail ?? "");
    } catch {
      return new ApiError(resp.status, `HTTP ${resp.status}`, resp.statusText);
    }
  }
}
