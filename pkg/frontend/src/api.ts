/** Thin fetch wrapper for the service; no number handling beyond JSON. */

import type {
  ApiLike,
  ModelDocumentPayload,
  ModelListItem,
  QueryRequestPayload,
  QueryResponsePayload,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    public status: number,
    public detail: string,
  ) {
    super(`${status}: ${detail}`);
  }
}

async function parseError(response: Response): Promise<never> {
  let detail = response.statusText;
  try {
    const body = await response.json();
    if (typeof body.detail === "string") detail = body.detail;
  } catch {
    // keep the status text
  }
  throw new ApiError(response.status, detail);
}

export class ApiClient implements ApiLike {
  constructor(private baseUrl: string = "") {}

  private async get<T>(path: string): Promise<T> {
    const response = await fetch(`${this.baseUrl}${path}`);
    if (!response.ok) await parseError(response);
    return response.json() as Promise<T>;
  }

  listModels(): Promise<ModelListItem[]> {
    return this.get("/api/v1/models");
  }

  getModel(id: string): Promise<ModelDocumentPayload> {
    return this.get(`/api/v1/models/${encodeURIComponent(id)}`);
  }

  async query(id: string, request: QueryRequestPayload): Promise<QueryResponsePayload> {
    const response = await fetch(
      `${this.baseUrl}/api/v1/models/${encodeURIComponent(id)}/query`,
      {
        method: "POST",
        headers: { "content-type": "application/json" },
        body: JSON.stringify(request),
      },
    );
    if (!response.ok) await parseError(response);
    return response.json() as Promise<QueryResponsePayload>;
  }
}
