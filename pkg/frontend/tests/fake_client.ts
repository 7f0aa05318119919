/** In-memory stand-in for the HTTP client, keyed by request shape. */

import type {
  ApiLike,
  ModelDocumentPayload,
  ModelListItem,
  QueryRequestPayload,
  QueryResponsePayload,
} from "../src/types.js";

export function requestKey(request: QueryRequestPayload): string {
  const evidence = Object.entries(request.evidence).sort(([a], [b]) =>
    a.localeCompare(b),
  );
  return JSON.stringify({
    evidence,
    hypothesis: request.hypothesis
      ? `${request.hypothesis.node}:${request.hypothesis.positive_state ?? ""}`
      : null,
    prior: request.prior_override ?? null,
  });
}

export class FakeClient implements ApiLike {
  requests: QueryRequestPayload[] = [];
  private responses = new Map<string, QueryResponsePayload>();

  constructor(private doc: ModelDocumentPayload) {}

  on(request: QueryRequestPayload, response: QueryResponsePayload): this {
    this.responses.set(requestKey(request), response);
    return this;
  }

  listModels(): Promise<ModelListItem[]> {
    return Promise.resolve([
      { id: this.doc.model.name, name: this.doc.model.name, fixture: true },
    ]);
  }

  getModel(): Promise<ModelDocumentPayload> {
    return Promise.resolve(structuredClone(this.doc));
  }

  query(_id: string, request: QueryRequestPayload): Promise<QueryResponsePayload> {
    this.requests.push(structuredClone(request));
    const canned = this.responses.get(requestKey(request));
    if (!canned) {
      return Promise.reject(new Error(`no canned response for ${requestKey(request)}`));
    }
    return Promise.resolve(structuredClone(canned));
  }
}

/** A client whose query promises resolve only when the test says so. */
export class DeferredClient implements ApiLike {
  pending: Array<{
    request: QueryRequestPayload;
    resolve: (r: QueryResponsePayload) => void;
  }> = [];

  constructor(private doc: ModelDocumentPayload) {}

  listModels(): Promise<ModelListItem[]> {
    return Promise.resolve([]);
  }

  getModel(): Promise<ModelDocumentPayload> {
    return Promise.resolve(structuredClone(this.doc));
  }

  query(_id: string, request: QueryRequestPayload): Promise<QueryResponsePayload> {
    return new Promise((resolve) => {
      this.pending.push({ request, resolve });
    });
  }
}
