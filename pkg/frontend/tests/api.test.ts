import { afterEach, describe, expect, it, vi } from "vitest";

import { ApiClient, ApiError } from "../src/api.js";

function jsonResponse(body: unknown, status = 200): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "content-type": "application/json" },
  });
}

afterEach(() => {
  vi.unstubAllGlobals();
});

describe("ApiClient", () => {
  it("hits the versioned endpoints", async () => {
    const calls: Array<{ url: string; init?: RequestInit }> = [];
    vi.stubGlobal("fetch", (url: string, init?: RequestInit) => {
      calls.push({ url, init });
      return Promise.resolve(jsonResponse([]));
    });
    const client = new ApiClient("http://service");
    await client.listModels();
    await client.getModel("fig3_island");
    expect(calls[0].url).toBe("http://service/api/v1/models");
    expect(calls[1].url).toBe("http://service/api/v1/models/fig3_island");
  });

  it("posts query bodies as JSON", async () => {
    let captured: RequestInit | undefined;
    vi.stubGlobal("fetch", (_url: string, init?: RequestInit) => {
      captured = init;
      return Promise.resolve(jsonResponse({ posteriors: {}, priors_used: {},
                                            lr_report: null, p_evidence: 1.0 }));
    });
    const client = new ApiClient();
    await client.query("m1", { evidence: { E: "match" } });
    expect(captured?.method).toBe("POST");
    expect(JSON.parse(String(captured?.body))).toEqual({ evidence: { E: "match" } });
  });

  it("turns error bodies into ApiError with the service detail", async () => {
    vi.stubGlobal("fetch", () =>
      Promise.resolve(jsonResponse({ detail: "evidence has probability 0.0" }, 409)),
    );
    const client = new ApiClient();
    await expect(client.query("m1", { evidence: {} })).rejects.toMatchObject({
      status: 409,
      detail: "evidence has probability 0.0",
    });
    await expect(client.query("m1", { evidence: {} })).rejects.toBeInstanceOf(ApiError);
  });
});
