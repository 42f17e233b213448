/** Client for the read-only lattice navigation API. */

import type { ConceptDetail, DiagramDoc, Term } from "./types.js";

export interface ApiClient {
  lattice(): Promise<DiagramDoc>;
  refine(concept: number, attribute: Term): Promise<ConceptDetail>;
  concept(id: number): Promise<ConceptDetail>;
}

type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class HttpApiClient implements ApiClient {
  constructor(
    private readonly base: string = "",
    private readonly fetchFn: FetchLike = (url, init) => fetch(url, init),
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchFn(this.base + path, init);
    if (!response.ok) {
      const body = await response.text();
      throw new Error(`${path}: ${response.status} ${body}`);
    }
    return (await response.json()) as T;
  }

  lattice(): Promise<DiagramDoc> {
    return this.request<DiagramDoc>("/api/lattice");
  }

  refine(concept: number, attribute: Term): Promise<ConceptDetail> {
    return this.request<ConceptDetail>("/api/refine", {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ concept, attribute }),
    });
  }

  concept(id: number): Promise<ConceptDetail> {
    return this.request<ConceptDetail>(`/api/concepts/${id}`);
  }
}
