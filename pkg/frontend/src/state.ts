/** Explorer state: the current concept, how we got there, and transitions.
 *
 * The store never computes closures; every refinement round-trips through
 * the API. Responses are applied only when they answer the latest issued
 * request (monotone counter), so a slow older response cannot clobber a
 * newer state.
 */

import type { ApiClient } from "./api.js";
import type { ConceptDetail, DiagramDoc, Term } from "./types.js";
import { sameTerm } from "./types.js";

export interface ExplorerState {
  current: number;
  breadcrumb: Term[];
  detail: ConceptDetail | null;
  warning: string | null;
  error: string | null;
}

export const NO_MATCHES_WARNING = "no matching resources";

export class ExplorerStore {
  readonly doc: DiagramDoc;
  private readonly api: ApiClient;
  private state: ExplorerState;
  private requestSeq = 0;
  private listeners: Array<(state: ExplorerState) => void> = [];

  constructor(doc: DiagramDoc, api: ApiClient) {
    this.doc = doc;
    this.api = api;
    this.state = {
      current: doc.top,
      breadcrumb: [],
      detail: null,
      warning: null,
      error: null,
    };
  }

  get current(): number {
    return this.state.current;
  }

  get breadcrumb(): Term[] {
    return [...this.state.breadcrumb];
  }

  snapshot(): ExplorerState {
    return { ...this.state, breadcrumb: [...this.state.breadcrumb] };
  }

  subscribe(listener: (state: ExplorerState) => void): void {
    this.listeners.push(listener);
  }

  private apply(patch: Partial<ExplorerState>): void {
    this.state = { ...this.state, ...patch };
    for (const listener of this.listeners) {
      listener(this.snapshot());
    }
  }

  private knownTerm(term: Term): boolean {
    return this.doc.attributes.some((t) => sameTerm(t, term));
  }

  /** Drill down: meet the current concept with an attribute's concept. */
  async refineByAttribute(term: Term): Promise<ExplorerState> {
    if (!this.knownTerm(term)) {
      throw new Error(`unknown attribute term ${term.tag}`);
    }
    const seq = ++this.requestSeq;
    const from = this.state.current;
    try {
      const detail = await this.api.refine(from, term);
      if (seq === this.requestSeq) {
        if (detail.id === this.state.current) {
          // already implied by the current intent: state unchanged
          this.apply({ detail, error: null });
        } else {
          this.apply({
            current: detail.id,
            breadcrumb: [...this.state.breadcrumb, term],
            detail,
            warning: detail.extent.length === 0 ? NO_MATCHES_WARNING : null,
            error: null,
          });
        }
      }
    } catch (exc) {
      if (seq === this.requestSeq) {
        this.apply({ error: String(exc) });
      }
    }
    return this.snapshot();
  }

  /** Step to an immediate neighbor; the target must be a cover. */
  async navigateCover(
    direction: "up" | "down",
    target: number,
  ): Promise<ExplorerState> {
    const node = this.doc.concepts[this.state.current];
    const covers = direction === "up" ? node.upperCovers : node.lowerCovers;
    if (!covers.includes(target)) {
      throw new Error(
        `concept ${target} is not an ${direction === "up" ? "upper" : "lower"}` +
          ` cover of ${node.id}`,
      );
    }
    const seq = ++this.requestSeq;
    try {
      const detail = await this.api.concept(target);
      if (seq === this.requestSeq) {
        this.apply({
          current: target,
          // the selection that reproduces this concept is its own intent
          breadcrumb: this.doc.concepts[target].intent.map(
            (m) => this.doc.attributes[m],
          ),
          detail,
          warning:
            this.doc.concepts[target].extent.length === 0
              ? NO_MATCHES_WARNING
              : null,
          error: null,
        });
      }
    } catch (exc) {
      if (seq === this.requestSeq) {
        this.apply({ error: String(exc) });
      }
    }
    return this.snapshot();
  }

  /** Re-apply the breadcrumb from the top; returns the reached concept. */
  async replayBreadcrumb(): Promise<number> {
    let at = this.doc.top;
    for (const term of this.state.breadcrumb) {
      const detail = await this.api.refine(at, term);
      at = detail.id;
    }
    return at;
  }
}
