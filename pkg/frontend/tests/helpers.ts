/** Test doubles: an API that answers from a diagram document.
 *
 * The lattice math here (meet via extent intersection) is the test's
 * oracle; production code always round-trips through the real service.
 */

import type { ApiClient } from "../src/api.js";
import type { ConceptDetail, ConceptNode, DiagramDoc, Term } from "../src/types.js";
import { renderTerm, sameTerm } from "../src/types.js";

export function detailOf(doc: DiagramDoc, node: ConceptNode): ConceptDetail {
  return {
    id: node.id,
    extent: [...node.extent],
    extentNames: node.extent.map((g) => doc.objects[g]),
    intent: [...node.intent],
    intentTerms: node.intent.map((m) => renderTerm(doc.attributes[m])),
    x: node.x,
    y: node.y,
    upperCovers: [...node.upperCovers],
    lowerCovers: [...node.lowerCovers],
  };
}

export class FakeApi implements ApiClient {
  calls: Array<{ concept: number; attribute: Term }> = [];

  constructor(protected readonly doc: DiagramDoc) {}

  async lattice(): Promise<DiagramDoc> {
    return this.doc;
  }

  async concept(id: number): Promise<ConceptDetail> {
    const node = this.doc.concepts[id];
    if (!node) {
      throw new Error(`404: no concept ${id}`);
    }
    return detailOf(this.doc, node);
  }

  async refine(concept: number, attribute: Term): Promise<ConceptDetail> {
    this.calls.push({ concept, attribute });
    const m = this.doc.attributes.findIndex((t) => sameTerm(t, attribute));
    if (m < 0) {
      throw new Error(`400: unknown attribute ${attribute.tag}`);
    }
    const mu = this.doc.concepts.find((c) => c.attributeLabels.includes(m));
    if (!mu) {
      throw new Error(`no generator concept for attribute ${m}`);
    }
    const base = new Set(this.doc.concepts[concept].extent);
    const extent = mu.extent.filter((g) => base.has(g));
    const target = this.doc.concepts.find(
      (c) =>
        c.extent.length === extent.length &&
        c.extent.every((g, i) => g === extent[i]),
    );
    if (!target) {
      throw new Error("meet extent not found in document");
    }
    return detailOf(this.doc, target);
  }
}

/** Refinements stall until the test releases them, in any order. */
export class StallingApi extends FakeApi {
  private queue: Array<{
    answer: Promise<ConceptDetail>;
    open: (detail: ConceptDetail) => void;
  }> = [];

  override refine(concept: number, attribute: Term): Promise<ConceptDetail> {
    const answer = super.refine(concept, attribute);
    let open!: (detail: ConceptDetail) => void;
    const gate = new Promise<ConceptDetail>((resolve) => {
      open = resolve;
    });
    this.queue.push({ answer, open });
    return gate;
  }

  get pendingCount(): number {
    return this.queue.length;
  }

  async release(index: number): Promise<void> {
    const item = this.queue[index];
    item.open(await item.answer);
    await new Promise((resolve) => setTimeout(resolve, 0));
  }
}
