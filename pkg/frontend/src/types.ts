/** Wire types of the lattice navigation API. */

export interface Term {
  tag: string;
  op: string;
  value: string;
}

export interface ConceptNode {
  id: number;
  extent: number[];
  intent: number[];
  objectLabels: number[];
  attributeLabels: number[];
  x: number;
  y: number;
  lowerCovers: number[];
  upperCovers: number[];
}

export interface DiagramDoc {
  type: string | null;
  objects: string[];
  attributes: Term[];
  concepts: ConceptNode[];
  top: number;
  bottom: number;
}

export interface ConceptDetail {
  id: number;
  extent: number[];
  extentNames: string[];
  intent: number[];
  intentTerms: string[];
  x: number;
  y: number;
  upperCovers: number[];
  lowerCovers: number[];
}

/** Surface form of a term: bare tag when the value is empty. */
export function renderTerm(term: Term): string {
  return term.value === "" ? term.tag : `${term.tag}${term.op}${term.value}`;
}

export function sameTerm(a: Term, b: Term): boolean {
  return a.tag === b.tag && a.op === b.op && a.value === b.value;
}
