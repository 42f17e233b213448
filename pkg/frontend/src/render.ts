/** Pure view model: diagram document + state -> drawable nodes and edges.
 *
 * Coordinates come entirely from the server; this module only scales
 * them into the viewport and attaches labels, roles, and links.
 */

import type { ExplorerState } from "./state.js";
import type { ConceptNode, DiagramDoc } from "./types.js";
import { renderTerm } from "./types.js";

export interface Viewport {
  width: number;
  height: number;
  margin: number;
}

export type NodeRole = "current" | "upper" | "lower" | "other";

export interface ObjectLabel {
  name: string;
  href: string | null;
}

export interface RenderNode {
  id: number;
  x: number;
  y: number;
  attributeText: string[];
  objectLabels: ObjectLabel[];
  role: NodeRole;
  extentSize: number;
}

export interface RenderEdge {
  upper: number;
  lower: number;
  x1: number;
  y1: number;
  x2: number;
  y2: number;
}

export interface RenderModel {
  nodes: RenderNode[];
  edges: RenderEdge[];
  breadcrumb: string[];
  extentItems: ObjectLabel[];
  intentTerms: string[];
  warning: string | null;
  error: string | null;
}

/** Link target for object names that locate resources. */
export function resourceHref(name: string): string | null {
  const stripped = /^url:/i.test(name) ? name.slice(4) : name;
  return /^[a-z][a-z0-9+.-]*:\/\//i.test(stripped) ? stripped : null;
}

function isSubset(small: number[], big: number[]): boolean {
  const pool = new Set(big);
  return small.every((x) => pool.has(x));
}

function roleOf(node: ConceptNode, current: ConceptNode): NodeRole {
  if (node.id === current.id) {
    return "current";
  }
  if (isSubset(current.extent, node.extent)) {
    return "upper";
  }
  if (isSubset(node.extent, current.extent)) {
    return "lower";
  }
  return "other";
}

const X_SPAN = 1000;

export function buildRenderModel(
  doc: DiagramDoc,
  state: ExplorerState,
  viewport: Viewport = { width: 900, height: 600, margin: 40 },
): RenderModel {
  const current = doc.concepts[state.current];
  const maxY = Math.max(0, ...doc.concepts.map((c) => c.y));
  const innerW = viewport.width - 2 * viewport.margin;
  const innerH = viewport.height - 2 * viewport.margin;

  const px = (c: ConceptNode) => viewport.margin + (c.x / X_SPAN) * innerW;
  const py = (c: ConceptNode) =>
    viewport.margin + (maxY === 0 ? innerH / 2 : ((maxY - c.y) / maxY) * innerH);

  const nodes: RenderNode[] = doc.concepts.map((c) => ({
    id: c.id,
    x: px(c),
    y: py(c),
    attributeText: c.attributeLabels.map((m) => renderTerm(doc.attributes[m])),
    objectLabels: c.objectLabels.map((g) => ({
      name: doc.objects[g],
      href: resourceHref(doc.objects[g]),
    })),
    role: roleOf(c, current),
    extentSize: c.extent.length,
  }));

  const edges: RenderEdge[] = [];
  for (const upper of doc.concepts) {
    for (const lowerId of upper.lowerCovers) {
      const lower = doc.concepts[lowerId];
      edges.push({
        upper: upper.id,
        lower: lowerId,
        x1: px(upper),
        y1: py(upper),
        x2: px(lower),
        y2: py(lower),
      });
    }
  }

  const detail = state.detail;
  return {
    nodes,
    edges,
    breadcrumb: state.breadcrumb.map(renderTerm),
    extentItems: (detail
      ? detail.extentNames
      : current.extent.map((g) => doc.objects[g])
    ).map((name) => ({ name, href: resourceHref(name) })),
    intentTerms: detail
      ? [...detail.intentTerms]
      : current.intent.map((m) => renderTerm(doc.attributes[m])),
    warning: state.warning,
    error: state.error,
  };
}
