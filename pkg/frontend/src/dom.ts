/** Thin DOM layer: draw a render model into the page and wire events. */

import type { ExplorerStore } from "./state.js";
import type { RenderModel } from "./render.js";
import { buildRenderModel } from "./render.js";

const SVG_NS = "http://www.w3.org/2000/svg";

export interface Page {
  svg: SVGSVGElement;
  breadcrumb: HTMLElement;
  extent: HTMLElement;
  intent: HTMLElement;
  notice: HTMLElement;
}

export function drawModel(page: Page, model: RenderModel,
                          store: ExplorerStore): void {
  const svg = page.svg;
  svg.replaceChildren();

  for (const edge of model.edges) {
    const line = document.createElementNS(SVG_NS, "line");
    line.setAttribute("x1", String(edge.x1));
    line.setAttribute("y1", String(edge.y1));
    line.setAttribute("x2", String(edge.x2));
    line.setAttribute("y2", String(edge.y2));
    line.setAttribute("class", "edge");
    svg.appendChild(line);
  }

  const currentNode = model.nodes.find((n) => n.role === "current");
  for (const node of model.nodes) {
    const group = document.createElementNS(SVG_NS, "g");
    group.setAttribute("class", `node ${node.role}`);
    group.setAttribute("data-id", String(node.id));

    const circle = document.createElementNS(SVG_NS, "circle");
    circle.setAttribute("cx", String(node.x));
    circle.setAttribute("cy", String(node.y));
    circle.setAttribute("r", node.role === "current" ? "9" : "6");
    group.appendChild(circle);

    const attrText = node.attributeText.join(" ");
    const objText = node.objectLabels.map((o) => o.name).join(" ");
    if (attrText) {
      group.appendChild(nodeLabel(node.x, node.y - 12, attrText, "attr"));
    }
    if (objText) {
      group.appendChild(nodeLabel(node.x, node.y + 20, objText, "obj"));
    }

    group.addEventListener("click", () => {
      if (!currentNode || node.id === currentNode.id) {
        return;
      }
      const concept = store.doc.concepts[currentNode.id];
      if (concept.upperCovers.includes(node.id)) {
        void store.navigateCover("up", node.id);
      } else if (concept.lowerCovers.includes(node.id)) {
        void store.navigateCover("down", node.id);
      }
    });
    svg.appendChild(group);
  }

  page.breadcrumb.replaceChildren();
  const home = document.createElement("span");
  home.textContent = "top";
  home.className = "crumb";
  page.breadcrumb.appendChild(home);
  for (const crumb of model.breadcrumb) {
    const span = document.createElement("span");
    span.textContent = crumb;
    span.className = "crumb";
    page.breadcrumb.appendChild(span);
  }

  page.extent.replaceChildren();
  for (const item of model.extentItems) {
    const li = document.createElement("li");
    if (item.href) {
      const a = document.createElement("a");
      a.href = item.href;
      a.textContent = item.name;
      li.appendChild(a);
    } else {
      li.textContent = item.name;
    }
    page.extent.appendChild(li);
  }

  page.intent.replaceChildren();
  for (const term of model.intentTerms) {
    const li = document.createElement("li");
    li.textContent = term;
    page.intent.appendChild(li);
  }

  page.notice.textContent = model.error ?? model.warning ?? "";
  page.notice.className = model.error ? "notice error"
    : model.warning ? "notice warning" : "notice";
}

function nodeLabel(x: number, y: number, text: string,
                   kind: string): SVGTextElement {
  const label = document.createElementNS(SVG_NS, "text");
  label.setAttribute("x", String(x));
  label.setAttribute("y", String(y));
  label.setAttribute("class", `label ${kind}`);
  label.textContent = text;
  return label;
}

export function renderAttributePicker(container: HTMLElement,
                                      store: ExplorerStore): void {
  container.replaceChildren();
  store.doc.attributes.forEach((term, index) => {
    const button = document.createElement("button");
    button.textContent = term.value === ""
      ? term.tag : `${term.tag}${term.op}${term.value}`;
    button.dataset.index = String(index);
    button.addEventListener("click", () => {
      void store.refineByAttribute(term);
    });
    container.appendChild(button);
  });
}

export function bindStore(page: Page, picker: HTMLElement,
                          store: ExplorerStore): void {
  renderAttributePicker(picker, store);
  const redraw = () => drawModel(page, buildRenderModel(
    store.doc, store.snapshot(), viewportOf(page.svg)), store);
  store.subscribe(redraw);
  redraw();
}

function viewportOf(svg: SVGSVGElement) {
  const box = svg.viewBox.baseVal;
  return { width: box.width || 900, height: box.height || 600, margin: 48 };
}
