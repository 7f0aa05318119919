/** DOM rendering: an SVG graph on the left, the hypothesis panel on the
 * right. Hypothesis nodes draw as rounded white shapes, evidence nodes as
 * square grey ones; clicking any node cycles its observed state. */

import { layeredLayout } from "./layout.js";
import { formatPercent } from "./format.js";
import { describeEvidence, ScenarioStore } from "./state.js";
import type { ModelListItem } from "./types.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const NODE_W = 130;
const NODE_H = 46;
const BAR_W = 110;

function svgEl<K extends keyof SVGElementTagNameMap>(
  tag: K,
  attrs: Record<string, string>,
): SVGElementTagNameMap[K] {
  const el = document.createElementNS(SVG_NS, tag);
  for (const [k, v] of Object.entries(attrs)) el.setAttribute(k, v);
  return el;
}

function el(tag: string, className?: string, text?: string): HTMLElement {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

function renderGraph(store: ScenarioStore, host: HTMLElement): void {
  host.textContent = "";
  if (!store.doc) return;
  const model = store.doc.model;
  const layout = layeredLayout(model.nodes);
  const svg = svgEl("svg", {
    viewBox: `0 0 ${layout.width} ${layout.height + 40}`,
    width: "100%",
  });

  const marker = svgEl("marker", {
    id: "arrow", viewBox: "0 0 10 10", refX: "9", refY: "5",
    markerWidth: "7", markerHeight: "7", orient: "auto-start-reverse",
  });
  marker.appendChild(svgEl("path", { d: "M 0 0 L 10 5 L 0 10 z", fill: "#7a7a8c" }));
  const defs = svgEl("defs", {});
  defs.appendChild(marker);
  svg.appendChild(defs);

  for (const node of model.nodes) {
    const to = layout.nodes.get(node.id)!;
    for (const parent of node.parents) {
      const from = layout.nodes.get(parent);
      if (!from) continue;
      svg.appendChild(svgEl("line", {
        x1: String(from.x + NODE_W), y1: String(from.y + NODE_H / 2),
        x2: String(to.x), y2: String(to.y + NODE_H / 2),
        stroke: "#7a7a8c", "stroke-width": "1.5", "marker-end": "url(#arrow)",
      }));
    }
  }

  for (const node of model.nodes) {
    const pos = layout.nodes.get(node.id)!;
    const role = store.nodeRole(node.id);
    const observed = store.evidence[node.id];
    const group = svgEl("g", { class: "node", transform: `translate(${pos.x},${pos.y})` });
    group.style.cursor = "pointer";
    group.addEventListener("click", () => store.cycleEvidence(node.id));

    const isHypothesis = role === "hypothesis";
    const shape = svgEl("rect", {
      width: String(NODE_W), height: String(NODE_H),
      rx: isHypothesis ? "22" : "3",
      fill: observed ? "#fff3c4" : isHypothesis ? "#ffffff" : "#d9dbe3",
      stroke: observed ? "#c28b00" : "#3c3c4c",
      "stroke-width": observed ? "2.5" : "1.5",
    });
    if (node.label) {
      const title = svgEl("title", {});
      title.textContent = node.label;
      shape.appendChild(title);
    }
    group.appendChild(shape);

    const caption = svgEl("text", {
      x: String(NODE_W / 2), y: "19", "text-anchor": "middle",
      "font-size": "13", "font-weight": "600",
    });
    caption.textContent = node.id;
    group.appendChild(caption);

    const sub = svgEl("text", {
      x: String(NODE_W / 2), y: "36", "text-anchor": "middle",
      "font-size": "11", fill: "#555",
    });
    sub.textContent = observed ? `= ${observed}` : role;
    group.appendChild(sub);

    const dist = store.distribution(node.id);
    if (dist) {
      node.states.forEach((state, i) => {
        const p = dist[state] ?? 0;
        const y = NODE_H + 8 + i * 14;
        group.appendChild(svgEl("rect", {
          x: "10", y: String(y), width: String(BAR_W), height: "10",
          fill: "#edeef2", stroke: "#b9bcc8", "stroke-width": "0.5",
        }));
        group.appendChild(svgEl("rect", {
          x: "10", y: String(y), width: String(BAR_W * p), height: "10",
          fill: "#4f6fd8",
        }));
        const label = svgEl("text", {
          x: String(10 + BAR_W + 4), y: String(y + 9), "font-size": "9", fill: "#333",
        });
        label.textContent = `${state} ${formatPercent(p)}`;
        group.appendChild(label);
      });
    }
    svg.appendChild(group);
  }
  host.appendChild(svg);
}

function renderPanel(store: ScenarioStore, host: HTMLElement): void {
  host.textContent = "";
  if (!store.doc) return;
  const view = store.panelView();
  host.appendChild(el("h2", undefined, "hypothesis"));

  const nodeSelect = document.createElement("select");
  for (const node of store.doc.model.nodes) {
    const option = document.createElement("option");
    option.value = node.id;
    option.textContent = `${node.id}${node.label ? ` — ${node.label}` : ""}`;
    option.selected = node.id === view.hypothesis;
    nodeSelect.appendChild(option);
  }
  nodeSelect.addEventListener("change", () => store.setHypothesis(nodeSelect.value));
  host.appendChild(nodeSelect);

  const hypothesisNode = view.hypothesis ? store.node(view.hypothesis) : undefined;
  if (hypothesisNode) {
    const stateSelect = document.createElement("select");
    for (const state of hypothesisNode.states) {
      const option = document.createElement("option");
      option.value = state;
      option.textContent = `positive: ${state}`;
      option.selected = state === view.positiveState;
      stateSelect.appendChild(option);
    }
    stateSelect.addEventListener("change", () =>
      store.setHypothesis(hypothesisNode.id, stateSelect.value),
    );
    host.appendChild(stateSelect);
  }

  const badgeClass =
    view.badge === "supports prosecution" ? "badge hp"
    : view.badge === "supports defence" ? "badge hd"
    : "badge";
  const readout = el("div", "readout");
  readout.appendChild(el("div", "lr-line", `LR ${view.lr}`));
  readout.appendChild(el("div", badgeClass, view.badge));
  readout.appendChild(el("div", "metric", `log10 LR: ${view.log10Lr}`));
  readout.appendChild(el("div", "metric", `prior P(Hp): ${view.prior}`));
  readout.appendChild(el("div", "metric", `posterior P(Hp): ${view.posterior}`));
  readout.appendChild(el("div", "metric", `odds: ${view.priorOdds} → ${view.posteriorOdds}`));
  for (const warning of view.warnings) {
    readout.appendChild(el("div", "warning", warning));
  }
  host.appendChild(readout);

  // prior slider: only for parentless hypotheses; LR must not move with it
  const sliderBox = el("div", "slider-box");
  sliderBox.appendChild(el("label", undefined, "prior override"));
  const slider = document.createElement("input");
  slider.type = "range";
  slider.min = "0.0001";
  slider.max = "0.9999";
  slider.step = "0.0001";
  slider.value = String(store.priorOverride ?? store.response?.lr_report?.prior_positive ?? 0.5);
  slider.disabled = !store.priorSliderEnabled();
  slider.addEventListener("input", () => store.setPriorOverride(Number(slider.value)));
  sliderBox.appendChild(slider);
  const sliderNote = store.priorSliderEnabled()
    ? `P(Hp) = ${store.priorOverride ?? "model prior"}`
    : "disabled: hypothesis has parents";
  sliderBox.appendChild(el("div", "metric", sliderNote));
  const resetPrior = el("button", undefined, "use model prior") as HTMLButtonElement;
  resetPrior.addEventListener("click", () => store.setPriorOverride(null));
  sliderBox.appendChild(resetPrior);
  host.appendChild(sliderBox);

  const controls = el("div", "controls");
  const clear = el("button", undefined, "clear evidence") as HTMLButtonElement;
  clear.addEventListener("click", () => store.clearEvidence());
  controls.appendChild(clear);
  const pin = el("button", undefined, "pin scenario") as HTMLButtonElement;
  pin.addEventListener("click", () => store.pinScenario());
  controls.appendChild(pin);
  if (store.pinned) {
    const unpin = el("button", undefined, "unpin") as HTMLButtonElement;
    unpin.addEventListener("click", () => store.clearPin());
    controls.appendChild(unpin);
  }
  host.appendChild(controls);

  host.appendChild(el("div", "metric", `evidence: ${describeEvidence(store.evidence)}`));

  if (view.pinned) {
    const compare = el("div", "compare");
    compare.appendChild(el("h3", undefined, "pinned scenario"));
    compare.appendChild(el("div", "metric", `evidence: ${view.pinned.evidence}`));
    compare.appendChild(el("div", "metric", `LR ${view.pinned.lr}`));
    compare.appendChild(el("div", "metric", `posterior P(Hp): ${view.pinned.posterior}`));
    host.appendChild(compare);
  }

  if (store.error) host.appendChild(el("div", "error", store.error));
}

export function mount(
  store: ScenarioStore,
  root: HTMLElement,
  models: ModelListItem[],
): void {
  root.textContent = "";
  const header = el("header");
  header.appendChild(el("h1", undefined, "evidence explorer"));
  const picker = document.createElement("select");
  for (const item of models) {
    const option = document.createElement("option");
    option.value = item.id;
    option.textContent = item.fixture ? `${item.id} (fixture)` : item.id;
    picker.appendChild(option);
  }
  picker.addEventListener("change", () => void store.loadModel(picker.value));
  header.appendChild(picker);
  root.appendChild(header);

  const main = el("main");
  const graph = el("section", "graph");
  const panel = el("aside", "panel");
  main.appendChild(graph);
  main.appendChild(panel);
  root.appendChild(main);

  const redraw = () => {
    renderGraph(store, graph);
    renderPanel(store, panel);
  };
  store.subscribe(redraw);
  redraw();
}
