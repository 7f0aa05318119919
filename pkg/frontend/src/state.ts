/** Scenario state: evidence toggles, hypothesis choice, prior slider,
 * and an optional pinned snapshot for side-by-side comparison.
 *
 * Every displayed number originates from the latest query response; the
 * store does no probability arithmetic. Rapid toggles are coalesced: each
 * query carries a sequence number and responses older than the newest
 * applied one are discarded.
 */

import type {
  ApiLike,
  Distribution,
  ModelDocumentPayload,
  NodePayload,
  QueryRequestPayload,
  QueryResponsePayload,
} from "./types.js";
import { CLASS_BADGES, formatPercent, formatRatio, formatSig } from "./format.js";

export type NodeRole = "hypothesis" | "evidence" | "other";

export interface PanelView {
  hypothesis: string | null;
  positiveState: string | null;
  lr: string;
  log10Lr: string;
  badge: string;
  prior: string;
  posterior: string;
  priorOdds: string;
  posteriorOdds: string;
  warnings: string[];
  pinned: { lr: string; posterior: string; evidence: string } | null;
}

export interface PinnedScenario {
  evidence: Record<string, string>;
  priorOverride: number | null;
  response: QueryResponsePayload;
}

export class ScenarioStore {
  doc: ModelDocumentPayload | null = null;
  modelId: string | null = null;
  evidence: Record<string, string> = {};
  hypothesisNode: string | null = null;
  positiveState: string | null = null;
  priorOverride: number | null = null;
  response: QueryResponsePayload | null = null;
  pinned: PinnedScenario | null = null;
  error: string | null = null;

  private sequence = 0;
  private applied = 0;
  private listeners: Array<() => void> = [];

  constructor(private client: ApiLike) {}

  subscribe(listener: () => void): () => void {
    this.listeners.push(listener);
    return () => {
      this.listeners = this.listeners.filter((l) => l !== listener);
    };
  }

  private emit(): void {
    for (const listener of this.listeners) listener();
  }

  // --- model -----------------------------------------------------------

  async loadModel(id: string): Promise<void> {
    this.doc = await this.client.getModel(id);
    this.modelId = id;
    this.evidence = {};
    this.priorOverride = null;
    this.pinned = null;
    this.response = null;
    this.error = null;
    const fallback = this.doc.model.nodes.find((n) => n.parents.length === 0);
    const preferred = this.doc.model.nodes.find((n) => this.nodeRole(n.id) === "hypothesis");
    const chosen = preferred ?? fallback ?? this.doc.model.nodes[0] ?? null;
    this.hypothesisNode = chosen ? chosen.id : null;
    this.positiveState = chosen ? chosen.states[0] : null;
    await this.refresh();
  }

  node(id: string): NodePayload | undefined {
    return this.doc?.model.nodes.find((n) => n.id === id);
  }

  nodeRole(id: string): NodeRole {
    const roles = this.doc?.metadata["node_roles"] as Record<string, string> | undefined;
    if (roles && roles[id] === "hypothesis") return "hypothesis";
    if (roles && roles[id] === "evidence") return "evidence";
    if (roles) return "other";
    const node = this.node(id);
    if (!node) return "other";
    const childless = !this.doc!.model.nodes.some((n) => n.parents.includes(id));
    return childless && node.parents.length > 0 ? "evidence" : "hypothesis";
  }

  // --- evidence --------------------------------------------------------

  /** unobserved -> first state -> ... -> last state -> unobserved */
  cycleEvidence(nodeId: string): void {
    const node = this.node(nodeId);
    if (!node) return;
    const current = this.evidence[nodeId];
    if (current === undefined) {
      this.evidence[nodeId] = node.states[0];
    } else {
      const next = node.states.indexOf(current) + 1;
      if (next >= node.states.length) delete this.evidence[nodeId];
      else this.evidence[nodeId] = node.states[next];
    }
    void this.refresh();
  }

  setEvidence(nodeId: string, state: string | null): void {
    if (state === null) delete this.evidence[nodeId];
    else this.evidence[nodeId] = state;
    void this.refresh();
  }

  clearEvidence(): void {
    this.evidence = {};
    void this.refresh();
  }

  // --- hypothesis and prior --------------------------------------------

  setHypothesis(nodeId: string, positiveState?: string): void {
    const node = this.node(nodeId);
    if (!node) return;
    this.hypothesisNode = nodeId;
    this.positiveState =
      positiveState && node.states.includes(positiveState) ? positiveState : node.states[0];
    this.priorOverride = null; // a new hypothesis starts from the model's own prior
    void this.refresh();
  }

  priorSliderEnabled(): boolean {
    if (!this.hypothesisNode) return false;
    const node = this.node(this.hypothesisNode);
    return !!node && node.parents.length === 0;
  }

  setPriorOverride(value: number | null): void {
    if (value !== null && !this.priorSliderEnabled()) return;
    this.priorOverride = value;
    void this.refresh();
  }

  // --- compare mode ------------------------------------------------------

  pinScenario(): void {
    if (!this.response) return;
    this.pinned = {
      evidence: { ...this.evidence },
      priorOverride: this.priorOverride,
      response: this.response,
    };
    this.emit();
  }

  clearPin(): void {
    this.pinned = null;
    this.emit();
  }

  // --- querying ----------------------------------------------------------

  buildRequest(): QueryRequestPayload {
    return {
      evidence: { ...this.evidence },
      hypothesis: this.hypothesisNode
        ? { node: this.hypothesisNode, positive_state: this.positiveState ?? undefined }
        : null,
      prior_override: this.priorOverride,
    };
  }

  async refresh(): Promise<void> {
    if (!this.doc || !this.modelId) return;
    const ticket = ++this.sequence;
    try {
      const response = await this.client.query(this.modelId, this.buildRequest());
      if (ticket <= this.applied) return; // a newer response already landed
      this.applied = ticket;
      this.response = response;
      this.error = null;
    } catch (error) {
      if (ticket <= this.applied) return;
      this.applied = ticket;
      this.error = error instanceof Error ? error.message : String(error);
    }
    this.emit();
  }

  // --- views --------------------------------------------------------------

  distribution(nodeId: string): Distribution | null {
    return this.response?.posteriors[nodeId] ?? null;
  }

  priorDistribution(nodeId: string): Distribution | null {
    return this.response?.priors_used[nodeId] ?? null;
  }

  panelView(): PanelView {
    const report = this.response?.lr_report ?? null;
    const pinnedReport = this.pinned?.response.lr_report ?? null;
    return {
      hypothesis: this.hypothesisNode,
      positiveState: this.positiveState,
      lr: report ? formatRatio(report.lr) : "n/a",
      log10Lr: report && report.log10_lr !== null ? formatSig(report.log10_lr) : "n/a",
      badge: report ? CLASS_BADGES[report.probative_class] : "",
      prior:
        report && report.prior_positive !== null ? formatPercent(report.prior_positive) : "n/a",
      posterior:
        report && report.posterior_positive !== null
          ? formatPercent(report.posterior_positive)
          : "n/a",
      priorOdds: report ? formatRatio(report.prior_odds) : "n/a",
      posteriorOdds: report ? formatRatio(report.posterior_odds) : "n/a",
      warnings: report ? report.warnings : [],
      pinned:
        pinnedReport && this.pinned
          ? {
              lr: formatRatio(pinnedReport.lr),
              posterior:
                pinnedReport.posterior_positive !== null
                  ? formatPercent(pinnedReport.posterior_positive)
                  : "n/a",
              evidence: describeEvidence(this.pinned.evidence),
            }
          : null,
    };
  }
}

export function describeEvidence(evidence: Record<string, string>): string {
  const parts = Object.entries(evidence).map(([node, state]) => `${node}=${state}`);
  return parts.length ? parts.join(", ") : "(none)";
}
