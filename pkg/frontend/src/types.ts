/** Wire formats of the /api/v1 endpoints. */

export interface NodePayload {
  id: string;
  label: string;
  states: string[];
  parents: string[];
}

export interface TablePayload {
  node: string;
  rows: number[][];
}

export interface ModelPayload {
  name: string;
  nodes: NodePayload[];
  tables: TablePayload[];
}

export interface ModelDocumentPayload {
  format_version: number;
  model: ModelPayload;
  metadata: Record<string, unknown>;
}

export interface ModelListItem {
  id: string;
  name: string;
  fixture: boolean;
}

/** state label -> probability */
export type Distribution = Record<string, number>;

export type ProbativeClass = "FAVOURS_HP" | "FAVOURS_HD" | "NEUTRAL";

/** Infinite ratios arrive as the string "INFINITE". */
export type Ratio = number | "INFINITE" | null;

export interface LrReportPayload {
  lr: Ratio;
  log10_lr: number | null;
  probative_class: ProbativeClass;
  exhaustive: boolean;
  prior_odds: Ratio;
  posterior_odds: Ratio;
  prior_positive: number | null;
  posterior_positive: number | null;
  warnings: string[];
}

export interface QueryRequestPayload {
  evidence: Record<string, string>;
  hypothesis?: { node: string; positive_state?: string; negative_spec?: string } | null;
  prior_override?: number | null;
  query_nodes?: string[] | null;
}

export interface QueryResponsePayload {
  posteriors: Record<string, Distribution>;
  priors_used: Record<string, Distribution>;
  lr_report: LrReportPayload | null;
  p_evidence: number;
}

/** The subset of the HTTP client the UI state machine depends on. */
export interface ApiLike {
  listModels(): Promise<ModelListItem[]>;
  getModel(id: string): Promise<ModelDocumentPayload>;
  query(id: string, request: QueryRequestPayload): Promise<QueryResponsePayload>;
}
