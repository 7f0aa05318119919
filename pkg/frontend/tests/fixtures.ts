/** Frozen wire payloads captured from the running service for the
 * island fixture, so UI tests assert against real service numbers. */

import type { ModelDocumentPayload, QueryResponsePayload } from "../src/types.js";

export const ISLAND_DOC: ModelDocumentPayload = {
  format_version: 1,
  model: {
    name: "fig3_island",
    nodes: [
      {
        id: "H",
        label: "trace at the crime scene came from the suspect",
        states: ["true", "false"],
        parents: [],
      },
      {
        id: "E",
        label: "crime scene profile matches the suspect",
        states: ["match", "no_match"],
        parents: ["H"],
      },
    ],
    tables: [
      { node: "H", rows: [[0.000999000999000999, 0.999000999000999]] },
      { node: "E", rows: [[1.0, 0.0], [0.01, 0.99]] },
    ],
  },
  metadata: {
    description: "Single trace match on a closed island of 1001 possible sources.",
    node_roles: { H: "hypothesis", E: "evidence" },
  },
};

export const EMPTY_RESPONSE: QueryResponsePayload = {
  posteriors: {
    H: { true: 0.000999000999000999, false: 0.999000999000999 },
    E: { match: 0.010989010989010988, no_match: 0.989010989010989 },
  },
  priors_used: {
    H: { true: 0.000999000999000999, false: 0.999000999000999 },
    E: { match: 0.010989010989010988, no_match: 0.989010989010989 },
  },
  lr_report: {
    lr: 1.0,
    log10_lr: 0.0,
    probative_class: "NEUTRAL",
    exhaustive: true,
    prior_odds: 0.001,
    posterior_odds: 0.001,
    prior_positive: 0.000999000999000999,
    posterior_positive: 0.000999000999000999,
    warnings: [],
  },
  p_evidence: 1.0,
};

export const MATCH_RESPONSE: QueryResponsePayload = {
  posteriors: {
    H: { true: 0.09090909090909091, false: 0.9090909090909092 },
    E: { match: 1.0, no_match: 0.0 },
  },
  priors_used: {
    H: { true: 0.000999000999000999, false: 0.999000999000999 },
    E: { match: 0.010989010989010988, no_match: 0.989010989010989 },
  },
  lr_report: {
    lr: 100.0,
    log10_lr: 2.0,
    probative_class: "FAVOURS_HP",
    exhaustive: true,
    prior_odds: 0.001,
    posterior_odds: 0.1,
    prior_positive: 0.000999000999000999,
    posterior_positive: 0.09090909090909091,
    warnings: [],
  },
  p_evidence: 0.010989010989010988,
};

export const MATCH_EVEN_PRIOR_RESPONSE: QueryResponsePayload = {
  posteriors: {
    H: { true: 0.9900990099009901, false: 0.0099009900990099 },
    E: { match: 1.0, no_match: 0.0 },
  },
  priors_used: {
    H: { true: 0.5, false: 0.49999999999999994 },
    E: { match: 0.505, no_match: 0.49499999999999994 },
  },
  lr_report: {
    lr: 99.99999999999991,
    log10_lr: 1.9999999999999996,
    probative_class: "FAVOURS_HP",
    exhaustive: true,
    prior_odds: 1.0,
    posterior_odds: 99.99999999999991,
    prior_positive: 0.5,
    posterior_positive: 0.9900990099009901,
    warnings: [],
  },
  p_evidence: 0.505,
};

export const NO_MATCH_RESPONSE: QueryResponsePayload = {
  posteriors: {
    H: { true: 0.0, false: 1.0 },
    E: { match: 0.0, no_match: 1.0 },
  },
  priors_used: {
    H: { true: 0.000999000999000999, false: 0.999000999000999 },
    E: { match: 0.010989010989010988, no_match: 0.989010989010989 },
  },
  lr_report: {
    lr: 0.0,
    log10_lr: null,
    probative_class: "FAVOURS_HD",
    exhaustive: true,
    prior_odds: 0.001,
    posterior_odds: 0.0,
    prior_positive: 0.000999000999000999,
    posterior_positive: 0.0,
    warnings: [],
  },
  p_evidence: 0.989010989010989,
};
