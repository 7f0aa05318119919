"""Likelihood ratios and their interpretation.

The LR of evidence E for a hypothesis pair (Hp, Hd) is
P(E | Hp) / P(E | Hd). Three routes compute it:

* :func:`lr_from_cpt` reads both likelihoods straight from the table of a
  single evidence node whose only parent is the hypothesis.
* :func:`combine_dependent` multiplies localized ratios read from CPTs
  when every evidence node's parents are the hypothesis and/or other
  observed evidence. With no inter-evidence edges it degenerates to the
  plain product of per-item LRs (:func:`combine_independent`).
* :func:`lr_via_inference` works for any network: run the posterior with
  and without the evidence and recover the LR from the odds change
  (:func:`lr_recover`). The recovered LR does not depend on the prior of
  a parentless hypothesis, which is what makes the recovery sound.

An infinite ratio (evidence impossible under Hd but not Hp) is reported
as ``math.inf`` with a warning, never raised; 0/0 is an error.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import (
    ImpossibleEvidenceError,
    PriorOverrideError,
    StructureError,
    ZeroOverZeroError,
)
from .inference import posterior, probability_of_evidence
from .network import ConditionalTable, Evidence, NetworkModel, cpt_lookup, replace_table

# Relative half-width of the band around LR = 1 treated as neutral.
NEUTRAL_EPSILON = 1e-9

COMPLEMENT = "COMPLEMENT"

WARN_NON_EXHAUSTIVE = "NON_EXHAUSTIVE"
WARN_INFINITE = "INFINITE"
WARN_PAIR_ONLY = "PAIR_ONLY"


class ProbativeClass(enum.Enum):
    FAVOURS_HP = "FAVOURS_HP"
    FAVOURS_HD = "FAVOURS_HD"
    NEUTRAL = "NEUTRAL"


@dataclass(frozen=True)
class HypothesisQuery:
    """Which node and state play the role of Hp, and what Hd is.

    ``negative_spec`` is either :data:`COMPLEMENT` (Hd = not Hp, the
    exhaustive reading) or the label of a specific state (non-exhaustive:
    the pair no longer covers all possibilities).
    """

    node: str
    positive_state: str
    negative_spec: str = COMPLEMENT

    @property
    def exhaustive(self) -> bool:
        return self.negative_spec == COMPLEMENT


@dataclass(frozen=True)
class LikelihoodRatioReport:
    """An LR with everything needed to interpret it.

    ``lr`` may be ``math.inf`` when the evidence is impossible under Hd;
    ``log10_lr`` is None in that case and when the LR is zero. Odds are
    None when the route used cannot know them (CPT-local routes on a
    hypothesis that has parents).
    """

    lr: float
    log10_lr: float | None
    probative_class: ProbativeClass
    exhaustive: bool
    prior_odds: float | None = None
    posterior_odds: float | None = None
    prior_positive: float | None = None
    posterior_positive: float | None = None
    warnings: tuple[str, ...] = ()

    def as_dict(self) -> dict:
        """JSON-safe form: infinities become the string "INFINITE"."""

        def safe(x: float | None):
            if x is None:
                return None
            return "INFINITE" if math.isinf(x) else x

        return {
            "lr": safe(self.lr),
            "log10_lr": self.log10_lr,
            "probative_class": self.probative_class.value,
            "exhaustive": self.exhaustive,
            "prior_odds": safe(self.prior_odds),
            "posterior_odds": safe(self.posterior_odds),
            "prior_positive": self.prior_positive,
            "posterior_positive": self.posterior_positive,
            "warnings": list(self.warnings),
        }


def probative_class(lr: float) -> ProbativeClass:
    """Direction of the belief shift the LR induces.

    Greater than 1 favours Hp, less than 1 favours Hd, and a band of
    1e-9 (relative) around 1 counts as neutral.
    """
    if lr > 1.0 + NEUTRAL_EPSILON:
        return ProbativeClass.FAVOURS_HP
    if lr < 1.0 - NEUTRAL_EPSILON:
        return ProbativeClass.FAVOURS_HD
    return ProbativeClass.NEUTRAL


def odds_update(prior_odds: float, lr: float) -> float:
    """Posterior odds = prior odds x LR."""
    return prior_odds * lr


def combine_independent(lrs: list[float]) -> float:
    """Combined LR of evidence items independent conditional on H.

    The product of the individual LRs, accumulated in log space so that
    long products of large ratios cannot overflow. Empty input gives 1.
    """
    if any(lr == 0.0 for lr in lrs):
        return 0.0
    if any(math.isinf(lr) for lr in lrs):
        return math.inf
    return 10.0 ** math.fsum(math.log10(lr) for lr in lrs)


def _log10_or_none(lr: float) -> float | None:
    if lr == 0.0 or math.isinf(lr):
        return None
    return math.log10(lr)


def _ratio(numerator: float, denominator: float, warnings: list[str]) -> float:
    if numerator == 0.0 and denominator == 0.0:
        raise ZeroOverZeroError("both likelihoods are zero; the ratio is undefined")
    if denominator == 0.0:
        warnings.append(WARN_INFINITE)
        return math.inf
    return numerator / denominator


def _hypothesis_states(model: NetworkModel, hypothesis: HypothesisQuery) -> tuple[str, str]:
    """Resolve (Hp state, Hd state) for routes that need a concrete pair."""
    node = model.node(hypothesis.node)
    node.state_index(hypothesis.positive_state)
    if hypothesis.exhaustive:
        if len(node.states) != 2:
            raise StructureError(
                f"hypothesis node {node.id!r} has {len(node.states)} states; "
                "a CPT-local ratio needs a binary node or an explicit negative state"
            )
        negative = next(s for s in node.states if s != hypothesis.positive_state)
    else:
        negative = hypothesis.negative_spec
        node.state_index(negative)
        if negative == hypothesis.positive_state:
            raise StructureError("positive and negative hypothesis states are identical")
    return hypothesis.positive_state, negative


def _prior_odds_if_root(
    model: NetworkModel, hypothesis: HypothesisQuery, positive: str, negative: str
) -> tuple[float | None, float | None]:
    """(prior odds, prior of Hp) read off the table of a parentless node."""
    node = model.node(hypothesis.node)
    if node.parents:
        return None, None
    row = model.table(hypothesis.node).rows[0]
    p = row[node.state_index(positive)]
    d = row[node.state_index(negative)]
    if d == 0.0:
        return (math.inf if p > 0.0 else None), p
    return p / d, p


def _finish_report(
    lr: float,
    exhaustive: bool,
    warnings: list[str],
    prior_odds: float | None,
    prior_positive: float | None,
) -> LikelihoodRatioReport:
    posterior_odds = None
    posterior_positive = None
    if prior_odds is not None and not math.isinf(prior_odds):
        posterior_odds = odds_update(prior_odds, lr)
        if exhaustive and not math.isinf(posterior_odds):
            posterior_positive = posterior_odds / (1.0 + posterior_odds)
    if not exhaustive and WARN_NON_EXHAUSTIVE not in warnings:
        warnings.insert(0, WARN_NON_EXHAUSTIVE)
    return LikelihoodRatioReport(
        lr=lr,
        log10_lr=_log10_or_none(lr),
        probative_class=probative_class(lr),
        exhaustive=exhaustive,
        prior_odds=prior_odds,
        posterior_odds=posterior_odds,
        prior_positive=prior_positive,
        posterior_positive=posterior_positive,
        warnings=tuple(warnings),
    )


def lr_from_cpt(
    model: NetworkModel,
    evidence_node: str,
    observed_state: str,
    hypothesis: HypothesisQuery,
) -> LikelihoodRatioReport:
    """LR of a single evidence node read directly from its table.

    Requires the evidence node's sole parent to be the hypothesis node, so
    that both likelihoods are literal table entries.
    """
    node = model.node(evidence_node)
    if node.parents != (hypothesis.node,):
        raise StructureError(
            f"evidence node {evidence_node!r} must have the hypothesis "
            f"{hypothesis.node!r} as its only parent (has parents {list(node.parents)})"
        )
    positive, negative = _hypothesis_states(model, hypothesis)
    p_given_hp = cpt_lookup(model, evidence_node, observed_state, {hypothesis.node: positive})
    p_given_hd = cpt_lookup(model, evidence_node, observed_state, {hypothesis.node: negative})
    warnings: list[str] = []
    lr = _ratio(p_given_hp, p_given_hd, warnings)
    prior_odds, prior_positive = _prior_odds_if_root(model, hypothesis, positive, negative)
    return _finish_report(lr, hypothesis.exhaustive, warnings, prior_odds, prior_positive)


def combine_dependent(
    model: NetworkModel,
    evidence: Evidence,
    hypothesis: HypothesisQuery,
) -> LikelihoodRatioReport:
    """Combined LR from CPTs when evidence may depend on other evidence.

    Each observed node contributes the ratio of its table entry with the
    hypothesis set to Hp versus Hd, with its evidence parents fixed at
    their observed states. Works only while every evidence node's parents
    are the hypothesis node and/or other observed evidence; anything else
    needs the inference route.
    """
    positive, negative = _hypothesis_states(model, hypothesis)
    observed = set(evidence)
    ratios: list[float] = []
    warnings: list[str] = []
    for node_id, state in evidence.items():
        node = model.node(node_id)
        for parent in node.parents:
            if parent != hypothesis.node and parent not in observed:
                raise StructureError(
                    f"evidence node {node_id!r} depends on {parent!r}, which is neither "
                    "the hypothesis nor observed evidence; use the inference route"
                )
        base = {k: v for k, v in evidence.items() if k != node_id}
        numerator = cpt_lookup(model, node_id, state, {**base, hypothesis.node: positive})
        denominator = cpt_lookup(model, node_id, state, {**base, hypothesis.node: negative})
        ratios.append(_ratio(numerator, denominator, warnings))
    lr = combine_independent(ratios)
    prior_odds, prior_positive = _prior_odds_if_root(model, hypothesis, positive, negative)
    return _finish_report(lr, hypothesis.exhaustive, warnings, prior_odds, prior_positive)


def lr_recover(
    posterior_p: float,
    posterior_d: float,
    prior_p: float,
    prior_d: float,
) -> float:
    """LR from posterior and prior probabilities of the hypothesis pair.

    (posterior_p / posterior_d) x (prior_d / prior_p): the factor by which
    the odds moved. With a prior of one half on each side this collapses
    to the plain posterior ratio.
    """
    if posterior_p == 0.0 and posterior_d == 0.0:
        raise ZeroOverZeroError("posterior probabilities are both zero")
    if prior_p == 0.0 and prior_d == 0.0:
        raise ZeroOverZeroError("prior probabilities are both zero")
    post_ratio = math.inf if posterior_d == 0.0 else posterior_p / posterior_d
    prior_ratio = math.inf if prior_p == 0.0 else prior_d / prior_p
    if (math.isinf(post_ratio) and prior_ratio == 0.0) or (
        post_ratio == 0.0 and math.isinf(prior_ratio)
    ):
        raise ZeroOverZeroError("odds shift is 0 x inf; the ratio is undefined")
    return post_ratio * prior_ratio


def override_prior(model: NetworkModel, node_id: str, positive: str, p: float) -> NetworkModel:
    """Swap a parentless node's prior: positive state gets ``p``, the rest
    keep their relative weights within the remaining mass."""
    node = model.node(node_id)
    if node.parents:
        raise PriorOverrideError(
            f"node {node_id!r} has parents; its prior cannot be overridden directly"
        )
    if not (0.0 < p < 1.0):
        raise PriorOverrideError(f"prior override must lie strictly inside (0, 1); got {p!r}")
    row = model.table(node_id).rows[0]
    pos_idx = node.state_index(positive)
    rest = sum(v for i, v in enumerate(row) if i != pos_idx)
    if rest == 0.0:
        # Original prior was degenerate at the positive state; spread evenly.
        others = len(row) - 1
        new_row = tuple(p if i == pos_idx else (1.0 - p) / others for i in range(len(row)))
    else:
        scale = (1.0 - p) / rest
        new_row = tuple(p if i == pos_idx else v * scale for i, v in enumerate(row))
    return replace_table(model, ConditionalTable(node=node_id, rows=(new_row,)))


def _positive_negative_mass(
    report_distribution: dict[str, float], hypothesis: HypothesisQuery
) -> tuple[float, float]:
    p = report_distribution[hypothesis.positive_state]
    if hypothesis.exhaustive:
        return p, 1.0 - p
    return p, report_distribution[hypothesis.negative_spec]


def lr_via_inference(
    model: NetworkModel,
    evidence: Evidence,
    hypothesis: HypothesisQuery,
    prior_override: float | None = None,
) -> LikelihoodRatioReport:
    """LR for arbitrary network shape, recovered from two posterior runs.

    Runs the engine without and with the evidence and applies
    :func:`lr_recover` to the hypothesis node's distributions. For a
    parentless hypothesis the result is invariant under ``prior_override``,
    which merely substitutes the prior table before both runs.
    """
    if hypothesis.negative_spec != COMPLEMENT:
        model.node(hypothesis.node).state_index(hypothesis.negative_spec)
    model.node(hypothesis.node).state_index(hypothesis.positive_state)
    working = model
    if prior_override is not None:
        working = override_prior(model, hypothesis.node, hypothesis.positive_state, prior_override)

    prior_report = posterior(working, {}, hypothesis.node)
    post_report = posterior(working, evidence, hypothesis.node)
    prior_p, prior_d = _positive_negative_mass(prior_report.distribution, hypothesis)
    post_p, post_d = _positive_negative_mass(post_report.distribution, hypothesis)

    warnings: list[str] = []
    lr = lr_recover(post_p, post_d, prior_p, prior_d)
    if math.isinf(lr):
        warnings.append(WARN_INFINITE)
    if not hypothesis.exhaustive:
        warnings.insert(0, WARN_NON_EXHAUSTIVE)

    prior_odds = math.inf if prior_d == 0.0 else prior_p / prior_d
    posterior_odds = math.inf if post_d == 0.0 else post_p / post_d
    return LikelihoodRatioReport(
        lr=lr,
        log10_lr=_log10_or_none(lr),
        probative_class=probative_class(lr),
        exhaustive=hypothesis.exhaustive,
        prior_odds=prior_odds,
        posterior_odds=posterior_odds,
        prior_positive=prior_p,
        posterior_positive=post_p,
        warnings=tuple(warnings),
    )


def state_pair_lr(
    model: NetworkModel,
    evidence: Evidence,
    node: str,
    state_p: str,
    state_d: str,
) -> LikelihoodRatioReport:
    """LR between two named states of a (possibly many-state) node.

    Computed as P(evidence | node=state_p) / P(evidence | node=state_d)
    via two conditioned inference runs. When the node has more than two
    states the pair is not exhaustive: the LR still updates the odds
    between the two states, but says nothing about how the evidence moves
    either state's own posterior, and the report is flagged accordingly.
    """
    node_def = model.node(node)
    node_def.state_index(state_p)
    node_def.state_index(state_d)
    if state_p == state_d:
        raise StructureError("the two states of the pair must differ")
    if node in evidence:
        raise StructureError(f"hypothesis node {node!r} is itself observed")

    likelihoods = []
    for state in (state_p, state_d):
        joint = probability_of_evidence(model, {**evidence, node: state})
        marginal = probability_of_evidence(model, {node: state})
        if marginal == 0.0 or (joint == 0.0 and evidence):
            raise ImpossibleEvidenceError(
                f"evidence {dict(evidence)!r} is impossible conditioned on {node}={state}"
            )
        likelihoods.append(joint / marginal)

    warnings: list[str] = []
    lr = _ratio(likelihoods[0], likelihoods[1], warnings)
    exhaustive = len(node_def.states) == 2
    if not exhaustive:
        warnings.insert(0, WARN_PAIR_ONLY)
        warnings.insert(0, WARN_NON_EXHAUSTIVE)

    prior_rep = posterior(model, {}, node)
    post_rep = posterior(model, evidence, node)
    prior_p = prior_rep.distribution[state_p]
    prior_d = prior_rep.distribution[state_d]
    post_p = post_rep.distribution[state_p]
    post_d = post_rep.distribution[state_d]
    prior_odds = math.inf if prior_d == 0.0 else prior_p / prior_d
    posterior_odds = math.inf if post_d == 0.0 else post_p / post_d
    return LikelihoodRatioReport(
        lr=lr,
        log10_lr=_log10_or_none(lr),
        probative_class=probative_class(lr),
        exhaustive=exhaustive,
        prior_odds=prior_odds,
        posterior_odds=posterior_odds,
        prior_positive=prior_p,
        posterior_positive=post_p,
        warnings=tuple(warnings),
    )
