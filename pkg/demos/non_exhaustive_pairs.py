"""
Why the hypothesis pair must be exhaustive
==========================================

A likelihood ratio only certifies "the posterior moved toward Hp" when
Hd is the full negation of Hp. Compare two named states of a three-state
source node and the ratio can sit exactly at 1 while the evidence moves
both states' posteriors a great deal.
"""

from probative import posterior, state_pair_lr
from probative.network import ConditionalTable, NetworkModel, NodeDef

# who left the trace: the suspect, a close relative, or an unrelated person
model = NetworkModel(
    name="relative_trap",
    nodes=(
        NodeDef(id="S", states=("suspect", "relative", "unrelated"),
                label="who left the trace"),
        NodeDef(id="M", states=("flagged", "not_flagged"), parents=("S",),
                label="familial screening marker flagged"),
    ),
    tables=(
        ConditionalTable(node="S", rows=((0.1, 0.2, 0.7),)),
        # the marker is typical of the relative, equally unusual otherwise
        ConditionalTable(node="M", rows=((0.1, 0.9), (0.8, 0.2), (0.1, 0.9))),
    ),
)

evidence = {"M": "flagged"}
report = state_pair_lr(model, evidence, "S", "suspect", "unrelated")
print(f"LR(suspect : unrelated) = {report.lr:.6f}  -> {report.probative_class.value}")
print(f"warnings: {', '.join(report.warnings)}")

prior = posterior(model, {}, "S").distribution
post = posterior(model, evidence, "S").distribution
print("\nstate       prior     posterior")
for state in ("suspect", "relative", "unrelated"):
    print(f"{state:10}  {prior[state]:.4f}    {post[state]:.4f}")

# The ratio is neutral for the named pair, yet 'unrelated' fell from 0.70
# to 0.29: all the lost mass went to the relative. The only thing a
# non-exhaustive ratio preserves is the odds between the two named states:
print(f"\nprior odds suspect:unrelated     = {prior['suspect'] / prior['unrelated']:.4f}")
print(f"posterior odds suspect:unrelated = {post['suspect'] / post['unrelated']:.4f}")
