"""
im(mu_m(K_{m+1})) against 2m + 1
================================

For m >= 3 the immersion number of mu_m(K_{m+1}) lies between t + 1 (from
lifting) and 2t - 1 (from degrees), with t = m + 1. The explorer searches the
gap under a node budget and says whether 2m + 1 is reached.
"""

from mycimm import SearchBudget, explore_conjecture
from mycimm.mycielski import mycielskian
from mycimm.graph import complete_graph

for m in (3, 4, 5, 6):
    rep = explore_conjecture(m, SearchBudget(10**6))
    r = rep.result
    print(f"m={m}: interval {rep.interval}, found [{r.lower}, {r.upper}] "
          f"in {r.nodes_used} nodes -> {rep.verdict}")

# The witness for m = 5, written with (v, level) labels.
rep = explore_conjecture(5, SearchBudget(10**6))
myc = mycielskian(complete_graph(6), 5)
print(rep.result.certificate.render(myc.label))
