"""
Exact immersion numbers
=======================

The solver combines the degree-count upper bound with an exhaustive
terminal-set and path-packing search. Shipped certificates seed the lower
bound; ``use_fixtures=False`` makes the search find everything itself.
"""

import time

from mycimm import SearchBudget, complete_graph, cycle_graph, degree_upper_bound, immersion_number, mycielskian, path_graph

budget = SearchBudget(10**7)
cases = [("P_5", path_graph(5), 0), ("C_7", cycle_graph(7), 0)]
cases += [(f"mu_{m}(P_5)", path_graph(5), m) for m in (1, 2, 3, 4)]
cases += [(f"mu_{m}(C_{n})", cycle_graph(n), m) for n in (5, 6, 7) for m in (1, 2)]
cases += [(f"mu_2(K_{t})", complete_graph(t), 2) for t in (3, 4, 5)]

for name, base, m in cases:
    g = mycielskian(base, m).graph if m else base
    start = time.perf_counter()
    res = immersion_number(g, budget, use_fixtures=False)
    print(f"{name:12s} bound={degree_upper_bound(g):2d}  im={res.lower} ({res.status}, "
          f"{res.nodes_used} nodes, {time.perf_counter() - start:.2f}s)")
