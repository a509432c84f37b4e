"""
Building generalized Mycielski graphs
=====================================

``mycielskian(G, m)`` stacks m levels over G and adds one apex. The same
graph also falls out of a direct product with a looped path, which we use
as a cross-check.
"""

from mycimm import cone_crosscheck, cycle_graph, degree_histogram, mycielskian

# The classical Mycielskian of the 5-cycle is m = 2.
myc = mycielskian(cycle_graph(5), 2)
print(myc.graph.n, "vertices,", myc.graph.num_edges, "edges")
print("labels:", ", ".join(myc.labels))

# Level sizes grow linearly in m; degrees double below the top level.
for m in range(1, 6):
    h = mycielskian(cycle_graph(5), m).graph
    print(f"m={m}: n={h.n}, |E|={h.num_edges}, degrees={degree_histogram(h)}")

# The cone construction gives the identical edge set.
for m in range(1, 6):
    assert cone_crosscheck(cycle_graph(5), m) == mycielskian(cycle_graph(5), m).graph
print("cone construction agrees for m = 1..5")

# graph6 export uses the canonical index map (vertex (v, i) -> i*n + v, apex last).
print("graph6:", myc.to_graph6())
