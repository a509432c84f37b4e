"""
Distinct neighbors and lifting
==============================

Lifting a K_t-immersion into mu_m(G) needs a distinct neighbor for every
terminal. When the terminals share a common neighborhood of size t-1 there is
none, and the immersion is rebuilt on that neighborhood first.
"""

from mycimm import (
    ImmersionCertificate,
    check_dnp,
    complete_bipartite_graph,
    ensure_dnp,
    lift_certificate,
    mycielskian,
    verify_certificate,
)

# K_4 on the 4-side of K_{3,4}; each pair is routed through the 3-side
# according to a 3-edge-coloring of K_4.
g = complete_bipartite_graph(3, 4)
coloring = {(0, 1): 0, (2, 3): 0, (0, 2): 1, (1, 3): 1, (0, 3): 2, (1, 2): 2}
cert = ImmersionCertificate.build((3, 4, 5, 6), {(i, j): (3 + i, c, 3 + j) for (i, j), c in coloring.items()})
print("valid:", verify_certificate(g, cert).valid, " distinct neighbors:", check_dnp(g, cert))

rebuilt, assign = ensure_dnp(g, cert)
print("rebuilt terminals:", rebuilt.terminals, " assignment:", dict(assign.assignment))

for m in (1, 2, 3, 4):
    myc = mycielskian(g, m)
    lifted = lift_certificate(g, rebuilt, assign, m)
    ok = verify_certificate(myc.graph, lifted).valid
    print(f"m={m}: K_{lifted.t} in mu_{m}(K_{{3,4}}) valid={ok}; apex path from {myc.label(lifted.terminals[0])}:",
          " - ".join(myc.label(x) for x in lifted.paths[(0, lifted.t - 1)]))
