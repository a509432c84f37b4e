"""
Immersion certificates
======================

A K_t-immersion is a set of t terminals plus pairwise edge-disjoint paths.
The verifier checks this and reports every problem it finds. Splitting off
edges along each path leaves a K_t on the terminals.
"""

from mycimm import ImmersionCertificate, complete_graph, realize_by_splitting, verify_certificate
from mycimm.certificate import contains_clique_on
from mycimm.fixtures import appendix_k7

fx = appendix_k7()
host = fx.host()
print(fx.certificate.render(host.label))
print("valid:", verify_certificate(host.graph, fx.certificate).valid)

# A broken certificate: the path 0-2 in K_3 runs over the other two edges.
bad = ImmersionCertificate(3, (0, 1, 2), {(0, 1): (0, 1), (1, 2): (1, 2), (0, 2): (0, 1, 2)})
for v in verify_certificate(complete_graph(3), bad).violations:
    print("violation:", v.detail)

# Split off along every path and look for the clique.
mg = realize_by_splitting(host.graph, fx.certificate)
print("edges after splitting:", mg.total_edges(), "of", host.graph.num_edges)
print("K_7 on terminals:", contains_clique_on(mg, fx.certificate.terminals))
