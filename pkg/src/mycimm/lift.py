"""Lift a K_t-immersion in G to a K_{t+1}-immersion in the m-Mycielskian.

The level-0 copy of G carries the original paths unchanged. The apex joins
terminal ``v_i`` by climbing the levels, alternating between ``v_i`` and its
distinct neighbor ``f(i)``: ``(v_i,0) - (f(i),1) - (v_i,2) - ... - w``. Because
the distinct neighbors are distinct, no shadow edge is climbed twice.
"""

from __future__ import annotations

from .certificate import ImmersionCertificate, verify_certificate
from .dnp import NeighborAssignment, ensure_dnp
from .errors import ConsistencyError, InputError
from .graph import Graph
from .mycielski import MycGraph, mycielskian


def apex_path(myc: MycGraph, v: int, f: int) -> tuple[int, ...]:
    """Alternating climb from ``(v, 0)`` to the apex, using ``f`` on odd levels."""
    return tuple(myc.index(v if level % 2 == 0 else f, level) for level in range(myc.m)) + (myc.apex,)


def lift_certificate(g: Graph, cert: ImmersionCertificate, assign: NeighborAssignment,
                     m: int) -> ImmersionCertificate:
    """K_{t+1} certificate in ``mycielskian(g, m)`` with terminals ``(v_1,0)..(v_t,0), w``."""
    if cert.t < 2:
        raise InputError("lift_certificate needs t >= 2; use lift_degenerate for t = 1")
    report = verify_certificate(g, cert)
    if not report.valid:
        raise InputError(f"certificate is invalid: {report.violations[0].detail}")
    if not assign.is_valid_for(g, cert):
        raise InputError("assignment is not a distinct-neighbor assignment for this certificate")

    myc = mycielskian(g, m)
    t = cert.t
    # level-0 indices coincide with base indices
    paths = dict(cert.paths)
    for i, v in enumerate(cert.terminals):
        paths[(i, t)] = apex_path(myc, v, assign[i])
    return ImmersionCertificate(t + 1, cert.terminals + (myc.apex,), paths)


def lift_degenerate(g: Graph, m: int, v: int = 0) -> ImmersionCertificate:
    """K_2 certificate ``(v, m-1) - w``, valid for any G with at least one vertex."""
    if g.n < 1:
        raise InputError("graph has no vertices")
    myc = mycielskian(g, m)
    top = myc.index(v, m - 1)
    return ImmersionCertificate(2, (top, myc.apex), {(0, 1): (top, myc.apex)})


def lift_immersion(g: Graph, cert: ImmersionCertificate, m: int) -> tuple[MycGraph, ImmersionCertificate]:
    """Repair ``cert`` to have the DNP if needed, lift it, and verify the result."""
    myc = mycielskian(g, m)
    if cert.t < 2:
        v = cert.terminals[0] if cert.terminals else 0
        lifted = lift_degenerate(g, m, v)
    else:
        repaired, assign = ensure_dnp(g, cert)
        lifted = lift_certificate(g, repaired, assign, m)
    report = verify_certificate(myc.graph, lifted)
    if not report.valid:
        raise ConsistencyError(f"lifted certificate is invalid: {report.violations[0].detail}")
    return myc, lifted
