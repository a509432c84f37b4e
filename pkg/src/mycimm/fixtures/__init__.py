"""Hand-transcribed clique immersions, shipped as certificate JSON.

Vertices are written as ``(k, i)`` with ``k`` the 1-based base vertex and
``i`` the level, or ``"w"`` for the apex. Terminal pairs that are adjacent in
the host and not listed explicitly are joined by their edge.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from itertools import combinations
from pathlib import Path
from typing import Sequence, Union

from ..certificate import ImmersionCertificate
from ..errors import InputError
from ..graph import FamilySpec, Graph, generate_family
from ..mycielski import MycGraph, mycielskian

Label = Union[tuple[int, int], str]


@dataclass(frozen=True)
class Fixture:
    name: str
    family: FamilySpec
    m: int
    certificate: ImmersionCertificate
    source: str

    def host(self) -> MycGraph:
        return mycielskian(generate_family(self.family), self.m)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "family": {"kind": self.family.kind, "n": self.family.n},
            "m": self.m,
            "source": self.source,
            "certificate": self.certificate.to_json(),
        }

    @classmethod
    def from_json(cls, data: dict) -> Fixture:
        fam = data["family"]
        return cls(data["name"], FamilySpec(fam["kind"], int(fam["n"])), int(data["m"]),
                   ImmersionCertificate.from_json(data["certificate"]), data.get("source", ""))


def _idx(myc: MycGraph, x: Label) -> int:
    if x == "w":
        return myc.apex
    k, i = x
    return myc.index(k - 1, i)


def certificate_from_labels(myc: MycGraph, terminals: Sequence[Label],
                            paths: Sequence[Sequence[Label]]) -> ImmersionCertificate:
    """Assemble a certificate from labelled paths, filling adjacent pairs with their edge."""
    terms = [_idx(myc, x) for x in terminals]
    pos = {x: a for a, x in enumerate(terms)}
    out: dict[tuple[int, int], list[int]] = {}
    for p in paths:
        seq = [_idx(myc, x) for x in p]
        try:
            a, b = pos[seq[0]], pos[seq[-1]]
        except KeyError as exc:
            raise InputError(f"path {p} does not join two terminals") from exc
        out[(a, b)] = seq
    given = {tuple(sorted(k)) for k in out}
    for a, b in combinations(range(len(terms)), 2):
        if (a, b) not in given:
            if not myc.graph.has_edge(terms[a], terms[b]):
                raise InputError(f"pair {terminals[a]}-{terminals[b]} has no listed path and no edge")
            out[(a, b)] = [terms[a], terms[b]]
    return ImmersionCertificate.build(terms, out)


def appendix_k7() -> Fixture:
    """K_7 in mu_3(K_4)."""
    myc = mycielskian(generate_family(FamilySpec("complete", 4)), 3)
    terminals = [(1, 0), (2, 0), (3, 0), (4, 0), (1, 1), (2, 1), (3, 1)]
    paths = [
        [(1, 0), (4, 1), (2, 2), (1, 1)],
        [(1, 1), (4, 2), (3, 1)],
        [(1, 1), (3, 2), "w", (1, 2), (2, 1)],
        [(2, 0), (4, 1), (3, 2), (2, 1)],
        [(2, 1), (4, 2), "w", (2, 2), (3, 1)],
        [(3, 0), (4, 1), (1, 2), (3, 1)],
    ]
    return Fixture("appendix_k7_myc3_k4", FamilySpec("complete", 4), 3,
                   certificate_from_labels(myc, terminals, paths), "appendix K_7 immersion")


def appendix_k9() -> Fixture:
    """K_9 in mu_4(K_5)."""
    myc = mycielskian(generate_family(FamilySpec("complete", 5)), 4)
    terminals = [(1, 0), (2, 0), (3, 0), (4, 0), (5, 0), (1, 1), (2, 1), (3, 1), (4, 1)]
    paths = [
        [(1, 0), (5, 1), (4, 2), (1, 1)],
        [(2, 0), (5, 1), (3, 2), (2, 1)],
        [(3, 0), (5, 1), (2, 2), (3, 1)],
        [(4, 0), (5, 1), (1, 2), (4, 1)],
        [(1, 1), (3, 2), (2, 3), (4, 2), (2, 1)],
        [(1, 1), (5, 2), (3, 1)],
        [(1, 1), (2, 2), (4, 1)],
        [(2, 1), (1, 2), (3, 1)],
        [(3, 1), (4, 2), (5, 3), (3, 2), (4, 1)],
        [(2, 1), (5, 2), (4, 1)],
    ]
    return Fixture("appendix_k9_myc4_k5", FamilySpec("complete", 5), 4,
                   certificate_from_labels(myc, terminals, paths), "appendix K_9 immersion")


def _zigzag(lo: int, hi: int, start_even: int, levels: range) -> list[Label]:
    # base vertex start_even on even levels, the other of {lo, hi} on odd levels
    other = hi if start_even == lo else lo
    return [(start_even if i % 2 == 0 else other, i) for i in levels]


def path5_k5(m: int) -> Fixture:
    """K_5 in mu_m(P_5) for m >= 3, from the two apex zigzags."""
    if m < 3:
        raise InputError("the P_5 construction needs m >= 3")
    myc = mycielskian(generate_family(FamilySpec("path", 5)), m)
    terminals = [(2, 0), (3, 0), (4, 0), (2, 1), (4, 1)]
    top = range(m)
    # up the 1/2 ladder from (2,0), down the 4/5 ladder to (4,1)
    up_a = _zigzag(1, 2, 2, top)
    down_a = [(4 if i % 2 == 1 else 5, i) for i in range(m - 1, 0, -1)]
    # up the 4/5 ladder from (4,0), down the 1/2 ladder to (2,1)
    up_b = _zigzag(4, 5, 4, top)
    down_b = [(2 if i % 2 == 1 else 1, i) for i in range(m - 1, 0, -1)]
    paths = [
        [(2, 0), (3, 1), (4, 0)],
        [(2, 0), (1, 0), (2, 1)],
        [(2, 1), (3, 2), (4, 1)],
        [(4, 0), (5, 0), (4, 1)],
        up_a + ["w"] + down_a,
        up_b + ["w"] + down_b,
    ]
    return Fixture(f"path5_k5_myc{m}", FamilySpec("path", 5), m,
                   certificate_from_labels(myc, terminals, paths), "P_5 construction, m >= 3")


def cycle_k5_m2(n: int) -> Fixture:
    """K_5 in mu_2(C_n) for n >= 5 (cases n = 5, n = 6, n >= 7)."""
    if n < 5:
        raise InputError("the cycle construction needs n >= 5")
    myc = mycielskian(generate_family(FamilySpec("cycle", n)), 2)
    terminals = [(k, 0) for k in range(1, 6)]
    paths: list[list[Label]] = [
        [(1, 0), (2, 1), (3, 0)],
        [(2, 0), (3, 1), (4, 0)],
        [(3, 0), (4, 1), (5, 0)],
    ]
    if n == 5:
        paths += [
            [(1, 0), (5, 1), (4, 0)],
            [(2, 0), (1, 1), (5, 0)],
        ]
    elif n == 6:
        paths += [
            [(1, 0), (6, 0), (5, 1), (4, 0)],
            [(1, 0), (6, 1), (5, 0)],
            [(2, 0), (1, 1), (6, 0), (5, 0)],
        ]
    else:
        paths += [
            [(1, 0), (n, 1), "w", (5, 1), (4, 0)],
            [(1, 0)] + [(k, 0) for k in range(n, 4, -1)],
            [(2, 0), (1, 1), "w", (6, 1), (5, 0)],
        ]
    return Fixture(f"cycle{n}_k5_myc2", FamilySpec("cycle", n), 2,
                   certificate_from_labels(myc, terminals, paths), f"C_n construction, m = 2, n = {n}")


def builtin_fixtures() -> list[Fixture]:
    """Every fixture the package ships, rebuilt from the transcriptions above."""
    return ([appendix_k7(), appendix_k9()]
            + [path5_k5(m) for m in (3, 4, 5)]
            + [cycle_k5_m2(n) for n in (5, 6, 7, 8)])


def fixture_dir() -> Path:
    return Path(str(resources.files(__package__)))


@lru_cache(maxsize=None)
def load_fixtures() -> tuple[Fixture, ...]:
    out = []
    for path in sorted(fixture_dir().glob("*.json")):
        with open(path) as fh:
            out.append(Fixture.from_json(json.load(fh)))
    return tuple(out)


def load_fixture(name: str) -> Fixture:
    for fx in load_fixtures():
        if fx.name == name:
            return fx
    raise KeyError(name)


@lru_cache(maxsize=None)
def _hosts() -> tuple[tuple[Graph, ImmersionCertificate], ...]:
    return tuple((fx.host().graph, fx.certificate) for fx in load_fixtures())


def certificates_for(g: Graph) -> list[ImmersionCertificate]:
    """Shipped certificates whose host graph equals ``g`` vertex-for-vertex."""
    return [cert for host, cert in _hosts() if host == g]


def write_fixtures(directory: Path | None = None) -> list[Path]:
    directory = directory or fixture_dir()
    written = []
    for fx in builtin_fixtures():
        path = Path(directory) / f"{fx.name}.json"
        path.write_text(json.dumps(fx.to_json(), indent=1) + "\n")
        written.append(path)
    return written
