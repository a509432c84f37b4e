"""Command-line front end.

Every subcommand reads a graph from ``--input``/``--graph`` (graph6 or JSON,
chosen by the first byte; ``-`` or no flag means stdin) or builds one inline
from ``--family``. Results go to stdout as JSON or graph6; diagnostics go to
stderr. Exit status: 0 success, 1 data error or negative verdict, 2 usage.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .certificate import ImmersionCertificate, realize_by_splitting, verify_certificate
from .dnp import check_dnp, ensure_dnp
from .errors import MycimmError
from .graph import FAMILY_KINDS, FamilySpec, Graph, degree_histogram, emit_graph6, generate_family, loads_graph
from .lift import lift_immersion
from .mycielski import mycielskian
from .solver import SearchBudget, default_budget, degree_upper_bound, explore_conjecture, immersion_number


class _DataError(Exception):
    pass


class _UsageError(Exception):
    pass


def _add_graph_args(p: argparse.ArgumentParser) -> None:
    src = p.add_argument_group("graph input")
    src.add_argument("--input", "--graph", dest="input", metavar="FILE",
                     help="graph6 or JSON graph file ('-' for stdin)")
    src.add_argument("--family", choices=FAMILY_KINDS, help="generate a standard family instead")
    src.add_argument("--n", type=int, help="vertex count (first side for complete_bipartite)")
    src.add_argument("--t", type=int, help="alias of --n, e.g. for complete graphs")
    src.add_argument("--n2", type=int, help="second side of complete_bipartite")
    src.add_argument("--jumps", help="comma-separated circulant jumps, e.g. 1,2")


def _add_budget_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--budget", type=int, help="search-node budget (default: $MYCIMM_BUDGET or 1000000)")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for the search (default 1)")


def _read_text(path: str | None) -> str:
    if path in (None, "-"):
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise _DataError(f"cannot read {path}: {exc.strerror}") from exc


def _graph(args) -> tuple[Graph, dict]:
    """The input graph, plus its JSON object when it came as JSON (for m/base_n)."""
    if args.family is not None:
        n = args.n if args.n is not None else args.t
        if n is None:
            raise _UsageError("--family needs --n (or --t)")
        jumps = tuple(int(j) for j in args.jumps.split(",")) if args.jumps else ()
        return generate_family(FamilySpec(args.family, n, args.n2, jumps)), {}
    text = _read_text(args.input)
    meta = json.loads(text) if text.lstrip().startswith("{") else {}
    return loads_graph(text), meta


def _budget(args) -> SearchBudget:
    return SearchBudget(args.budget) if args.budget is not None else default_budget()


def _load_cert(path: str) -> ImmersionCertificate:
    text = _read_text(path)
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise _DataError(f"invalid certificate JSON: {exc}") from exc
    if "certificate" in data and "terminals" not in data:
        data = data["certificate"]
    return ImmersionCertificate.from_json(data)


def _labeller(g: Graph, meta: dict):
    if g.labels is not None:
        return g.label
    if "m" in meta and "base_n" in meta:
        myc = mycielskian(Graph(int(meta["base_n"]), frozenset()), int(meta["m"]))
        return myc.label
    return str


def _labelled(cert: ImmersionCertificate, label) -> dict:
    return {
        "terminals": [label(x) for x in cert.terminals],
        "paths": {f"{a}-{b}": [label(x) for x in p] for (a, b), p in sorted(cert.paths.items())},
    }


def _emit(obj) -> None:
    print(json.dumps(obj))


def cmd_gen(args) -> int:
    g, _ = _graph(args)
    print(json.dumps(g.to_json()) if args.format == "json" else emit_graph6(g))
    return 0


def cmd_myc(args) -> int:
    g, _ = _graph(args)
    myc = mycielskian(g, args.m)
    print(json.dumps(myc.to_json()) if args.format == "json" else myc.to_graph6())
    return 0


def cmd_bounds(args) -> int:
    g, _ = _graph(args)
    if args.json:
        hist = {str(k): v for k, v in degree_histogram(g).items()}
        _emit({"degree_upper_bound": degree_upper_bound(g), "degree_histogram": hist})
    else:
        print(degree_upper_bound(g))
    return 0


def cmd_solve(args) -> int:
    g, _ = _graph(args)
    result = immersion_number(g, _budget(args), jobs=args.jobs, use_fixtures=not args.no_fixtures)
    _emit(result.to_json())
    return 0


def cmd_verify(args) -> int:
    g, meta = _graph(args)
    cert = _load_cert(args.cert)
    report = verify_certificate(g, cert)
    out = report.to_json()
    if report.valid and args.split:
        mg = realize_by_splitting(g, cert)
        out["split_edges"] = [[u, v, k] for (u, v), k in sorted(mg.edges.items())]
    if args.human:
        print(cert.render(_labeller(g, meta)))
        for v in report.violations:
            print(f"violation: {v.detail}")
        print("valid" if report.valid else "invalid")
    else:
        _emit(out)
    return 0 if report.valid else 1


def cmd_dnp(args) -> int:
    g, meta = _graph(args)
    cert = _load_cert(args.cert)
    if args.ensure:
        rebuilt, assign = ensure_dnp(g, cert)
        _emit({"certificate": rebuilt.to_json(), "assignment": assign.to_json()["assignment"],
               "rebuilt": rebuilt != cert})
        return 0
    assign = check_dnp(g, cert)
    _emit({"assignment": assign.to_json()["assignment"] if assign is not None else None})
    return 0 if assign is not None else 1


def cmd_lift(args) -> int:
    g, _ = _graph(args)
    cert = _load_cert(args.cert)
    myc, lifted = lift_immersion(g, cert, args.m)
    _emit({"m": args.m, "certificate": lifted.to_json(), "labels": _labelled(lifted, myc.label)})
    return 0


def cmd_conjecture(args) -> int:
    report = explore_conjecture(args.m, _budget(args), jobs=args.jobs)
    _emit(report.to_json())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mycimm", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a standard graph family")
    _add_graph_args(p)
    p.add_argument("--format", choices=("graph6", "json"), default="graph6")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("myc", help="build the m-Mycielskian of a graph")
    _add_graph_args(p)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--format", choices=("graph6", "json"), default="graph6")
    p.set_defaults(func=cmd_myc)

    p = sub.add_parser("bounds", help="degree-count upper bound on the immersion number")
    _add_graph_args(p)
    p.add_argument("--json", action="store_true", help="also print the degree histogram")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("solve", help="bound or compute the immersion number")
    _add_graph_args(p)
    _add_budget_args(p)
    p.add_argument("--no-fixtures", action="store_true", help="ignore shipped certificates")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check an immersion certificate")
    _add_graph_args(p)
    p.add_argument("--cert", required=True, metavar="FILE")
    p.add_argument("--split", action="store_true", help="also report the multigraph after split-offs")
    p.add_argument("--human", action="store_true", help="print a labelled rendering instead of JSON")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("dnp", help="distinct-neighbor assignment, or repair with --ensure")
    _add_graph_args(p)
    p.add_argument("--cert", required=True, metavar="FILE")
    p.add_argument("--ensure", action="store_true")
    p.set_defaults(func=cmd_dnp)

    p = sub.add_parser("lift", help="lift a K_t certificate to K_{t+1} in the m-Mycielskian")
    _add_graph_args(p)
    p.add_argument("--cert", required=True, metavar="FILE")
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("conjecture", help="bound im(mu_m(K_{m+1})) against 2m+1")
    p.add_argument("--m", type=int, required=True)
    _add_budget_args(p)
    p.set_defaults(func=cmd_conjecture)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "budget", None) is not None and args.budget < 1:
        parser.error("--budget must be >= 1")
    if getattr(args, "jobs", 1) < 1:
        parser.error("--jobs must be >= 1")
    try:
        return args.func(args)
    except _UsageError as exc:
        parser.error(str(exc))
    except (MycimmError, _DataError, json.JSONDecodeError) as exc:
        print(f"mycimm: error: {exc}", file=sys.stderr)
        return 1
    return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
