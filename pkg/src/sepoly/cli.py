"""Command-line front end.

Exit codes: 0 success, 1 a verify check failed, 2 usage or domain error,
3 a resource guard tripped.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import closed_forms, complex as cplx, ehrhart, facets, groebner, trees
from .errors import DomainError, ResourceLimitError
from .graph import Graph, complete_graph, make_complete_bipartite, make_complete_multipartite
from .poly import gamma_extract, is_gamma_positive
from .verify import PROFILES, verify_all

EXIT_OK, EXIT_CHECK_FAILED, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3

SHIFT_NOTE = (
    "NOTE: a b here are the shifted indices of K_{a+1,b+1}; "
    "pass --graph-parts to give the part sizes of K_{a,b} instead."
)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: {message}")


def _poly_json(p) -> dict:
    return {"coeffs": [str(c) for c in p.coeffs], "text": str(p)}


def _add_graph_args(p: argparse.ArgumentParser, required: bool = True) -> None:
    grp = p.add_mutually_exclusive_group(required=required)
    grp.add_argument("--complete", type=int, metavar="N", help="complete graph K_N")
    grp.add_argument("--bipartite", type=int, nargs=2, metavar=("A", "B"),
                     help="complete bipartite graph K_{A,B} (part sizes, not shifted)")
    grp.add_argument("--multipartite", metavar="A1,A2,...", help="complete multipartite graph")
    grp.add_argument("--edges", metavar="FILE", help="edge list ('n m' header) or JSON graph file")


def _graph_from_args(args) -> Graph | None:
    if args.complete is not None:
        return complete_graph(args.complete)
    if args.bipartite is not None:
        return make_complete_bipartite(*args.bipartite)
    if args.multipartite is not None:
        try:
            parts = [int(x) for x in args.multipartite.split(",") if x.strip()]
        except ValueError:
            raise _UsageError(f"bad part list {args.multipartite!r}") from None
        return make_complete_multipartite(parts)
    if args.edges is not None:
        try:
            with open(args.edges) as fh:
                return Graph.parse(fh.read())
        except OSError as exc:
            raise _UsageError(f"cannot read {args.edges}: {exc.strerror}") from None
        except (ValueError, KeyError) as exc:
            raise _UsageError(f"cannot parse {args.edges}: {exc}") from None
    return None


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


# ---------------------------------------------------------------------------
# subcommands


def cmd_facets(args) -> int:
    g = _graph_from_args(args)
    fs = facets.enumerate_facets(g)
    payload = {"n_vertices": g.n_vertices, "count": len(fs), "facets": [list(f.values) for f in fs]}
    _emit(args, payload, "\n".join(" ".join(map(str, f.values)) for f in fs))
    return EXIT_OK


def cmd_count_facets(args) -> int:
    g = _graph_from_args(args)
    count = len(facets.enumerate_facets(g))
    payload: dict = {"count": count}
    if args.bipartite is not None:
        payload["formula"] = facets.count_facets_bipartite(*args.bipartite)
    elif args.multipartite is not None and g.parts is not None and len(g.parts) >= 3:
        payload["formula"] = facets.count_facets_multipartite(g.parts)
    _emit(args, payload, str(count))
    return EXIT_OK


def cmd_ehrhart(args) -> int:
    g = _graph_from_args(args)
    n_max = g.n_vertices - 1 if args.n_max is None else args.n_max
    if n_max < 0:
        raise _UsageError("--n-max must be non-negative")
    counts = ehrhart.ehrhart_counts(g, n_max, method=args.method)
    _emit(args, {"counts": counts}, "\n".join(f"{n} {c}" for n, c in enumerate(counts)))
    return EXIT_OK


def _indices(args) -> tuple[int, int]:
    if len(args.indices) != 2:
        raise _UsageError("expected two indices a b")
    a, b = args.indices
    if args.graph_parts:
        a, b = a - 1, b - 1
    if a < 0 or b < 0:
        raise _UsageError("indices out of range" + (" (part sizes must be >= 1)" if args.graph_parts else ""))
    return a, b


def cmd_hstar(args) -> int:
    g = _graph_from_args(args)
    if g is not None:
        if args.indices:
            raise _UsageError("give either a graph or indices a b, not both")
        h = ehrhart.hstar_via_interpolation(g)
        _emit(args, {"method": "ehrhart", "hstar": _poly_json(h)}, str(h))
        return EXIT_OK
    a, b = _indices(args)
    method = args.method or "closed"
    fn = {
        "closed": closed_forms.hstar_closed,
        "double-sum": closed_forms.hstar_double_sum,
        "colorings": closed_forms.hstar_via_colorings,
        "trees": trees.hstar_via_trees,
        "ehrhart": ehrhart.hstar_bipartite_interpolated,
    }[method]
    h = fn(a, b)
    _emit(args, {"a": a, "b": b, "method": method, "hstar": _poly_json(h)}, str(h))
    return EXIT_OK


def cmd_gamma(args) -> int:
    g = _graph_from_args(args)
    if g is not None:
        if args.indices:
            raise _UsageError("give either a graph or indices a b, not both")
        h = ehrhart.hstar_via_interpolation(g)
        d = g.n_vertices - 1
    else:
        a, b = _indices(args)
        h = closed_forms.hstar_closed(a, b)
        d = a + b + 1
    gamma = gamma_extract(h, d)
    if gamma is None:
        _emit(args, {"hstar": _poly_json(h), "gamma": None, "gamma_positive": False}, "no gamma expansion")
        return EXIT_OK
    payload = {"hstar": _poly_json(h), "gamma": _poly_json(gamma), "gamma_positive": is_gamma_positive(gamma)}
    _emit(args, payload, str(gamma))
    return EXIT_OK


def cmd_trees(args) -> int:
    a, b = _indices(args)
    ts = trees.enumerate_T(a, b)
    hist: dict[int, int] = {}
    for t in ts:
        k = trees.ingoing_count(t)
        hist[k] = hist.get(k, 0) + 1
    histogram = [hist.get(k, 0) for k in range(max(hist) + 1)]
    payload: dict = {"a": a, "b": b, "count": len(ts), "histogram": histogram}
    lines = [f"trees: {len(ts)}", "ingoing histogram: " + " ".join(map(str, histogram))]
    if args.list:
        payload["trees"] = [dict(t.to_json(), ingoing=trees.ingoing_count(t)) for t in ts]
        lines += [f"{trees.ingoing_count(t)}  " + " ".join(t.arrows()) for t in ts]
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_groebner(args) -> int:
    if args.initial_terms is not None:
        a, b = args.initial_terms
        terms = groebner.bipartite_initial_terms(a, b)
        names = [f"{groebner.variable_name(p)}*{groebner.variable_name(q)}" for p, q in terms]
        payload: dict = {"a": a, "b": b, "initial_terms": [[list(p), list(q)] for p, q in terms]}
        if args.verify is not None:
            rep = groebner.verify_bipartite_initial_terms(a, b, args.verify)
            payload["verify"] = rep.to_json()
            names.append(f"verified to degree {args.verify}: {'yes' if rep else 'no: ' + rep.message}")
        _emit(args, payload, "\n".join(names))
        return EXIT_OK if args.verify is None or rep else EXIT_CHECK_FAILED
    g = _graph_from_args(args)
    if g is None:
        raise _UsageError("groebner needs a graph or --initial-terms A B")
    basis = groebner.generate_gb(g)
    payload = {"binomials": [b.to_json() for b in basis]}
    lines = [str(b) for b in basis]
    status = EXIT_OK
    if args.verify is not None:
        rep = groebner.verify_gb_divisibility(g, basis, args.verify)
        payload["verify"] = rep.to_json()
        lines.append(f"verified to degree {args.verify}: {'yes' if rep else 'no: ' + rep.message}")
        status = EXIT_OK if rep else EXIT_CHECK_FAILED
    _emit(args, payload, "\n".join(lines))
    return status


def cmd_complex(args) -> int:
    a, b = args.indices
    c = cplx.build_nevo_complex(a, b)
    fp = cplx.f_polynomial(c)
    balanced = cplx.check_balanced(c)
    payload = {
        "a": a,
        "b": b,
        "n_vertices": c.n_vertices,
        "dimension": c.dimension(),
        "f_polynomial": _poly_json(fp),
        "balanced": balanced,
        "gamma": _poly_json(closed_forms.gamma_closed(a, b)),
    }
    text = f"f-polynomial: {fp}\ndimension: {c.dimension()}\nbalanced: {'yes' if balanced else 'no'}"
    _emit(args, payload, text)
    return EXIT_OK


def cmd_verify(args) -> int:
    rep = verify_all(args.amax, args.bmax, args.profile)
    if args.json:
        print(rep.dumps())
    else:
        print(rep.render())
    return EXIT_OK if rep.ok else EXIT_CHECK_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="sepoly", description="Symmetric edge polytopes of graphs: facets, h*, gamma, trees.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_text, graph: str | None = None, epilog: str | None = None):
        p = sub.add_parser(name, help=help_text, description=help_text, epilog=epilog)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        if graph is not None:
            _add_graph_args(p, required=graph == "required")
        p.set_defaults(func=func)
        return p

    add("facets", cmd_facets, "list facet-defining labellings", graph="required")
    add("count-facets", cmd_count_facets, "number of facets", graph="required")
    p = add("ehrhart", cmd_ehrhart, "lattice-point counts of the dilates", graph="required")
    p.add_argument("--n-max", type=int, help="largest dilation (default: dimension)")
    p.add_argument("--method", choices=["auto", "bipartite", "generic"], default="auto")

    p = add("hstar", cmd_hstar, "h*-polynomial, of a graph or of K_{a+1,b+1}", graph="optional", epilog=SHIFT_NOTE)
    m = p.add_mutually_exclusive_group()
    for flag in ("closed", "colorings", "double-sum", "trees", "ehrhart"):
        m.add_argument(f"--{flag}", dest="method", action="store_const", const=flag)
    p.add_argument("indices", type=int, nargs="*", metavar="a b", help="shifted indices (see note)")
    p.add_argument("--graph-parts", action="store_true", help="read a b as the part sizes of K_{a,b}")

    p = add("gamma", cmd_gamma, "gamma-vector of h*", graph="optional", epilog=SHIFT_NOTE)
    p.add_argument("indices", type=int, nargs="*", metavar="a b")
    p.add_argument("--graph-parts", action="store_true")

    p = add("trees", cmd_trees, "directed spanning trees of the triangulation of K_{a+1,b+1}", epilog=SHIFT_NOTE)
    p.add_argument("indices", type=int, nargs=2, metavar="N")
    p.add_argument("--graph-parts", action="store_true")
    p.add_argument("--list", action="store_true", help="print every tree as arrows")

    p = add("groebner", cmd_groebner, "Groebner basis binomials of the toric ideal", graph="optional")
    p.add_argument("--initial-terms", type=int, nargs=2, metavar=("A", "B"),
                   help="quadratic initial terms for K_{A,B} (part sizes)")
    p.add_argument("--verify", type=int, metavar="DEGREE", help="fibre check up to this degree")

    p = add("complex", cmd_complex, "balanced flag complex with f-polynomial gamma_{a,b}")
    p.add_argument("indices", type=int, nargs=2, metavar="N")

    p = add("verify", cmd_verify, "cross-validate all pipelines")
    p.add_argument("--amax", type=int, required=True)
    p.add_argument("--bmax", type=int, required=True)
    p.add_argument("--profile", choices=sorted(PROFILES), default="fast")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (DomainError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
