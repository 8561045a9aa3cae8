"""Command-line interface, JSON file formats and DOT output.

Graph files store the two permutations as arrays over half-edge ids, one
length per edge (keyed by edge id, the rank of the edge's smaller half-edge)
as a ``"num/den"`` string, the P-vertices by vertex id, and sigma as pairs of
vertex ids. Vertex ids number the cycles of ``next_at_vertex`` by their least
half-edge. Output is canonical: sorted keys, fractions in lowest terms.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from fractions import Fraction

from .forward import analyze
from .horizontal import HorizontalClass, component_count
from .inverse import ClassMismatch, ClosedManifold, Infeasible, ReducibleClass, realize_tat
from .ribbon import RibbonGraph, ValidationError, validate
from .seifert import (BadPair, NonIntegralEuler, NotCoprime, NotNormalized, NotStarShaped,
                      PlumbingGraph, fibering_from_plumbing)
from .tat import check_tat

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT = 0, 1, 2


class InputError(ValueError):
    """The input file or arguments are malformed."""


# -- serialization ------------------------------------------------------------

def fraction_text(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def _fraction(s) -> Fraction:
    if isinstance(s, bool) or not isinstance(s, (str, int)):
        raise InputError(f"length {s!r} is not a 'num/den' string")
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad length {s!r}") from exc


def _int_list(obj, key: str) -> list[int]:
    v = obj.get(key)
    if not isinstance(v, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in v):
        raise InputError(f"'{key}' must be a list of integers")
    return v


def graph_to_json(g: RibbonGraph) -> dict:
    vi = g.vertex_index()
    return {
        "half_edges": g.num_half_edges,
        "opposite": list(g.opposite),
        "next_at_vertex": list(g.next_at_vertex),
        "lengths": {str(i): fraction_text(g.lengths[h]) for i, h in enumerate(g.edges())},
        "P": sorted(vi[h] for h in g.jump),
        "sigma": sorted([vi[h], vi[t]] for h, t in g.jump.items()),
    }


def graph_from_json(obj) -> RibbonGraph:
    if not isinstance(obj, dict):
        raise InputError("graph file must hold a JSON object")
    missing = {"half_edges", "opposite", "next_at_vertex", "lengths"} - set(obj)
    if missing:
        raise InputError(f"graph file lacks {sorted(missing)}")
    n = obj["half_edges"]
    opp = _int_list(obj, "opposite")
    nxt = _int_list(obj, "next_at_vertex")
    for name, perm in (("opposite", opp), ("next_at_vertex", nxt)):
        if sorted(perm) != list(range(n)):
            raise InputError(f"'{name}' is not a permutation of 0..{n - 1}")
    if any(opp[h] == h or opp[opp[h]] != h for h in range(n)):
        raise InputError("'opposite' is not a fixed-point-free involution")
    edges = [h for h in range(n) if h < opp[h]]
    raw = obj["lengths"]
    if not isinstance(raw, dict) or set(raw) != {str(i) for i in range(len(edges))}:
        raise InputError(f"'lengths' must have one entry for each edge id 0..{len(edges) - 1}")
    lens = [Fraction(0)] * n
    for i, h in enumerate(edges):
        lens[h] = lens[opp[h]] = _fraction(raw[str(i)])

    probe = RibbonGraph(tuple(opp), tuple(nxt), tuple(lens))
    verts = probe.vertices()
    p_ids = _int_list(obj, "P") if "P" in obj else []
    pairs = obj.get("sigma", [])
    if not isinstance(pairs, list) or not all(isinstance(p, list) and len(p) == 2 for p in pairs):
        raise InputError("'sigma' must be a list of [from, to] pairs")

    def half_edge(v) -> int:
        if not isinstance(v, int) or not 0 <= v < len(verts):
            raise InputError(f"vertex id {v!r} out of range")
        if len(verts[v]) != 1:
            raise InputError(f"P-vertex {v} is not univalent")
        return verts[v][0]

    jump = {}
    for a, b in pairs:
        if a not in p_ids or b not in p_ids:
            raise InputError(f"sigma pair {[a, b]} leaves P")
        jump[half_edge(a)] = half_edge(b)
    if set(jump) != {half_edge(v) for v in p_ids}:
        raise InputError("sigma must be defined on every P-vertex")
    g = RibbonGraph(tuple(opp), tuple(nxt), tuple(lens), jump)
    validate(g)
    return g


def plumbing_to_json(p: PlumbingGraph) -> dict:
    out = {"central": {"e": p.e, "g": p.g}, "bamboos": [list(b) for b in p.bamboos], "arrows": p.arrows}
    if p.arrow_bamboos is not None:
        out["arrow_bamboos"] = [list(b) for b in p.arrow_bamboos]
    return out


def plumbing_from_json(obj) -> PlumbingGraph:
    if isinstance(obj, dict) and "plumbing" in obj:
        obj = obj["plumbing"]
    if not isinstance(obj, dict) or not isinstance(obj.get("central"), dict):
        raise InputError("plumbing file needs a 'central' object")
    c = obj["central"]
    e, g, arrows = c.get("e"), c.get("g", 0), obj.get("arrows", 0)
    if not all(isinstance(x, int) for x in (e, g, arrows)):
        raise InputError("'e', 'g' and 'arrows' must be integers")
    bamboos = obj.get("bamboos", [])
    arrow_bamboos = obj.get("arrow_bamboos")
    for bam in bamboos + (arrow_bamboos or []):
        if not isinstance(bam, list) or not all(isinstance(x, int) for x in bam):
            raise InputError("bamboos must be lists of integer weights")
    try:
        return PlumbingGraph(e, g, [list(b) for b in bamboos], arrows,
                             None if arrow_bamboos is None else [list(b) for b in arrow_bamboos])
    except NotStarShaped as exc:
        raise InputError(str(exc)) from exc


def class_from_text(text: str) -> HorizontalClass:
    """Parse ``"p1,...,p_mu,q"``."""
    try:
        nums = [int(x) for x in text.split(",")]
    except ValueError as exc:
        raise InputError(f"class {text!r} must be comma-separated integers") from exc
    if nums[-1] < 1:
        raise InputError("q must be positive")
    return HorizontalClass(nums[-1], tuple(nums[:-1]))


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


# -- DOT ------------------------------------------------------------------------

def graph_to_dot(g: RibbonGraph) -> str:
    vi = g.vertex_index()
    verts = g.vertices()
    lines = ["graph ribbon {"]
    for i, cyc in enumerate(verts):
        if cyc[0] in g.jump:
            lines.append(f'  v{i} [shape=box, label="P{i}"];')
        else:
            lines.append(f'  v{i} [label="{i}\\n(' + " ".join(map(str, cyc)) + ')"];')
    for i, h in enumerate(g.edges()):
        lines.append(f'  v{vi[h]} -- v{vi[g.opposite[h]]} [label="e{i}: {fraction_text(g.lengths[h])}"];')
    for h, t in sorted(g.jump.items()):
        lines.append(f"  v{vi[h]} -- v{vi[t]} [style=dashed, dir=forward];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def plumbing_to_dot(p: PlumbingGraph) -> str:
    lines = ["graph plumbing {", f'  c [label="{p.e}", xlabel="[{p.g}]"];']
    for i, bam in enumerate(p.bamboos):
        prev = "c"
        for j, w in enumerate(bam):
            node = f"b{i}_{j}"
            lines.append(f'  {node} [label="{w}"];')
            lines.append(f"  {prev} -- {node};")
            prev = node
    chains = p.arrow_bamboos if p.arrow_bamboos is not None else [[] for _ in range(p.arrows)]
    for i, bam in enumerate(chains):
        prev = "c"
        for j, w in enumerate(bam):
            node = f"a{i}_{j}"
            lines.append(f'  {node} [label="{w}"];')
            lines.append(f"  {prev} -- {node};")
            prev = node
        lines.append(f'  arrow{i} [shape=point, label=""];')
        lines.append(f"  {prev} -- arrow{i} [dir=forward];")
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- commands -------------------------------------------------------------------

def _load(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: JSON parse error: {exc}") from exc


def _emit(obj, args) -> None:
    text = dumps(obj)
    if getattr(args, "json_out", None):
        with open(args.json_out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_check(args) -> int:
    g = graph_from_json(_load(args.graph))
    witness = check_tat(g)
    if witness is not None:
        _emit({"tat": False, "witness": {"half_edge": witness.half_edge,
                                         "offset": fraction_text(witness.offset)}}, args)
        return EXIT_NEGATIVE
    a = analyze(g)
    _emit({
        "tat": True,
        "order": a.order,
        "branch": [{"k": b.k, "p": b.p} for b in a.branch],
        "rotations": [{"orbit_size": r.orbit_size, "rotation": fraction_text(r.signed),
                       "walk_rotation": fraction_text(r.walk_rotation)} for r in a.boundary],
    }, args)
    return EXIT_OK


def cmd_tat2seifert(args) -> int:
    g = graph_from_json(_load(args.graph))
    witness = check_tat(g)
    if witness is not None:
        print(f"not tete-a-tete: walks from half-edge {witness.half_edge} at offset "
              f"{fraction_text(witness.offset)} disagree", file=sys.stderr)
        return EXIT_NEGATIVE
    a = analyze(g)
    _emit({"plumbing": plumbing_to_json(a.plumbing), "class": a.horizontal.to_json()}, args)
    return EXIT_OK


def cmd_seifert2tat(args) -> int:
    raw = _load(args.plumbing)
    plumb = plumbing_from_json(raw)
    if args.cls is not None:
        h = class_from_text(args.cls)
    elif isinstance(raw, dict) and isinstance(raw.get("class"), dict):
        h = HorizontalClass(raw["class"]["q"], tuple(raw["class"]["p"]))
    else:
        raise InputError("a horizontal class is required (--class p1,...,q)")
    if component_count(h) > 1:
        print(f"warning: class {','.join(map(str, h.p + (h.q,)))} has {component_count(h)} "
              f"components; building the irreducible part", file=sys.stderr)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        res = realize_tat(fibering_from_plumbing(plumb), h, copies=True)
    if res.copies > 1:
        print(f"copies: {res.copies}", file=sys.stderr)
    obj = graph_to_json(res.graph)
    if args.json_out:
        _emit(obj, args)
    if args.dot:
        sys.stdout.write(graph_to_dot(res.graph))
    elif not args.json_out:
        _emit(obj, args)
    return EXIT_OK


def cmd_dot(args) -> int:
    raw = _load(args.file)
    if isinstance(raw, dict) and "opposite" in raw:
        sys.stdout.write(graph_to_dot(graph_from_json(raw)))
    else:
        sys.stdout.write(plumbing_to_dot(plumbing_from_json(raw)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tatseifert",
                                     description="Tete-a-tete graphs and Seifert fiberings.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="test the tete-a-tete property of a graph file")
    p.add_argument("graph")
    p.add_argument("--json-out", metavar="PATH")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("tat2seifert", help="plumbing graph and horizontal class of a tete-a-tete graph")
    p.add_argument("graph")
    p.add_argument("--json-out", metavar="PATH")
    p.set_defaults(func=cmd_tat2seifert)

    p = sub.add_parser("seifert2tat", help="tete-a-tete graph realizing a plumbing graph and class")
    p.add_argument("plumbing")
    p.add_argument("--class", dest="cls", metavar="P1,...,Q")
    p.add_argument("--dot", action="store_true", help="print DOT instead of JSON")
    p.add_argument("--json-out", metavar="PATH")
    p.set_defaults(func=cmd_seifert2tat)

    p = sub.add_parser("dot", help="DOT rendering of a graph or plumbing file")
    p.add_argument("file")
    p.set_defaults(func=cmd_dot)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, ValidationError, ClassMismatch, ClosedManifold, NonIntegralEuler,
            BadPair, NotCoprime, NotNormalized, NotStarShaped) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (Infeasible, ReducibleClass) as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_NEGATIVE


if __name__ == "__main__":
    sys.exit(main())
