"""Command-line front end.

Input (file, ``-`` for stdin, or ``--ring``/``--ideal``)::

    # comments start with '#'
    ring x1..x5
    I = x1*x2*x3, x3*x4*x5, x2*x3*x4
    J = (x1^2, x2)

Grammar (EBNF)::

    input    = { line } ;
    line     = ring | binding | ideal | comment ;
    ring     = "ring" item { "," item } ;
    item     = name | name digits ".." name digits ;
    binding  = name "=" ideal ;
    ideal    = [ "(" ] term { "," term } [ ")" ] ;
    term     = "1" | factor { "*" factor } ;
    factor   = name [ "^" digits ] ;

``hypergraph``, ``splitting-check`` and ``syzygy`` take their input file
with ``-i`` because they have positional arguments of their own.

Ideals keep the order in which their generators are written; ``lq-check``
and ``--order`` refer to that order with 1-based positions.

Exit codes: 0 success, 2 parse error, 3 domain error, 4 resource cap.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass, field

from . import __version__
from .equification import (deequify, equify, lattice_embedding_check, lin_general, rooted_complex,
                           syzygy_redundant, syzygy_redundant_eq)
from .errors import MonolinError, ParseError, ResourceError
from .hypergraph import Hypergraph, from_ideal, linear_resolution_criterion
from .ideal import (ExponentBound, MonomialIdeal, alexander_dual, crop, crop_sequence,
                    is_equigenerated, parse_generator_list, radical)
from .lattice import LcmLattice
from .linearization import (BY_MONOMIAL, POSITIONAL, canonical_order, lin, radical_star_lin,
                            radical_star_lin_betti, radical_star_lin_order, retrieve_source, star_lin)
from .monomial import RingContext, render_monomial
from .oracle import betti_splitting_check, oracle_table
from .quotients import betti_from_quotients, colon_sequence, find_linear_quotient_order
from .squarefree import betti_closed_form, cluster_profile, pd_and_depth
from .table import BettiTable

EXIT_PARSE, EXIT_DOMAIN, EXIT_RESOURCE = 2, 3, 4


@dataclass
class Session:
    ring: RingContext | None = None
    written: dict = field(default_factory=dict)

    def ideal(self, name: str | None = None) -> MonomialIdeal:
        name, gens = self._pick(name)
        return MonomialIdeal(self.ring, gens)

    def sequence(self, name: str | None = None):
        return self._pick(name)[1]

    def _pick(self, name):
        if not self.written:
            raise ParseError("no ideal given")
        if name is None:
            name = next(iter(self.written))
        if name not in self.written:
            raise ParseError(f"no ideal named {name!r}; have {', '.join(self.written)}")
        return name, self.written[name]


def _roles_for(names_text: str, y_like: bool) -> dict:
    if not y_like:
        return {}
    ring = RingContext.parse(names_text)
    return {v: "y" for v in ring.variables if v.startswith("y") and (v[1:].isdigit() or v[1:2] == "[")}


def parse_session(text: str, y_like: bool = False) -> Session:
    s = Session()
    auto = 0
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        stripped = line.strip()
        if stripped.startswith("ring") and (len(stripped) == 4 or not stripped[4].isalnum()):
            s.ring = RingContext.parse(line, _roles_for(stripped[4:], y_like))
            continue
        if s.ring is None:
            raise ParseError("declare the ring before any ideal", raw, 0)
        if "=" in line:
            name, body = line.split("=", 1)
            name = name.strip()
            if not name.isidentifier():
                raise ParseError(f"bad ideal name {name!r}", raw, 0)
            if name in s.written:
                raise ParseError(f"ideal {name!r} defined twice", raw, 0)
            offset = len(name) + 1 + (len(line) - len(line.lstrip()))
            gens = parse_generator_list(" " * offset + body, s.ring)
        else:
            auto += 1
            name = "I" if auto == 1 else f"I{auto}"
            gens = parse_generator_list(line, s.ring)
        s.written[name] = gens
    return s


def _load(args) -> Session:
    y_like = getattr(args, "command", "") == "retrieve"
    if args.ideal is not None:
        if args.ring is None:
            raise ParseError("--ideal needs --ring")
        text = f"ring {args.ring}\nI = {args.ideal}\n"
    elif args.input in (None, "-"):
        text = sys.stdin.read()
    else:
        with open(args.input) as fh:
            text = fh.read()
    return parse_session(text, y_like)


def _show_ideal(I: MonomialIdeal, fmt: str, order=None) -> str:
    if fmt == "json":
        data = I.to_json()
        if order is not None:
            data["order"] = [list(g.exps) for g in order]
        return json.dumps(data, sort_keys=True)
    gens = order if order is not None else I.generators
    return "(" + ", ".join(render_monomial(g) for g in gens) + ")"


def _show_table(t: BettiTable, fmt: str) -> str:
    return json.dumps(t.to_json(), sort_keys=True) if fmt == "json" else t.render()


def _order_arg(text: str | None, m: int):
    if not text:
        return None
    try:
        idx = [int(t) - 1 for t in text.replace(" ", "").split(",")]
    except ValueError:
        raise ParseError("--order expects comma-separated positions", text, 0) from None
    return idx


def cmd_lin(args, S):
    I = S.ideal(args.name)
    build = {"lin": lin, "star-lin": star_lin}.get(args.command)
    yi = BY_MONOMIAL if args.by_monomial else POSITIONAL
    L = lin_general(I, y_indexing=yi) if args.command == "lin-general" else build(I, yi)
    if args.format == "json":
        return json.dumps(L.to_json(), sort_keys=True)
    return _show_ideal(L.ideal, "ascii", L.sequence)


def cmd_equify(args, S):
    return _show_ideal(equify(S.ideal(args.name)), args.format)


def cmd_deequify(args, S):
    I = S.ideal(args.name)
    z = args.z
    ring = RingContext(I.ring.variables, tuple("z" if v == z else r for v, r in zip(I.ring.variables, I.ring.roles)))
    J = MonomialIdeal(ring, (type(g)(ring, g.exps) for g in I.generators))
    return _show_ideal(deequify(J), args.format)


def _target(args, S):
    I = S.ideal(args.name)
    if args.of == "ideal":
        return I, None
    L = {"lin": lin, "star-lin": star_lin, "lin-general": lin_general}[args.of](I)
    return L.ideal, L


def cmd_betti(args, S):
    I = S.ideal(args.name)
    target, L = _target(args, S)
    methods = ["quotients", "closed-form", "oracle"] if args.method == "all" else [args.method]
    tables = {}
    for method in methods:
        if method == "oracle":
            tables[method] = oracle_table(target)
        elif method == "quotients":
            if L is not None:
                og = canonical_order(L)
            else:
                order = _order_arg(args.order, len(target))
                if order is not None:
                    og = colon_sequence(target, [S.sequence(args.name)[k] for k in order])
                else:
                    found = find_linear_quotient_order(target)
                    if not found:
                        if args.method == "all":
                            continue
                        raise MonolinError(f"no linear-quotient order ({found.status})")
                    og = colon_sequence(target, found.order)
            tables[method] = betti_from_quotients(og)
        elif method == "closed-form":
            if args.of == "star-lin":
                tables[method] = betti_closed_form(I)
            elif args.of == "radical-star-lin":
                tables[method] = radical_star_lin_betti(I)
            elif args.method == "all":
                continue
            else:
                raise MonolinError("closed-form Betti numbers are available for --of star-lin "
                                   "(squarefree input) and --of radical-star-lin")
    values = list(tables.values())
    if any(t != values[0] for t in values):
        lines = [f"{k}:\n{_show_table(t, 'ascii')}" for k, t in tables.items()]
        raise MonolinError("methods disagree\n" + "\n".join(lines))
    out = _show_table(values[0], args.format)
    if args.method == "all" and args.format == "ascii":
        out += f"\nmethods agree: {', '.join(tables)}"
    return out


def cmd_lq_check(args, S):
    I = S.ideal(args.name)
    seq = S.sequence(args.name)
    if args.search:
        found = find_linear_quotient_order(I)
        if not found:
            return f"linear quotients: {'no order exists' if found.status == 'none' else 'inconclusive'}"
        pos = {g: k for k, g in enumerate(seq)}
        order = [I.generators[k] for k in found.order]
        r = colon_sequence(I, order).r
        return (f"linear quotients: yes; order = {','.join(str(pos[g] + 1) for g in order)}; "
                f"r = {','.join(map(str, r))}")
    order = _order_arg(args.order, len(seq))
    gens = seq if order is None else [seq[k] for k in order]
    if len(set(gens)) != len(I) or set(gens) != set(I.generators):
        raise MonolinError("the written generators must be minimal and distinct, and --order a permutation")
    og = colon_sequence(I, gens)
    bad = next((k for k, c in enumerate(og.colon_gens) if any(g.degree != 1 for g in c)), None)
    if args.format == "json":
        return json.dumps({"linear_quotients": bad is None, "r": og.r,
                           "colons": [[render_monomial(g) for g in c] for c in og.colon_gens]})
    if bad is None:
        return f"linear quotients: yes; r = {','.join(map(str, og.r))}"
    colon = "(" + ", ".join(render_monomial(g) for g in og.colon_gens[bad]) + ")"
    return f"linear quotients: no; colon at position {bad + 1} is {colon}"


def cmd_radical(args, S):
    I = S.ideal(args.name)
    if args.star_lin:
        R = radical_star_lin(I)
        if args.format == "json":
            data = R.ideal.to_json()
            data.update(a=R.a, b=R.b, p=R.p, order=[list(g.exps) for g in R.sequence])
            return json.dumps(data, sort_keys=True)
        return f"{_show_ideal(R.ideal, 'ascii', R.sequence)}\na = {R.a}, b = {R.b}, p = {R.p}"
    return _show_ideal(radical(I), args.format)


def cmd_dual(args, S):
    return _show_ideal(alexander_dual(S.ideal(args.name)), args.format)


def cmd_crop(args, S):
    I = S.ideal(args.name)
    try:
        v = tuple(int(t) for t in args.bound.split(","))
    except ValueError:
        raise ParseError("--bound expects comma-separated integers", args.bound, 0) from None
    bound = ExponentBound(I.ring, v)
    return _show_ideal(crop(I, bound), args.format, crop_sequence(S.sequence(args.name), bound))


def cmd_clusters(args, S):
    I = S.ideal(args.name)
    P = cluster_profile(I)
    pd, depth = pd_and_depth(I)
    if args.format == "json":
        data = P.to_json()
        data.update(pd=pd, depth=depth)
        return json.dumps(data, sort_keys=True)
    lines = [f"n = {P.n}, d = {P.d}, m = {P.m}, N = {P.N}"]
    lines.append("C: " + (", ".join(f"C_{j} = {c}" for j, c in sorted(P.C.items())) or "none"))
    lines.append(f"pd(LIN) = {pd}, depth(R/LIN) = {depth}")
    for u, k in sorted(P.edges.items(), key=lambda t: t[0].exps, reverse=True):
        if k > 1:
            lines.append(f"  {render_monomial(u)}: {k}")
    return "\n".join(lines)


def cmd_lattice(args, S):
    I = S.ideal(args.name)
    if args.eq:
        I = equify(I)
    L = LcmLattice(I)
    if args.dot or args.format == "dot":
        return L.to_dot().rstrip("\n")
    if args.format == "json":
        return json.dumps({"nodes": [render_monomial(e) for e in L.elements], "covers": L.covers})
    out = f"nodes: {len(L)}, covers: {len(L.covers)}"
    if not args.eq and args.compare:
        rep = lattice_embedding_check(I)
        out += f"\nequified: nodes {rep.size_eq}; z=1 image is L_I: {'yes' if rep else 'no'}"
    return out


def _parse_edge(text: str):
    try:
        return frozenset(int(t) for t in text.replace(" ", "").split(","))
    except ValueError:
        raise ParseError("edges are comma-separated vertex numbers", text, 0) from None


def cmd_hypergraph(args, S):
    if args.edges_file:
        with open(args.edges_file) as fh:
            H = Hypergraph.from_text(fh.read())
    else:
        H = from_ideal(S.ideal(args.name))
    if args.action == "distance":
        if len(args.edge) != 2:
            raise ParseError("distance needs two edges, e.g. 1,2,3 2,3,4")
        d = H.distance(_parse_edge(args.edge[0]), _parse_edge(args.edge[1]))
        return f"distance: {d}"
    if args.action == "diam":
        return f"diameter: {H.diameter()}"
    if args.action == "dot":
        return H.adjacency_dot().rstrip("\n")
    c = linear_resolution_criterion(H)
    if args.format == "json":
        return json.dumps({"verdict": c.verdict.value, "reason": c.reason,
                           "diameter": None if c.diameter is None else str(c.diameter)})
    return f"criterion: {c.verdict.value}" + (f" ({c.reason})" if c.reason else f"; diameter = {c.diameter}")


def cmd_splitting(args, S):
    if args.lin:
        L = lin(S.ideal(args.name))
        I = L.ideal
        J = MonomialIdeal(I.ring, L.complete)
        K = MonomialIdeal(I.ring, [g.monomial for g in L.last])
    else:
        J, K = S.ideal(args.parts[0]), S.ideal(args.parts[1])
        I = J + K
    rep = betti_splitting_check(I, J, K)
    if args.format == "json":
        return json.dumps({"splitting": bool(rep), "I": rep.I.to_json(), "J": rep.J.to_json(),
                           "K": rep.K.to_json(), "J_cap_K": rep.JK.to_json(),
                           "mismatches": [list(t) for t in rep.mismatches]}, sort_keys=True)
    parts = []
    for label, t in (("I", rep.I), ("J", rep.J), ("K", rep.K), ("J cap K", rep.JK)):
        parts.append(f"{label}:\n{t.render()}")
    verdict = "yes" if rep else "no"
    parts.append(f"betti splitting: {verdict}")
    for i, j, have, want in rep.mismatches:
        parts.append(f"  beta_{i},{j}: {have} != {want}")
    return "\n".join(parts)


def cmd_retrieve(args, S):
    return _show_ideal(retrieve_source(S.ideal(args.name)), args.format)


def cmd_syzygy(args, S):
    seq = S.sequence(args.name)
    i, j = args.i - 1, args.j - 1
    a, b = syzygy_redundant(seq, i, j), syzygy_redundant_eq(seq, i, j)

    def say(p):
        return f"redundant (witness {p.witness + 1})" if p.redundant else "not redundant"
    return f"sigma_{args.i}{args.j}: I {say(a)}; I^eq {say(b)}"


def cmd_rooted(args, S):
    I = S.ideal(args.name)
    rc = rooted_complex(equify(I))
    return "rooted faces by size: " + ",".join(map(str, rc.f_vector()))


def cmd_selfcheck(args, S=None):
    from .ideal import MonomialIdeal as MI
    from .monomial import Monomial
    from .oracle import is_linear_resolution
    rng = random.Random(args.seed)
    failures = 0
    for trial in range(args.trials):
        n = rng.randint(2, 4)
        d = rng.randint(1, 3)
        ring = RingContext(tuple(f"x{i}" for i in range(1, n + 1)))
        gens = set()
        for _ in range(rng.randint(1, 3)):
            e = [0] * n
            for _ in range(d):
                e[rng.randrange(n)] += 1
            gens.add(Monomial(ring, tuple(e)))
        I = MI(ring, gens)
        for build in (lin, star_lin):
            L = build(I)
            og = canonical_order(L)
            ok = og.is_linear and betti_from_quotients(og) == oracle_table(L.ideal)
            if not ok:
                failures += 1
                print(f"FAIL {build.__name__} {I}")
    return f"selfcheck seed={args.seed}: {args.trials} ideals, {failures} failures"


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="monolin", description="Linearization and Betti numbers of monomial ideals")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_, positional_input=True):
        sp = sub.add_parser(name, help=help_)
        if positional_input:
            sp.add_argument("input", nargs="?", help="input file ('-' or omitted: stdin)")
        else:
            # the command has positionals of its own
            sp.add_argument("-i", "--input", help="input file ('-' or omitted: stdin)")
        sp.add_argument("--ring", help="ring declaration, e.g. x1..x5")
        sp.add_argument("--ideal", help="generators, e.g. 'x1*x2, x2*x3'")
        sp.add_argument("--name", help="which ideal of the input to use (default: the first)")
        sp.add_argument("--format", choices=["ascii", "json", "dot"], default="ascii")
        sp.set_defaults(func=func)
        return sp

    for name in ("lin", "star-lin", "lin-general"):
        sp = add(name, cmd_lin, f"{name} of the ideal in its canonical order")
        sp.add_argument("--by-monomial", action="store_true", help="name y-variables y[<generator>]")
    add("equify", cmd_equify, "equification f_j z^(d-d_j)")
    sp = add("deequify", cmd_deequify, "set z = 1")
    sp.add_argument("--z", default="z", help="name of the z variable")
    sp = add("betti", cmd_betti, "graded Betti table")
    sp.add_argument("--method", choices=["quotients", "closed-form", "oracle", "all"], default="oracle")
    sp.add_argument("--of", choices=["ideal", "lin", "star-lin", "lin-general", "radical-star-lin"], default="ideal")
    sp.add_argument("--order", help="1-based generator order for --method quotients")
    sp = add("lq-check", cmd_lq_check, "linear quotients along the written (or given) order")
    sp.add_argument("--order", help="1-based positions, e.g. 1,3,2")
    sp.add_argument("--search", action="store_true", help="search for a linear-quotient order")
    sp = add("radical", cmd_radical, "radical of the ideal")
    sp.add_argument("--star-lin", action="store_true", help="closed description of sqrt(LIN(I))")
    add("dual", cmd_dual, "Alexander dual of a squarefree ideal")
    sp = add("crop", cmd_crop, "generators with exponents <= the bound")
    sp.add_argument("--bound", required=True, help="comma-separated exponent bound")
    add("clusters", cmd_clusters, "(d-1)-edges, clusters, pd and depth of LIN")
    sp = add("lcm-lattice", cmd_lattice, "lcm-lattice summary or DOT")
    sp.add_argument("--dot", action="store_true")
    sp.add_argument("--eq", action="store_true", help="lattice of the equification")
    sp.add_argument("--compare", action="store_true", help="compare with the equified lattice")
    sp = add("hypergraph", cmd_hypergraph, "hypergraph of a squarefree ideal", positional_input=False)
    sp.add_argument("action", choices=["distance", "diam", "criterion", "dot"])
    sp.add_argument("edge", nargs="*", help="edges for distance, e.g. 1,2,3")
    sp.add_argument("--edges-file", help="hypergraph file: one edge per line")
    sp = add("splitting-check", cmd_splitting, "Betti splitting test for I = J + K", positional_input=False)
    sp.add_argument("parts", nargs="*", help="names of J and K in the input")
    sp.add_argument("--lin", action="store_true", help="split Lin(I) into complete and last part")
    add("retrieve", cmd_retrieve, "recover I from Lin(I) or LIN(I)")
    sp = add("syzygy", cmd_syzygy, "redundancy of sigma_ij for I and I^eq", positional_input=False)
    sp.add_argument("i", type=int)
    sp.add_argument("j", type=int)
    add("rooted", cmd_rooted, "rooted complex of the equification")
    sp = sub.add_parser("selfcheck", help="random cross-checks of Lin against the oracle")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--trials", type=int, default=20)
    sp.set_defaults(func=cmd_selfcheck, needs_input=False)
    return p


def run(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_PARSE if e.code else 0
    if args.command == "splitting-check" and not args.lin and len(args.parts) != 2:
        print("error: splitting-check needs two ideal names or --lin", file=sys.stderr)
        return EXIT_PARSE
    try:
        needs_input = getattr(args, "needs_input", True) and not getattr(args, "edges_file", None)
        S = _load(args) if needs_input else None
        out = args.func(args, S)
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except ResourceError as e:
        print(f"resource limit: {e}", file=sys.stderr)
        return EXIT_RESOURCE
    except MonolinError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
    print(out, file=stdout)
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
