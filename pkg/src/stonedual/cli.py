"""Command line front end.

One subcommand family per module: poly (polycyclic elements), mpc (prefix
codes), graph (graph inverse semigroup elements), finite (multiplication
tables), thompson (Cuntz monoid units as tree pairs), selftest (seeded
randomized cross-checks).  Results print as stable human text, or as JSON
lines with --json, one record per result so long enumerations stream.  Exit
codes: 0 success, 1 domain error with a diagnostic on stderr, 2 usage error.
Table sizes are capped by the STONEDUAL_MAX_ELEMENTS environment variable
(default 2000).
"""

import argparse
import json
import random
import sys

from . import duality, filtercomp, finitesgp, graphisg
from . import polycyclic as pc
from . import thompson as th
from . import words as wd
from .finitesgp import MulTable, _boolean


def _b(v):
    return "true" if v else "false"


def _read(path):
    with open(path) as handle:
        return handle.read()


# ---------------------------------------------------------------------------
# subcommand handlers: each returns (json records, human lines)


def cmd_poly(args):
    n = args.n
    a = pc.parse_poly(args.a, n)
    if args.sub == "arrow":
        B = [pc.parse_poly(t, n) for t in args.b.split(",")]
        val = pc.lenz_arrow(a, B)
        return [{"op": "poly.arrow", "result": val}], [_b(val)]
    b = pc.parse_poly(args.b, n)
    if args.sub == "mul":
        out = pc.format_poly(pc.poly_mul(a, b))
        return [{"op": "poly.mul", "result": out}], [out]
    if args.sub == "meet":
        out = pc.format_poly(pc.poly_meet(a, b))
        return [{"op": "poly.meet", "result": out}], [out]
    val = pc.poly_leq(a, b)
    return [{"op": "poly.leq", "result": val}], [_b(val)]


def cmd_mpc(args):
    n, r = args.n, args.r
    code = [wd.parse_rooted(t, n, r) for t in args.code.split(",")]
    if args.sub == "check":
        val = wd.is_rooted_maximal_prefix_code(code, n, r)
        return (
            [{"op": "mpc.check", "result": val}],
            ["maximal prefix code: %s" % _b(val)],
        )
    records, lines = [], []
    for root in range(1, r + 1):
        ws = [wd.Word(n, w.letters) for w in code if w.root == root]
        total = wd.kraft_sum(ws, n)
        records.append({"op": "mpc.kraft", "root": root, "sum": str(total)})
        if r == 1:
            lines.append("kraft sum: %s" % total)
        else:
            lines.append("root %d: %s" % (root, total))
    return records, lines


def cmd_graph(args):
    graph = wd.DirectedGraph.from_text(_read(args.graph))
    if args.sub == "analyze":
        rep = graphisg.semilattice_predicates(graph)
        lines = []
        for key, val in rep.items():
            if isinstance(val, list):
                lines.append("%s: %s" % (key, ",".join(val) if val else "none"))
            elif isinstance(val, bool):
                lines.append("%s: %s" % (key, _b(val)))
            else:
                lines.append("%s: %s" % (key, val))
        rep["op"] = "graph.analyze"
        return [rep], lines
    a = graphisg.parse_gisg(args.a, graph)
    if args.sub == "arrow":
        B = [graphisg.parse_gisg(t, graph) for t in args.b.split(",")]
        val = graphisg.gisg_lenz_arrow(a, B)
        return [{"op": "graph.arrow", "result": val}], [_b(val)]
    b = graphisg.parse_gisg(args.b, graph)
    out = graphisg.format_gisg(graphisg.gisg_mul(a, b))
    return [{"op": "graph.mul", "result": out}], [out]


def cmd_finite(args):
    S = MulTable.from_text(_read(args.table))
    sub = args.sub
    if sub == "validate":
        ident = S.find_identity()
        rec = {
            "op": "finite.validate",
            "elements": S.m,
            "zero": S.name(S.zero),
            "identity": None if ident is None else S.name(ident),
        }
        return [rec], ["valid table: %d elements" % S.m]
    if sub == "predicates":
        rep = finitesgp.predicates(S)
        lines = ["%s: %s" % (k, _b(v)) for k, v in rep.items()]
        rec = {"op": "finite.predicates"}
        rec.update(rep)
        return [rec], lines
    if sub == "congfree":
        val = finitesgp.is_congruence_free(S)
        return [{"op": "finite.congfree", "result": val}], [
            "congruence-free: %s" % _b(val)
        ]
    if sub == "simplifying":
        val = finitesgp.is_zero_simplifying(S)
        return [{"op": "finite.simplifying", "result": val}], [
            "0-simplifying: %s" % _b(val)
        ]
    if sub == "complete":
        comp = filtercomp.distributive_completion(S)
        rep = filtercomp.booleanization_report(S)
        head = {
            "op": "finite.complete",
            "size": comp.D.m,
            "boolean": _boolean(comp.D),
        }
        head.update(rep)
        lines = [
            "completion size: %d" % comp.D.m,
            "boolean: %s" % _b(head["boolean"]),
        ]
        records = [head]
        for i in range(comp.D.m):
            records.append({"class": i, "name": comp.D.names[i]})
            lines.append("class %d: %s" % (i, comp.D.names[i]))
        if args.dump:
            head["text"] = comp.D.to_text()
            lines.extend(comp.D.to_text().splitlines())
        return records, lines
    if sub == "dualize":
        G = duality.ultrafilter_groupoid(S)
        ok, _ = duality.duality_roundtrip(S)
        rec = {
            "op": "finite.dualize",
            "objects": len(G.objects),
            "arrows": G.m,
            "roundtrip": ok,
        }
        lines = [
            "objects: %d" % len(G.objects),
            "arrows: %d" % G.m,
            "roundtrip: %s" % _b(ok),
        ]
        if args.dump:
            rec["text"] = G.to_text()
            lines.extend(G.to_text().splitlines())
        return [rec], lines
    if sub == "classify":
        k, extra = duality.classify_symmetric(S)
        if k is None:
            return (
                [{"op": "finite.classify", "result": None, "reason": extra}],
                ["not symmetric: %s" % extra],
            )
        return [{"op": "finite.classify", "result": "I(%d)" % k}], ["I(%d)" % k]
    ideals = sorted(
        finitesgp.tightly_closed_ideals(S), key=lambda t: (len(t), sorted(t))
    )
    records = [{"op": "finite.ideals", "count": len(ideals)}]
    lines = ["tightly closed ideals: %d" % len(ideals)]
    for ideal in ideals:
        names = [S.name(s) for s in sorted(ideal)]
        records.append({"ideal": names})
        lines.append("ideal {%s}" % ",".join(names))
    return records, lines


def cmd_thompson(args):
    n, r = args.n, args.r
    if args.sub == "fromunit":
        x = th.parse_cuntz(args.a, n, r)
        out = th.format_tree_pair(th.tp_from_unit(x))
        return [{"op": "thompson.fromunit", "result": out}], [out]
    g = th.parse_tree_pair(args.a, n, r)
    if args.sub == "tounit":
        out = th.format_cuntz(th.tp_to_unit(g))
        return [{"op": "thompson.tounit", "result": out}], [out]
    if args.sub == "inv":
        out = th.format_tree_pair(th.tp_inv(g))
        return [{"op": "thompson.inv", "result": out}], [out]
    if args.sub == "reduce":
        out = th.format_tree_pair(th.tp_reduce(g))
        return [{"op": "thompson.reduce", "result": out}], [out]
    h = th.parse_tree_pair(args.b, n, r)
    if args.sub == "eq":
        val = th.tp_eq(g, h)
        return [{"op": "thompson.eq", "result": val}], [_b(val)]
    out = th.format_tree_pair(th.tp_mul(g, h))
    return [{"op": "thompson.mul", "result": out}], [out]


# ---------------------------------------------------------------------------
# selftest suites: seeded randomized cross-checks between modules


def _selftest_words(rng):
    checks = 0
    for _ in range(50):
        n = rng.randrange(2, 4)
        code = [()]
        for _ in range(rng.randrange(1, 5)):
            w = code.pop(rng.randrange(len(code)))
            code.extend(w + (k,) for k in range(n))
        ws = [wd.Word(n, t) for t in code]
        assert wd.is_maximal_prefix_code(ws, n)
        assert wd.kraft_sum(ws, n) == 1
        checks += 2
        if len(ws) > 1:
            ws.pop(rng.randrange(len(ws)))
            assert not wd.is_maximal_prefix_code(ws, n)
            assert wd.kraft_sum(ws, n) < 1
            checks += 2
    return checks


def _random_poly(n, rng):
    y = tuple(rng.randrange(n) for _ in range(rng.randrange(0, 3)))
    x = tuple(rng.randrange(n) for _ in range(rng.randrange(0, 3)))
    return pc.poly(n, y, x)


def _selftest_poly(rng):
    checks = 0
    for _ in range(100):
        n = rng.randrange(2, 4)
        a, b, c = (_random_poly(n, rng) for _ in range(3))
        lhs = pc.poly_mul(pc.poly_mul(a, b), c)
        assert lhs == pc.poly_mul(a, pc.poly_mul(b, c))
        assert pc.poly_mul(pc.poly_mul(a, pc.poly_inv(a)), a) == a
        checks += 2
        if not pc.poly_is_zero(a):
            sibs = [
                pc.poly_mul(a, pc.poly(n, (k,), (k,))) for k in range(n)
            ]
            assert pc.lenz_arrow(a, [s for s in sibs if not pc.poly_is_zero(s)])
            checks += 1
    return checks


def _selftest_graph(rng):
    # on the one-vertex graph with n loops, path pairs are polycyclic elements
    checks = 0
    for _ in range(80):
        n = rng.randrange(2, 4)
        graph = wd.one_vertex_graph(n)

        def lift(m):
            return graphisg.gisg(
                wd.word_to_path(m.y, n, graph), wd.word_to_path(m.x, n, graph)
            )

        a, b = _random_poly(n, rng), _random_poly(n, rng)
        p = pc.poly_mul(a, b)
        q = graphisg.gisg_mul(lift(a), lift(b))
        if pc.poly_is_zero(p):
            assert graphisg.gisg_is_zero(q)
        else:
            assert q == lift(p)
        assert pc.poly_leq(a, b) == graphisg.gisg_leq(lift(a), lift(b))
        checks += 2
    return checks


def _relabeled(S, rng):
    perm = list(range(S.m))
    rng.shuffle(perm)
    T2 = [[0] * S.m for _ in range(S.m)]
    for a in range(S.m):
        for b in range(S.m):
            T2[perm[a]][perm[b]] = perm[int(S.T[a, b])]
    ident = S.find_identity()
    names = None
    if S.names is not None:
        names = [None] * S.m
        for i in range(S.m):
            names[perm[i]] = S.names[i]
    return MulTable(
        T2, perm[S.zero], None if ident is None else perm[ident], names
    )


def _selftest_finite(rng):
    checks = 0
    for k in (2, 3):
        S = finitesgp.symmetric_inverse_monoid(k)
        rep = finitesgp.predicates(S)
        assert rep["boolean"] and rep["fundamental"]
        got, _ = duality.classify_symmetric(S)
        assert got == k
        ok, _ = duality.duality_roundtrip(S)
        assert ok
        assert finitesgp.is_zero_simplifying(S)
        assert len(finitesgp.tightly_closed_ideals(S)) == 2
        checks += 6
        R = _relabeled(S, rng)
        got, _ = duality.classify_symmetric(R)
        assert got == k
        checks += 1
    return checks


def _random_tree_pair(n, r, rng, splits):
    dom = [wd.RootedWord(i, ()) for i in range(1, r + 1)]
    ran = [wd.RootedWord(i, ()) for i in range(1, r + 1)]
    for code in (dom, ran):
        for _ in range(splits):
            p = rng.randrange(len(code))
            w = code.pop(p)
            code.extend(wd.RootedWord(w.root, w.letters + (k,)) for k in range(n))
    perm = list(range(len(dom)))
    rng.shuffle(perm)
    return th.tree_pair(n, r, dom, ran, perm)


def _selftest_thompson(rng):
    checks = 0
    for n, r in ((2, 1), (2, 2), (3, 1)):
        ident = th.tp_identity(n, r)
        for _ in range(10):
            g = _random_tree_pair(n, r, rng, rng.randrange(1, 4))
            h = _random_tree_pair(n, r, rng, rng.randrange(1, 4))
            assert th.tp_mul(g, th.tp_inv(g)) == ident
            gh = th.tp_mul(g, h)
            assert th.tp_from_unit(
                th.cuntz_mul(th.tp_to_unit(g), th.tp_to_unit(h))
            ) == gh
            assert th.is_unit(th.tp_to_unit(gh))
            checks += 3
    return checks


SELFTESTS = {
    "words": _selftest_words,
    "poly": _selftest_poly,
    "graph": _selftest_graph,
    "finite": _selftest_finite,
    "thompson": _selftest_thompson,
}


def cmd_selftest(args):
    names = list(SELFTESTS) if args.suite == "all" else [args.suite]
    records, lines = [], []
    for name in names:
        checks = SELFTESTS[name](random.Random(args.seed))
        records.append(
            {
                "op": "selftest",
                "suite": name,
                "seed": args.seed,
                "checks": checks,
                "ok": True,
            }
        )
        lines.append("selftest %s: ok (%d checks)" % (name, checks))
    return records, lines


# ---------------------------------------------------------------------------
# argument parsing and dispatch


def build_parser():
    ap = argparse.ArgumentParser(
        prog="stonedual",
        description="exact computation in inverse semigroups and their duals",
    )
    sub = ap.add_subparsers(dest="cmd", required=True)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--json", action="store_true", help="emit JSON lines instead of text"
    )

    poly = sub.add_parser("poly", help="polycyclic monoid elements")
    psub = poly.add_subparsers(dest="sub", required=True)
    for name, bhelp in (
        ("mul", "second factor"),
        ("meet", "second element"),
        ("leq", "upper element"),
        ("arrow", "comma separated target set"),
    ):
        p = psub.add_parser(name, parents=[common])
        p.add_argument("-n", type=int, default=2, help="alphabet size")
        p.add_argument("a", help="element literal like ab.b^-1")
        p.add_argument("b", help=bhelp)

    mpc = sub.add_parser("mpc", help="maximal prefix codes")
    msub = mpc.add_subparsers(dest="sub", required=True)
    for name in ("check", "kraft"):
        p = msub.add_parser(name, parents=[common])
        p.add_argument("-n", type=int, default=2, help="alphabet size")
        p.add_argument("-r", type=int, default=1, help="number of roots")
        p.add_argument("code", help="comma separated words, r2:ab style roots")

    graph = sub.add_parser("graph", help="graph inverse semigroup elements")
    gsub = graph.add_subparsers(dest="sub", required=True)
    p = gsub.add_parser("analyze", parents=[common])
    p.add_argument("graph", help="graph file (vertex/edge lines)")
    for name, bhelp in (
        ("mul", "second factor"),
        ("arrow", "comma separated target set"),
    ):
        p = gsub.add_parser(name, parents=[common])
        p.add_argument("graph", help="graph file (vertex/edge lines)")
        p.add_argument("a", help="element literal like e.f/@v")
        p.add_argument("b", help=bhelp)

    finite = sub.add_parser("finite", help="finite inverse semigroup tables")
    fsub = finite.add_subparsers(dest="sub", required=True)
    for name in (
        "validate",
        "predicates",
        "congfree",
        "simplifying",
        "complete",
        "dualize",
        "classify",
        "ideals",
    ):
        p = fsub.add_parser(name, parents=[common])
        p.add_argument("table", help="table file (elements/zero header)")
        if name in ("complete", "dualize"):
            p.add_argument(
                "--dump", action="store_true", help="also print the full table"
            )

    tp = sub.add_parser("thompson", help="Cuntz monoid units as tree pairs")
    tsub = tp.add_subparsers(dest="sub", required=True)
    for name, two in (
        ("mul", True),
        ("eq", True),
        ("inv", False),
        ("reduce", False),
        ("fromunit", False),
        ("tounit", False),
    ):
        p = tsub.add_parser(name, parents=[common])
        p.add_argument("-n", type=int, default=2, help="alphabet size")
        p.add_argument("-r", type=int, default=1, help="number of roots")
        p.add_argument("a", help="tree pair literal, or part set for fromunit")
        if two:
            p.add_argument("b", help="second tree pair")

    st = sub.add_parser("selftest", parents=[common], help="seeded cross-checks")
    st.add_argument("suite", choices=sorted(SELFTESTS) + ["all"])
    st.add_argument("--seed", type=int, default=0, help="random seed")

    return ap


DISPATCH = {
    "poly": cmd_poly,
    "mpc": cmd_mpc,
    "graph": cmd_graph,
    "finite": cmd_finite,
    "thompson": cmd_thompson,
    "selftest": cmd_selftest,
}


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        records, lines = DISPATCH[args.cmd](args)
    except (ValueError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
    if args.json:
        for rec in records:
            print(json.dumps(rec, sort_keys=True))
    else:
        for line in lines:
            print(line)
    return 0


if __name__ == "__main__":
    sys.exit(main())
