"""Command-line interface.

Subcommands: gen (zoo lattices), upho (truncations), monoid (presentations),
invariants, core, upho-check, obstruct, whitney, reproduce, export.

Exit codes: 0 success, 1 verification failure, 2 size/budget guard,
3 malformed input.  All output is deterministic for fixed inputs.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import builders, reproduce, verifier, zoo
from .coxeter import CoxeterType
from .errors import BudgetExceeded, SizeGuard, UphoError
from .intpoly import IntPolynomial
from .monoid import (
    PRESETS,
    enumerate_elements,
    left_cancellative_check,
    parse_presentation,
    right_lcm_check,
)
from .poset import GradedPoset
from .serialize import (
    poly_to_dict,
    poset_from_json,
    poset_to_dict,
    poset_to_dot,
    poset_to_json,
)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(3, f"{self.prog}: error: {message}\n")


def _emit_poset(p: GradedPoset, fmt: str, out=None):
    out = out or sys.stdout
    if fmt == "json":
        out.write(poset_to_json(p) + "\n")
    elif fmt == "dot":
        out.write(poset_to_dot(p))
    elif fmt == "text":
        out.write(f"n={p.n} rank_counts={list(p.rank_counts())}\n")
        for i in range(p.n):
            ups = ",".join(p.label(j) for j in p.up[i])
            out.write(f"  [{p.rank[i]}] {p.label(i)} -> {ups}\n")
    else:
        raise UphoError(f"unsupported format {fmt!r} for posets")


def _gen_recipe(args) -> zoo.ZooRecipe:
    fam = args.family.replace("-", "_")
    p = args.params
    need = lambda k: p[k] if k < len(p) else None

    if fam in ("boolean", "partition", "signed_partition", "cross_polytope",
               "hypercube", "cycle_bond", "complete_bond"):
        if need(0) is None:
            raise UphoError(f"{args.family} needs one integer parameter n")
        return zoo.ZooRecipe.of(fam, n=p[0])
    if fam == "subspace":
        if need(0) is None:
            raise UphoError("subspace needs n (positional) and --q")
        return zoo.ZooRecipe.of(fam, n=p[0], q=args.q)
    if fam == "dowling":
        if need(0) is None:
            raise UphoError("dowling needs n (positional) and --m")
        return zoo.ZooRecipe.of(fam, n=p[0], m=args.m)
    if fam == "rank_two":
        if need(0) is None:
            raise UphoError("rank-two needs the atom count r")
        return zoo.ZooRecipe.of(fam, r=p[0])
    if fam == "chain_sum":
        if need(1) is None:
            raise UphoError("chain-sum needs r and n")
        return zoo.ZooRecipe.of(fam, r=p[0], n=p[1])
    if fam == "uniform_matroid":
        if need(1) is None:
            raise UphoError("uniform-matroid needs k and n")
        return zoo.ZooRecipe.of(fam, k=p[0], n=p[1])
    if fam in ("weak_order", "noncrossing"):
        ctype = CoxeterType.parse(args.type or "A2", args.m if args.type in ("I2", "I") else None)
        if ctype.family == "A":
            return zoo.ZooRecipe.of(fam, r=ctype.param)
        return zoo.ZooRecipe.of(fam, m=ctype.param)
    if fam == "core_with_noncore_dual":
        return zoo.ZooRecipe.of(fam)
    raise UphoError(f"unknown family {args.family!r}")


def _bond_edges(spec: str):
    edges = []
    for part in spec.split(","):
        a, _, b = part.strip().partition("-")
        edges.append((int(a), int(b)))
    return edges


def cmd_gen(args) -> int:
    if args.family == "bond":
        if not args.edges:
            raise UphoError("bond needs --edges like '1-2,2-3,3-1'")
        poset = zoo.bond_lattice(_bond_edges(args.edges))
    else:
        poset = zoo.generate(_gen_recipe(args))
    _emit_poset(poset, args.fmt)
    return 0


def _build_truncation(args) -> builders.UphoTruncation:
    fam = args.recipe.replace("_", "-")
    p = args.params
    if fam == "grid":
        return builders.grid(args.d or (p[0] if p else 2), args.N)
    if fam == "boolean-infty":
        return builders.boolean_infty(args.k or (p[0] if p else 2), args.N)
    if fam == "subspace-infty":
        return builders.subspace_infty(args.k or (p[0] if p else 2), args.q, args.N)
    if fam == "partition-infty":
        return builders.partition_infty(args.k or (p[0] if p else 2), args.N)
    if fam == "signed-partition-infty":
        return builders.signed_partition_infty(args.k or (p[0] if p else 2), args.N)
    if fam == "dowling-infty":
        return builders.dowling_infty(args.k or (p[0] if p else 2), args.m, args.N)
    if fam == "rank-two":
        return builders.rank_two(args.r or (p[0] if p else 2), args.N, args.budget)
    if fam == "chains":
        if len(p) >= 2:
            r, n = p[0], p[1]
        else:
            r, n = args.r or 2, 3
        return builders.chains(r, n, args.N, args.budget)
    if fam in ("braid-classical", "braid-dual"):
        ctype = CoxeterType.parse(args.type or "A2", args.m if args.type in ("I2", "I") else None)
        build = builders.braid_classical if fam == "braid-classical" else builders.braid_dual
        return build(ctype, args.N, args.budget)
    if fam == "core-with-noncore-dual":
        return builders.asymmetric_core(args.N, args.budget)
    raise UphoError(f"unknown truncation recipe {args.recipe!r}")


def _truncation_dict(t: builders.UphoTruncation) -> dict:
    d = {
        "recipe": t.recipe,
        "params": dict(t.params),
        "N": t.N,
        "poset": poset_to_dict(t.poset),
    }
    if t.expected_core is not None:
        d["expected_core"] = {
            "family": t.expected_core.family,
            "params": dict(t.expected_core.params),
        }
    if t.expected_chi is not None:
        d["expected_chi"] = poly_to_dict(t.expected_chi)
    return d


def cmd_upho(args) -> int:
    t = _build_truncation(args)
    if args.fmt == "json":
        print(json.dumps(_truncation_dict(t), ensure_ascii=False))
    else:
        _emit_poset(t.poset, args.fmt)
    return 0


def cmd_monoid(args) -> int:
    if args.preset:
        kwargs = {}
        if args.r is not None:
            kwargs["r"] = args.r
        if args.n is not None:
            kwargs["n"] = args.n
        if args.preset in ("braid-classical", "braid-dual"):
            kwargs["ctype"] = CoxeterType.parse(
                args.type or "A2", args.m if args.type in ("I2", "I") else None
            )
        pres = PRESETS[args.preset](**kwargs)
    elif args.file:
        text = sys.stdin.read() if args.file == "-" else open(args.file).read()
        pres = parse_presentation(text)
    else:
        raise UphoError("monoid needs --preset or --file")
    mp = enumerate_elements(pres, args.N, budget=args.budget)
    if args.check:
        cancel = left_cancellative_check(mp)
        lcm = right_lcm_check(mp)
        print(f"left-cancellative: {cancel.describe()}", file=sys.stderr)
        print(f"right-lcm: {lcm.describe()}", file=sys.stderr)
        if not (cancel.ok and lcm.ok):
            return 1
    _emit_poset(mp.poset, args.fmt)
    return 0


def _read_poset(path: str) -> GradedPoset:
    text = sys.stdin.read() if path == "-" else open(path).read()
    data = json.loads(text)
    if isinstance(data, dict) and "poset" in data:
        data = data["poset"]
    return poset_from_json(json.dumps(data))


def cmd_invariants(args) -> int:
    p = _read_poset(args.input)
    verdict = p.lattice_check()
    info = {
        "n": p.n,
        "rank_counts": list(p.rank_counts()),
        "F": poly_to_dict(p.rank_gen_poly()),
        "chi_star": poly_to_dict(p.reciprocal_char_poly()),
        "is_lattice": verdict.is_lattice,
    }
    if not verdict.is_lattice:
        info["witness"] = list(verdict.witness)
        info["missing"] = verdict.missing
    if args.fmt == "json":
        print(json.dumps(info, ensure_ascii=False))
    else:
        print(f"n = {p.n}")
        print(f"rank counts = {list(p.rank_counts())}")
        print(f"F = {p.rank_gen_poly().text()}")
        print(f"chi* = {p.reciprocal_char_poly().text()}")
        print(f"lattice = {verdict.is_lattice}")
        if not verdict.is_lattice:
            print(f"witness pair without {verdict.missing}: {verdict.witness}")
    return 0


def cmd_core(args) -> int:
    p = _read_poset(args.input)
    _emit_poset(p.core(), args.fmt)
    return 0


def cmd_upho_check(args) -> int:
    t = _build_truncation(args)
    identity = verifier.verify_rank_identity(t)
    print(f"rank identity: {'pass' if identity.ok else 'FAIL'} - {identity.describe()}")
    upho_verdict = verifier.verify_upho(t, args.depth)
    print(
        f"self-similarity to depth {upho_verdict.depth}: "
        f"{'pass' if upho_verdict.ok else 'FAIL'} - {upho_verdict.describe()}"
    )
    print("note: both checks are bounded evidence at truncation rank "
          f"{t.N}; they cannot certify the infinite object")
    return 0 if identity.ok and upho_verdict.ok else 1


def cmd_obstruct(args) -> int:
    p = _read_poset(args.input)
    report = verifier.obstruction_report(
        p, args.input, order=args.order, m=args.m
    )
    if args.fmt == "json":
        print(
            json.dumps(
                {
                    "lattice": report.lattice_id,
                    "rules_out": report.rules_out(),
                    "entries": [
                        {"test": e.test, "verdict": e.verdict,
                         "certificate": {k: str(v) for k, v in e.certificate.items()}}
                        for e in report.entries
                    ],
                },
                ensure_ascii=False,
            )
        )
    else:
        for e in report.entries:
            print(e.describe())
        print(
            "ruled out as a core" if report.rules_out()
            else "not ruled out (inconclusive tests scan finitely far)"
        )
    return 0


def cmd_whitney(args) -> int:
    tables = verifier.whitney_tables(args.family, args.n, q=args.q, m=args.m)
    verdict = verifier.whitney_inverse_check(tables)
    if args.fmt == "json":
        print(
            json.dumps(
                {
                    "family": tables.family,
                    "n": tables.n,
                    "second_kind": [[str(x) for x in row] for row in tables.second_kind],
                    "first_kind": [[str(x) for x in row] for row in tables.first_kind],
                    "atom_increments": list(tables.atom_increments),
                    "inverse_check": verdict.ok,
                },
                ensure_ascii=False,
            )
        )
    else:
        print("second kind:")
        for row in tables.second_kind:
            print("  ", list(row))
        print("first kind:")
        for row in tables.first_kind:
            print("  ", list(row))
        print(f"atom increments: {list(tables.atom_increments)}")
        print(f"inverse check: {verdict.note}")
    return 0 if verdict.ok else 1


def cmd_reproduce(args) -> int:
    rows = reproduce.run_all(jobs=args.jobs)
    if args.fmt == "json":
        print(reproduce.to_json(rows))
    elif args.fmt == "md":
        print(reproduce.to_markdown(rows))
    else:
        print(reproduce.to_text(rows), end="")
    return 0 if all(r.ok for r in rows) else 1


def cmd_export(args) -> int:
    if args.recipe_kind == "gen":
        poset = zoo.generate(_gen_recipe(args))
    else:
        args.recipe = args.family
        poset = _build_truncation(args).poset
    text = poset_to_json(poset) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _add_common(sub, *, fmt_default="json"):
    sub.add_argument("--fmt", default=fmt_default, choices=["json", "dot", "md", "text"])
    sub.add_argument("--seed", type=int, default=0,
                     help="seed for randomized searches (all current searches are deterministic)")


def _add_family_params(sub):
    sub.add_argument("params", nargs="*", type=int, help="family parameters")
    sub.add_argument("--q", type=int, default=2)
    sub.add_argument("--m", type=int, default=2)
    sub.add_argument("--k", type=int, default=None)
    sub.add_argument("--d", type=int, default=None)
    sub.add_argument("--r", type=int, default=None)
    sub.add_argument("--type", default=None, help="Coxeter type, e.g. A2 or I2")
    sub.add_argument("--edges", default=None, help="bond-lattice edges, e.g. '1-2,2-3,3-1'")


def build_parser() -> _Parser:
    ap = _Parser(prog="upho", description=__doc__)
    sp = ap.add_subparsers(dest="command", required=True)

    gen = sp.add_parser("gen", help="generate a zoo lattice")
    gen.add_argument("family")
    _add_family_params(gen)
    _add_common(gen)
    gen.set_defaults(fn=cmd_gen)

    up = sp.add_parser("upho", help="build a rank-N truncation")
    up.add_argument("recipe")
    _add_family_params(up)
    up.add_argument("--N", type=int, default=4)
    up.add_argument("--budget", type=int, default=None)
    _add_common(up)
    up.set_defaults(fn=cmd_upho)

    mo = sp.add_parser("monoid", help="enumerate a presented monoid")
    mo.add_argument("--preset", choices=sorted(PRESETS))
    mo.add_argument("--file", help="presentation file ('-' for stdin)")
    mo.add_argument("--N", type=int, default=4)
    mo.add_argument("--budget", type=int, default=None)
    mo.add_argument("--check", action="store_true",
                    help="run bounded cancellativity and lcm checks first")
    mo.add_argument("--r", type=int, default=None)
    mo.add_argument("--n", type=int, default=None)
    mo.add_argument("--m", type=int, default=2)
    mo.add_argument("--type", default=None)
    _add_common(mo)
    mo.set_defaults(fn=cmd_monoid)

    inv = sp.add_parser("invariants", help="F, chi*, and lattice verdict of a poset")
    inv.add_argument("input", help="poset JSON file ('-' for stdin)")
    _add_common(inv, fmt_default="text")
    inv.set_defaults(fn=cmd_invariants)

    co = sp.add_parser("core", help="interval from the minimum to the join of atoms")
    co.add_argument("input", help="poset JSON file ('-' for stdin)")
    _add_common(co)
    co.set_defaults(fn=cmd_core)

    uc = sp.add_parser("upho-check", help="rank identity plus self-similarity check")
    uc.add_argument("recipe")
    _add_family_params(uc)
    uc.add_argument("--N", type=int, default=4)
    uc.add_argument("--depth", type=int, default=None)
    uc.add_argument("--budget", type=int, default=None)
    _add_common(uc, fmt_default="text")
    uc.set_defaults(fn=cmd_upho_check)

    ob = sp.add_parser("obstruct", help="run the core obstruction pipeline")
    ob.add_argument("input", help="poset JSON file ('-' for stdin)")
    ob.add_argument("--order", type=int, default=None)
    ob.add_argument("--m", type=int, default=2)
    _add_common(ob, fmt_default="text")
    ob.set_defaults(fn=cmd_obstruct)

    wh = sp.add_parser("whitney", help="Whitney tables of a uniform family")
    wh.add_argument("family", choices=["boolean", "subspace", "partition",
                                       "signed_partition", "dowling"])
    wh.add_argument("--n", type=int, required=True)
    wh.add_argument("--q", type=int, default=2)
    wh.add_argument("--m", type=int, default=2)
    _add_common(wh, fmt_default="text")
    wh.set_defaults(fn=cmd_whitney)

    rp = sp.add_parser("reproduce", help="recompute every published value")
    rp.add_argument("--jobs", type=int, default=1)
    _add_common(rp, fmt_default="text")
    rp.set_defaults(fn=cmd_reproduce)

    ex = sp.add_parser("export", help="write a poset JSON file")
    ex.add_argument("recipe_kind", choices=["gen", "upho"])
    ex.add_argument("family")
    _add_family_params(ex)
    ex.add_argument("--N", type=int, default=4)
    ex.add_argument("--budget", type=int, default=None)
    ex.add_argument("--out", default=None)
    _add_common(ex)
    ex.set_defaults(fn=cmd_export)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except (SizeGuard, BudgetExceeded) as e:
        print(f"guard: {e}", file=sys.stderr)
        return 2
    except UphoError as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
