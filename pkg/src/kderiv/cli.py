"""Batch command-line surface: K_0 computations, invariant-check suites,
and deterministic JSON dumps of the truncated models.

Exit codes: 0 success, 1 internal check failure, 2 invalid configuration,
3 enumeration cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import enrichment as en
from . import fincat, ktheory, simplicial
from . import sconstruction as sc
from .basecat import WaldhausenStructure, make_base
from .derivator import (check_der1, check_der2, check_der3_der4, check_der5,
                        enumerate_diagram_morphisms, identity_base_functor,
                        BaseNat, represent)
from .sconstruction import CapExceeded, CapabilityError


def build_parser():
    p = argparse.ArgumentParser(
        prog="kderiv",
        description="Exact K_0 computations over finite homotopical bases.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--base", default="vect-iso",
                        choices=["vect-iso", "ptset-iso", "chain-qis",
                                 "trivial"])
        sp.add_argument("--q", type=int, default=2)
        sp.add_argument("--degrees", default="0:1", metavar="lo:hi")
        sp.add_argument("--bound", type=int, default=1)
        sp.add_argument("--cof", default="monos",
                        choices=["monos", "all-maps", "split-monos"])
        sp.add_argument("--trunc", type=int, default=2)
        sp.add_argument("--cap", type=int, default=None)
        sp.add_argument("--out", default=None)
        sp.add_argument("--workers", type=int, default=1)

    k0p = sub.add_parser("k0", help="K_0 through a truncated model")
    common(k0p)
    k0p.add_argument("--model", default="s",
                     choices=["s", "bisimplicial", "derivator", "waldhausen"])
    k0p.add_argument("--oracle", action="store_true",
                     help="cross-check against the brute-force oracle")

    chk = sub.add_parser("check", help="run an invariant battery")
    common(chk)
    chk.add_argument("--suite", default="all",
                     choices=["axioms", "simplicial", "enrichment",
                              "comparison", "all"])

    dmp = sub.add_parser("dump", help="dump a model as JSON")
    common(dmp)
    dmp.add_argument("--what", required=True,
                     choices=["category", "s", "bisimplicial", "nisoS",
                              "nerve", "presentation"])
    return p


def _parse_degrees(s):
    try:
        lo, hi = s.split(":")
        return int(lo), int(hi)
    except ValueError:
        raise ValueError(f"--degrees wants lo:hi, got {s!r}")


def _config(args):
    lo, hi = _parse_degrees(args.degrees)
    if args.bound < 0:
        raise ValueError("--bound must be >= 0")
    if args.workers < 1:
        raise ValueError("--workers must be >= 1")
    cap = sc.enumeration_cap(args.cap)
    if args.bound > cap:
        raise ValueError("--bound exceeds the enumeration cap")
    base = make_base(args.base, args.q, lo, hi)
    bound = 0 if args.base == "trivial" else args.bound
    return base, bound


def _emit(report, out):
    text = json.dumps(report, sort_keys=True, indent=2) + "\n"
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# k0

def cmd_k0(args):
    base, bound = _config(args)
    if args.model == "waldhausen":
        target = WaldhausenStructure(base, args.cof)
    else:
        target = represent(base)
    res = ktheory.k0(args.model, target, bound, args.cap)
    report = {"command": "k0", "model": args.model, "base": args.base,
              "bounds": res.bounds, "comparisons": []}
    report.update(res.invariants.to_json())
    if args.oracle:
        oracle = ktheory.k0_oracle(target, bound, args.cap)
        comp = ktheory.oracle_comparison(res, oracle, base)
        report["comparisons"].append(comp.to_json())
        if comp.verdict != "iso":
            _emit(report, args.out)
            return 1
    _emit(report, args.out)
    return 0


# ---------------------------------------------------------------------------
# check suites

def _suite_axioms(base, bound):
    D = represent(base)
    I1 = fincat.ordinal(1)
    ul = fincat.ulcorner_cat()
    reports = [check_der1(D, fincat.ordinal(0), fincat.ordinal(0), bound)]
    samples = []
    if D.exact_ho:
        for F in D.objects(I1, bound):
            for G in D.objects(I1, bound):
                samples.extend(enumerate_diagram_morphisms(base, F, G))
    reports.append(check_der2(D, I1, samples))
    reports.append(check_der3_der4(D, fincat.collapse_functor(I1), "*",
                                   D.objects(I1, bound)))
    reports.append(check_der3_der4(D, fincat.inclusion_ulcorner(), "(1,1)",
                                   D.objects(ul, bound)))
    I = fincat.free_category("F(a->b)", ["a", "b"], [("u", "a", "b")])
    reports.append(check_der5(D, I, min(bound, 1), [("u", "a", "b")]))
    return [{"name": r["axiom"], "pass": r["pass"]} for r in reports]


def _suite_simplicial(base, bound):
    checks = []
    N2 = simplicial.nerve(fincat.arrow_cat(2), 2)
    checks.append({"name": "nerve(Ar[2]) identities",
                   "pass": not simplicial.verify(N2)})
    fixtures = [
        ("nerve([1]) trivial", simplicial.nerve(fincat.ordinal(1), 2),
         ("0",), [], 0),
        ("circle Z", simplicial.circle(), "v", [], 1),
        ("order-2 groupoid Z/2",
         simplicial.nerve(fincat.cyclic_group_cat(2), 2), ("*",), [2], 0),
    ]
    for name, S, basepoint, factors, free in fixtures:
        inv = simplicial.abelianize(simplicial.edge_path(S, basepoint))
        h1 = simplicial.homology(S, 1)
        ok = (inv.factors == factors and inv.free_rank == free
              and h1.factors == inv.factors and h1.free_rank == inv.free_rank)
        checks.append({"name": name, "pass": ok})
    return checks


def _suite_enrichment(base, bound):
    D = represent(base)
    e = fincat.terminal_cat()
    I1 = fincat.ordinal(1)
    battery = [(e, D.objects(e, bound)), (I1, D.objects(I1, min(bound, 1)))]
    checks = []

    s0, (d1, d0) = en.path_object(D)
    ok = all(d1(X, s0.apply(X, F)) == F and d0(X, s0.apply(X, F)) == F
             for X, fs in battery for F in fs)
    checks.append({"name": "path object factors the diagonal", "pass": ok})

    nat = BaseNat("one", identity_base_functor(base),
                  identity_base_functor(base), base.identity)
    a1 = en.alpha_star(D, D, nat.src, nat.tgt, nat)
    lhs = en.compose_simplices(en.compose_simplices(a1, s0), a1)
    rhs = en.compose_simplices(a1, en.compose_simplices(s0, a1))
    checks.append({"name": "compose_simplices associativity",
                   "pass": en.simplices_agree(lhs, rhs, battery)})

    _, _, _, rep = en.strong_equivalence_from_initial(D, I1, "0",
                                                      battery=[(e, 1)])
    checks.append({"name": "strong equivalence from initial [1]",
                   "pass": rep["pass"]})

    S1 = sc.build_s(D, 2, min(bound, 1))
    H = sc.lemma_homotopy_data(D, D, a1, S1, S1)
    f0 = sc.s_bullet_map(D, en.boundary(a1, 1), S1, S1)
    f1 = sc.s_bullet_map(D, en.boundary(a1, 0), S1, S1)
    checks.append({"name": "s-construction lemma homotopy",
                   "pass": simplicial.check_simplicial_homotopy(H, f0, f1)})
    return checks


def _suite_comparison(base, bound):
    D = represent(base)
    checks = []
    it = ktheory.iota(D, bound)
    checks.append({"name": "iota verdict iso", "pass": it.verdict == "iso"})
    if D.exact_ho:
        checks.append({"name": "mu_ob verdict iso",
                       "pass": ktheory.mu_ob(D, bound).verdict == "iso"})
        checks.append({"name": "mu verdict iso",
                       "pass": ktheory.mu(D, bound).verdict == "iso"})
        checks.append({"name": "mu^ob = mu . iota",
                       "pass": ktheory.mu_factorization_check(D, bound)})
        W = WaldhausenStructure(base, "all-maps")
        ag = ktheory.agreement(W, bound)
        checks.append({"name": "agreement verdict iso",
                       "pass": ag.verdict == "iso"
                       and ag.levelwise_bijection})
    return checks


SUITES = {"axioms": _suite_axioms, "simplicial": _suite_simplicial,
          "enrichment": _suite_enrichment, "comparison": _suite_comparison}


def cmd_check(args):
    base, bound = _config(args)
    names = (list(SUITES) if args.suite == "all" else [args.suite])
    checks = []
    for n in names:
        for c in SUITES[n](base, bound):
            c["suite"] = n
            checks.append(c)
    ok = all(c["pass"] for c in checks)
    report = {"command": "check", "suite": args.suite, "base": args.base,
              "bound": bound, "checks": checks, "pass": ok}
    if not ok:
        report["first_failure"] = next(c["name"] for c in checks
                                       if not c["pass"])
    _emit(report, args.out)
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# dump

def cmd_dump(args):
    base, bound = _config(args)
    D = represent(base)
    what = args.what
    if what == "category":
        body = fincat.arrow_cat(args.trunc).to_json()
    elif what == "nerve":
        body = simplicial.nerve(fincat.arrow_cat(2), args.trunc).to_json()
    elif what == "s":
        body = sc.build_s(D, args.trunc, bound, args.cap).to_json()
    elif what == "bisimplicial":
        body = sc.build_Sbis(D, args.trunc, args.trunc, bound,
                             args.cap).to_json()
    elif what == "nisoS":
        body = sc.build_NisoS(D, args.trunc, bound, args.cap).to_json()
    elif what == "presentation":
        S = sc.build_s(D, 2, bound, args.cap)
        P = simplicial.edge_path(S, S.levels[0][0])
        body = P.to_json()
    report = {"command": "dump", "what": what, "base": args.base,
              "bound": bound, "trunc": args.trunc, "body": body}
    _emit(report, args.out)
    return 0


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        if args.command == "k0":
            return cmd_k0(args)
        if args.command == "check":
            return cmd_check(args)
        return cmd_dump(args)
    except CapExceeded as e:
        sys.stderr.write(f"cap exceeded: {e}\n")
        return 3
    except (CapabilityError, ValueError) as e:
        sys.stderr.write(f"invalid configuration: {e}\n")
        return 2
    except AssertionError as e:
        sys.stderr.write(f"internal check failure: {e}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
