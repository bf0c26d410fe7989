"""Command line interface: enumeration, exact element printing, and the
verification suites, with deterministic machine-readable output.

Exit codes: 0 pass, 1 verification failure, 2 usage error, 3 resource
limit exceeded.  All randomness flows from --seed (or QSCHUR_SEED).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from random import Random

from .branching import BranchContext
from .hecke import AlgebraContext
from .linalg import ResourceLimit
from .ring import Specialization
from .schur import SchurContext, verify_basis_with_fallback
from .tableaux import (MultiShape, Multicomposition, TypedTableau,
                       addable_nodes, enumerate_multicompositions,
                       enumerate_ssyt, removable_nodes)

USAGE_ERROR = 2
FAIL = 1
RESOURCE = 3


class _Budget:
    """Coarse wall-clock budget checked at natural checkpoints."""

    def __init__(self, max_seconds):
        self.deadline = None if max_seconds is None else time.monotonic() + max_seconds

    def check(self):
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise ResourceLimit("wall-clock budget exceeded")


def _parse_json_arg(text, what):
    try:
        return json.loads(text)
    except (TypeError, json.JSONDecodeError) as exc:
        raise UsageError(f"malformed {what}: {text!r} ({exc})")


class UsageError(ValueError):
    pass


def _seed(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get("QSCHUR_SEED")
    return int(env) if env else 0


def _flags(args) -> dict:
    out = {}
    if args.flags:
        for piece in args.flags.split(","):
            if "=" not in piece:
                raise UsageError(f"bad flag assignment {piece!r}")
            key, val = piece.split("=", 1)
            if key not in ("m_convention", "y_convention"):
                raise UsageError(f"unknown flag {key!r}")
            out[key] = val
    return out


def _shape_args(args, need_lambda=False):
    lam_parts = None
    if args.lam is not None:
        lam_parts = _parse_json_arg(args.lam, "--lambda")
    elif need_lambda:
        raise UsageError("--lambda is required")
    m = _parse_json_arg(args.m, "--m") if args.m else None
    r = args.r
    if r is None:
        if m is not None:
            r = len(m)
        elif lam_parts is not None:
            r = len(lam_parts)
        else:
            raise UsageError("one of --r, --m, --lambda is required")
    if m is None and lam_parts is not None:
        m = [max(1, len(c)) for c in lam_parts]
    return lam_parts, m, r


def _emit(payload, fmt, text_lines):
    if fmt == "json":
        return json.dumps(payload, sort_keys=True)
    return "\n".join(text_lines)


# ---------------------------------------------------------------------------
# enum
# ---------------------------------------------------------------------------

def cmd_enum(args) -> int:
    fmt = args.format
    if args.what == "multicomp":
        if args.n is None or args.m is None:
            raise UsageError("enum multicomp needs --n and --m")
        m = _parse_json_arg(args.m, "--m")
        items = enumerate_multicompositions(args.n, MultiShape(tuple(m)),
                                            partitions_only=args.partitions)
        payload = {"count": len(items), "items": [w.to_json() for w in items]}
        lines = [f"count: {len(items)}"] + [json.dumps(w.to_json()) for w in items]
        print(_emit(payload, fmt, lines))
        return 0
    if args.what == "ssyt":
        lam_parts, m, r = _shape_args(args, need_lambda=True)
        bounds = MultiShape(tuple(m))
        lam = Multicomposition(lam_parts, m=[max(1, len(c)) for c in lam_parts])
        weight = None
        if args.mu:
            weight = Multicomposition(_parse_json_arg(args.mu, "--mu"), m=m)
        if args.type:
            weight = Multicomposition(_parse_json_arg(args.type, "--type"), m=m)
        tabs = enumerate_ssyt(lam, bounds, weight)
        payload = {"count": len(tabs), "items": [t.to_json() for t in tabs]}
        lines = [f"count: {len(tabs)}"] + [json.dumps(t.to_json()["entries"])
                                           for t in tabs]
        print(_emit(payload, fmt, lines))
        return 0
    if args.what == "nodes":
        lam_parts, m, r = _shape_args(args, need_lambda=True)
        lam = Multicomposition(lam_parts, m=[max(1, len(c)) for c in lam_parts])
        rem = removable_nodes(lam)
        add = addable_nodes(lam)
        note = ("removability follows the formal condition: a row end whose "
                "successor row is strictly shorter, or the last row of a "
                "component; informal listings sometimes omit interior nodes")
        payload = {"removable": [list(x) for x in rem],
                   "addable": [list(x) for x in add],
                   "count_removable": len(rem), "note": note}
        lines = [f"removable ({len(rem)}): " + " ".join(str(x) for x in rem),
                 f"addable ({len(add)}): " + " ".join(str(x) for x in add),
                 f"note: {note}"]
        print(_emit(payload, fmt, lines))
        return 0
    raise UsageError(f"unknown enum target {args.what!r}")


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def cmd_verify(args) -> int:
    fmt = args.format
    seed = _seed(args)
    budget = _Budget(args.max_seconds)
    if args.what == "relations":
        if args.n is None or args.r is None:
            raise UsageError("verify relations needs --n and --r")
        ctx = AlgebraContext(args.n, args.r, **_flags(args))
        if ctx.dimension() > args.max_dim:
            raise ResourceLimit("algebra dimension exceeds --max-dim")
        rel = ctx.relation_reports()
        budget.check()
        rng = Random(seed)
        basis = ctx.basis_monomials()
        assoc_ok = True
        samples = args.samples
        for _ in range(samples):
            a = ctx.basis_element(*basis[rng.randrange(len(basis))])
            b = ctx.basis_element(*basis[rng.randrange(len(basis))])
            c = ctx.basis_element(*basis[rng.randrange(len(basis))])
            if (a * b) * c != a * (b * c):
                assoc_ok = False
                break
        budget.check()
        dim = ctx.regular_closure_dim(seed=seed, max_dim=args.max_dim)
        payload = {"n": args.n, "r": args.r, "relations": rel,
                   "associativity_samples": samples, "associativity": assoc_ok,
                   "closure_dim": dim, "expected_dim": ctx.dimension(),
                   "pass": all(rel.values()) and assoc_ok and dim == ctx.dimension()}
        lines = [f"{k}: {v}" for k, v in sorted(rel.items())]
        lines.append(f"associativity ({samples} samples): {assoc_ok}")
        lines.append(f"closure dimension: {dim} (expected {ctx.dimension()})")
        lines.append(f"pass: {payload['pass']}")
        print(_emit(payload, fmt, lines))
        return 0 if payload["pass"] else FAIL
    if args.what == "lemma24":
        if args.n is None or args.r is None:
            raise UsageError("verify lemma24 needs --n and --r")
        payload = _lemma24_report(args.n, args.r, seed, budget, args.max_dim,
                                  **_flags(args))
        lines = [f"vanishing (pairs checked {payload['pairs_checked']}): "
                 f"{payload['vanishing']}",
                 f"freeness ranks: {payload['freeness_ranks']}",
                 f"pass: {payload['pass']}"]
        print(_emit(payload, fmt, lines))
        return 0 if payload["pass"] else FAIL
    if args.what == "basis":
        lam_parts, m, r = _shape_args(args, need_lambda=True)
        n = sum(sum(c) for c in lam_parts)
        flags = _flags(args)
        if flags:
            sc = SchurContext(n, r, tuple(m), **flags)
            report = sc.verify_basis_independence(
                sc.weight(lam_parts), seed=seed, max_dim=args.max_dim)
            report["literal_flags"] = flags == {"m_convention": "plain",
                                                "y_convention": "plain"}
        else:
            report = verify_basis_with_fallback(n, r, tuple(m), lam_parts,
                                                seed=seed, max_dim=args.max_dim)
        budget.check()
        lines = [f"lambda: {json.dumps(report['lambda'])}",
                 f"count: {report['count']}", f"rank: {report['rank']}",
                 f"flags: {json.dumps(report['flags'], sort_keys=True)}",
                 f"certified: {report['certified']}"]
        print(_emit(report, fmt, lines))
        return 0 if report["certified"] else FAIL
    if args.what == "branch":
        lam_parts, m, r = _shape_args(args, need_lambda=True)
        nbig = sum(sum(c) for c in lam_parts)
        bc = BranchContext(nbig - 1, r, tuple(m), lam_parts, **_flags(args))
        report = bc.branch_dim_identity()
        budget.check()
        lines = [f"lambda: {json.dumps(report['lambda'])}"]
        for layer in report["layers"]:
            lines.append(f"node {layer['node']}: quotient {layer['quotient_dim']}"
                         f" vs weyl {layer['weyl_dim']} -> {layer['match']}")
        lines.append(f"identity_holds: {report['identity_holds']}")
        print(_emit(report, fmt, lines))
        return 0 if report["identity_holds"] else FAIL
    raise UsageError(f"unknown verify target {args.what!r}")


def _lemma24_report(n, r, seed, budget, max_dim, **flags):
    from .linalg import rank_exact
    from .symgrp import all_permutations
    from .tableaux import bracket_leq, bracket_reversed
    from math import factorial

    ctx = AlgebraContext(n, r, **flags)
    if ctx.dimension() > max_dim:
        raise ResourceLimit("algebra dimension exceeds --max-dim")

    def brackets():
        def rec(prefix, remaining_slots):
            if remaining_slots == 0:
                yield prefix + (n,)
                return
            for v in range(prefix[-1], n + 1):
                yield from rec(prefix + (v,), remaining_slots - 1)
        yield from rec((0,), r - 1)

    vanish_ok = True
    pairs = 0
    basis = ctx.basis_monomials()
    for a in brackets():
        ua = ctx.u_plus(a)
        for b in brackets():
            if bracket_leq(a, b):
                continue
            pairs += 1
            ub = ctx.u_minus(bracket_reversed(b))
            for (c, w) in basis:
                if not (ua * ctx.basis_element(c, w) * ub).is_zero():
                    vanish_ok = False
                    break
            budget.check()
    spec = Specialization.random(r, Random(seed))
    ranks = {}
    free_ok = True
    for a in brackets():
        va = ctx.v_element(a)
        rows = [(va * ctx.T(w)).specialize_vector(spec)
                for w in all_permutations(n)]
        rk = rank_exact(rows)
        ranks[str(list(a))] = rk
        free_ok = free_ok and rk == factorial(n)
        budget.check()
    return {"n": n, "r": r, "vanishing": vanish_ok, "pairs_checked": pairs,
            "freeness_ranks": ranks, "freeness": free_ok,
            "expected_rank": factorial(n), "pass": vanish_ok and free_ok}


# ---------------------------------------------------------------------------
# compute
# ---------------------------------------------------------------------------

def cmd_compute(args) -> int:
    fmt = args.format
    if args.what == "L":
        if args.i is None or args.n is None or args.r is None:
            raise UsageError("compute L needs --i, --n, --r")
        ctx = AlgebraContext(args.n, args.r, **_flags(args))
        elem = ctx.jucys_murphy(args.i)
        print(_emit(elem.to_json(), fmt, [elem.text()]))
        return 0
    lam_parts, m, r = _shape_args(args, need_lambda=True)
    n = sum(sum(c) for c in lam_parts)
    sc = SchurContext(n, r, tuple(m), **_flags(args))
    lam = sc.weight(lam_parts)
    if args.what == "z":
        elem = sc.z_element(lam)
    elif args.what == "x":
        elem = sc.x_element(lam)
    elif args.what == "y":
        elem = sc.algebra.y_element(lam)
    elif args.what == "m":
        elem = sc.algebra.m_element(lam)
    elif args.what == "h":
        mu = lam
        if args.mu:
            mu = sc.weight(_parse_json_arg(args.mu, "--mu"))
        tabs = enumerate_ssyt(lam, sc.shape, mu)
        if not tabs:
            raise UsageError("no semistandard tableau for the given (lambda, mu)")
        index = args.index or 0
        if args.tableau:
            entries = _parse_json_arg(args.tableau, "--tableau")
            try:
                A = TypedTableau(lam, sc.shape, entries)
            except ValueError as exc:
                raise UsageError(f"invalid tableau selector: {exc}")
            if A not in tabs:
                raise UsageError("tableau selector is not semistandard of the"
                                 " given type")
        else:
            if not 0 <= index < len(tabs):
                raise UsageError(f"tableau index {index} out of range"
                                 f" 0..{len(tabs) - 1}")
            A = tabs[index]
        elem = sc.basis_vector(lam, mu, A).elem
    else:
        raise UsageError(f"unknown compute target {args.what!r}")
    print(_emit(elem.to_json(), fmt, [elem.text()]))
    return 0


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int)
    common.add_argument("--r", type=int)
    common.add_argument("--m")
    common.add_argument("--lambda", dest="lam")
    common.add_argument("--mu")
    common.add_argument("--type")
    common.add_argument("--seed", type=int)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--flags", help="m_convention=...,y_convention=...")
    common.add_argument("--max-dim", type=int, default=10_000)
    common.add_argument("--max-seconds", type=float)

    ap = argparse.ArgumentParser(
        prog="qschur",
        description="Exact Ariki-Koike / cyclotomic q-Schur verification tool")
    sub = ap.add_subparsers(dest="command", required=True)

    enum = sub.add_parser("enum", parents=[common],
                          help="enumerate weights, tableaux or nodes")
    enum.add_argument("what", choices=("multicomp", "ssyt", "nodes"))
    enum.add_argument("--partitions", action="store_true")
    enum.set_defaults(func=cmd_enum)

    verify = sub.add_parser("verify", parents=[common],
                            help="run a verification suite")
    verify.add_argument("what", choices=("relations", "lemma24", "basis", "branch"))
    verify.add_argument("--samples", type=int, default=500)
    verify.set_defaults(func=cmd_verify)

    compute = sub.add_parser("compute", parents=[common],
                             help="print exact elements")
    compute.add_argument("what", choices=("z", "x", "y", "m", "L", "h"))
    compute.add_argument("--i", type=int)
    compute.add_argument("--index", type=int)
    compute.add_argument("--tableau")
    compute.set_defaults(func=cmd_compute)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except ResourceLimit as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return RESOURCE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
