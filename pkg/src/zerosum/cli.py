"""Command-line interface: ``zerosum <command> ...``.

Exit codes for ``construct``: 0 certificate written, 2 no such subspace
exists, 3 search budget exhausted.  ``verify`` exits 0 iff every check
passes.
"""

from __future__ import annotations

import argparse
import json
import sys

from .census import affine_sample_check, census_run, curve_point_count
from .construct import SearchBudget, ZeroSumCertificate, build_zero_sum, verify_certificate
from .errors import NoSolution, NotExist
from .gf2n import find_irreducible


def _write(text: str, path: str | None) -> None:
    if path:
        with open(path, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def cmd_field(args) -> int:
    print(find_irreducible(args.n).hex())
    return 0


def cmd_construct(args) -> int:
    budget = SearchBudget(max_trials=args.max_trials, seed=args.seed)
    try:
        cert = build_zero_sum(args.n, args.k, budget)
    except NotExist as exc:
        print(f"not-exist: {exc}", file=sys.stderr)
        return 2
    except NoSolution as exc:
        print(f"no-solution: {exc}", file=sys.stderr)
        return 3
    _write(cert.to_json(), args.out)
    return 0


def cmd_verify(args) -> int:
    with open(args.cert) as fh:
        text = fh.read()
    try:
        cert = ZeroSumCertificate.from_json(text)
    except (ValueError, KeyError, TypeError) as exc:
        print(f"FAIL parse: {exc}")
        return 1
    report = verify_certificate(cert, args.direct_max_k)
    print(report)
    return 0 if report.ok else 1


def cmd_census(args) -> int:
    budget = SearchBudget(max_trials=args.max_trials, seed=args.seed)
    report = census_run(args.n, args.mode, budget, counts=args.counts)
    _write(report.to_json(), args.out)
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write(report.to_csv())
    return 0


def cmd_curve_count(args) -> int:
    print(curve_point_count(args.n, args.l, args.seed).to_json())
    return 0


def cmd_affine_check(args) -> int:
    ok, bad = affine_sample_check(args.n, args.trials, args.seed)
    out = {"n": args.n, "trials": args.trials, "seed": args.seed, "pass": ok}
    if bad is not None:
        offset, basis = bad
        out["counterexample"] = {"offset": format(offset, "x"),
                                 "basis": [format(b, "x") for b in basis]}
    print(json.dumps(out))
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="zerosum", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("field", help="print the modulus of GF(2^n)")
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(fn=cmd_field)

    s = sub.add_parser("construct", help="build a zero-sum certificate")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--max-trials", type=int, default=1000)
    s.add_argument("--out")
    s.set_defaults(fn=cmd_construct)

    s = sub.add_parser("verify", help="check a certificate file")
    s.add_argument("--cert", required=True)
    s.add_argument("--direct-max-k", type=int, default=20)
    s.set_defaults(fn=cmd_verify)

    s = sub.add_parser("census", help="determine which dimensions have zero-sum subspaces")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--mode", choices=("exhaustive", "constructive"), default="exhaustive")
    s.add_argument("--counts", action="store_true")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--max-trials", type=int, default=1000)
    s.add_argument("--out")
    s.add_argument("--csv", help="also write n,k,member,method rows here")
    s.set_defaults(fn=cmd_census)

    s = sub.add_parser("curve-count", help="count completions of a fixed tuple")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--l", type=int, required=True)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(fn=cmd_curve_count)

    s = sub.add_parser("affine-check", help="sample affine subspaces avoiding 0")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--trials", type=int, required=True)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(fn=cmd_affine_check)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
