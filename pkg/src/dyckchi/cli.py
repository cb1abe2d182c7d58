"""Command-line front end.

Exit codes: 0 when every check passes, 1 when a counterexample is found,
2 for usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable

from . import verify as V
from .chi import chi, t_slice
from .dyck import (
    all_paths,
    cells_json,
    dinv_pairs,
    parse_path,
    reading_labels,
    reverse,
    zeta,
    zeta_inverse,
)
from .partition import (
    alpha_inv,
    alpha_quinv,
    corner_count,
    parse_partition,
    partitions,
    path_balanced,
    path_inv,
    path_quinv,
)

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _path_arg(text: str):
    try:
        return parse_path(text)
    except ValueError as exc:
        raise UsageError(f"malformed path {text!r}: {exc}") from None


def _partition_arg(text: str):
    try:
        lam = parse_partition(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if not lam:
        raise UsageError("empty partition")
    return lam


def _dump(obj) -> str:
    return json.dumps(obj, default=V._json_default)


# -- dyck ----------------------------------------------------------------


def cmd_dyck(args) -> int:
    p = _path_arg(args.path)
    if args.action == "stats":
        labels = reading_labels(p)
        print(_dump({
            "path": p.steps,
            "semilength": p.semilength,
            "area": cells_json(p.area_cells),
            "corners": cells_json(p.corners),
            "x_coords": list(p.x_coords),
            "sigma": list(labels.sigma),
            "dinv_pairs": cells_json(dinv_pairs(p)),
        }))
    else:
        fn = {"zeta": zeta, "zeta-inv": zeta_inverse, "rev": reverse}[args.action]
        print(fn(p).steps)
    return EXIT_OK


# -- chi -----------------------------------------------------------------


def cmd_chi(args) -> int:
    p = _path_arg(args.path)
    f = chi(p).func
    if args.slice is not None:
        if args.slice == "bottom":
            k = 0
        elif args.slice == "top":
            k = len(p.corners)
        elif args.slice.startswith("t="):
            try:
                k = int(args.slice[2:])
            except ValueError:
                raise UsageError(f"bad slice {args.slice!r}") from None
        else:
            raise UsageError(f"bad slice {args.slice!r}; use bottom, top or t=K")
        f = t_slice(f, k)
    print(_dump(f.to_basis(args.basis).to_json()))
    return EXIT_OK


# -- lambda --------------------------------------------------------------


def cmd_lambda(args) -> int:
    lam = _partition_arg(args.partition)
    if args.action == "paths":
        out = {
            "inv": path_inv(lam).steps,
            "quinv": path_quinv(lam).steps,
            "balanced": path_balanced(lam).steps,
        }
    else:
        out = {
            "alpha_inv": alpha_inv(lam),
            "alpha_quinv": alpha_quinv(lam),
            "corner_count": corner_count(lam),
        }
    if args.json:
        print(_dump(out))
    else:
        for key, val in out.items():
            print(f"{key}\t{val}")
    return EXIT_OK


# -- verify / scan -------------------------------------------------------

# name -> (function, instance decoder)
_CHECKS: dict[str, tuple[Callable, Callable]] = {
    "main-theorem": (V.verify_main_theorem, tuple),
    "zeta-conjugation": (V.verify_zeta_conjugation, tuple),
    "rev-invariance": (V.verify_rev_invariance, parse_path),
    "corner-flip": (V.verify_corner_flip, parse_path),
    "omega-bar": (V.verify_omega_bar, parse_path),
    "closed-forms": (V.verify_closed_forms, int),
    "schur-positivity": (V.verify_schur_positivity, parse_path),
}


def _run_one(job):
    name, instance = job
    fn, decode = _CHECKS[name]
    return fn(decode(instance)).to_json()


def _emit(name: str, jobs: list, worker, n_jobs: int, out) -> int:
    """Run jobs (in parallel if asked), stream JSON lines, then a summary line."""
    if n_jobs > 1:
        with ProcessPoolExecutor(n_jobs) as pool:
            results: Iterable = pool.map(worker, jobs, chunksize=max(1, len(jobs) // (4 * n_jobs)))
            return _summarize(name, results, len(jobs), out)
    return _summarize(name, map(worker, jobs), len(jobs), out)


def _summarize(name: str, results: Iterable[dict], count: int, out) -> int:
    failed = 0
    for rec in results:
        failed += not rec["pass"]
        out.write(_dump(rec) + "\n")
        out.flush()
    summary = {
        "check": name,
        "instance": "summary",
        "pass": failed == 0,
        "counterexample": None,
        "details": {"instances": count, "failed": failed},
    }
    out.write(_dump(summary) + "\n")
    out.flush()
    return EXIT_OK if failed == 0 else EXIT_COUNTEREXAMPLE


def _cap(n: int, flag: str) -> int:
    if n < 0:
        raise UsageError(f"{flag} must be non-negative")
    cap = os.environ.get("CHI_MAX_SEMILENGTH")
    if cap is not None:
        try:
            cap_n = int(cap)
        except ValueError:
            raise UsageError(f"CHI_MAX_SEMILENGTH is not an integer: {cap!r}") from None
        if n > cap_n:
            raise UsageError(f"{flag} {n} exceeds CHI_MAX_SEMILENGTH={cap_n}")
    return n


def _paths_upto(n: int) -> list[str]:
    return [p.steps for m in range(n + 1) for p in all_paths(m)]


def _partitions_upto(n: int) -> list[tuple]:
    return [lam for m in range(1, n + 1) for lam in partitions(m)]


def cmd_verify(args) -> int:
    name = args.check
    if name == "block-swap":
        if args.blocks is None or args.i is None:
            raise UsageError("block-swap needs --blocks and --i")
        try:
            blocks = tuple(int(b) for b in args.blocks.split(","))
        except ValueError:
            raise UsageError(f"bad block list {args.blocks!r}") from None
        try:
            report = V.verify_block_swap(blocks, args.i)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        return _summarize(name, [report.to_json()], 1, sys.stdout)
    if name in ("main-theorem", "zeta-conjugation"):
        if args.lambda_ is not None:
            jobs = [tuple(_partition_arg(args.lambda_))]
        elif args.max_size is not None:
            jobs = _partitions_upto(_cap(args.max_size, "--max-size"))
        else:
            raise UsageError(f"{name} needs --max-size or --lambda")
    elif name == "closed-forms":
        if args.n is None or args.n < 1:
            raise UsageError("closed-forms needs --n >= 1")
        jobs = [_cap(args.n, "--n")]
    else:
        if args.max_semilength is None:
            raise UsageError(f"{name} needs --max-semilength")
        jobs = _paths_upto(_cap(args.max_semilength, "--max-semilength"))
    return _emit(name, [(name, j) for j in jobs], _run_one, args.jobs, sys.stdout)


def cmd_scan(args) -> int:
    jobs = [("schur-positivity", p) for p in _paths_upto(_cap(args.max_semilength, "--max-semilength"))]
    if args.out:
        with open(args.out, "w") as fh:
            return _emit("schur-positivity", jobs, _run_one, args.jobs, fh)
    return _emit("schur-positivity", jobs, _run_one, args.jobs, sys.stdout)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dyckchi", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dyck", help="path statistics and maps")
    p.add_argument("action", choices=["stats", "zeta", "zeta-inv", "rev"])
    p.add_argument("path")
    p.set_defaults(func=cmd_dyck)

    p = sub.add_parser("chi", help="characteristic function of a path")
    p.add_argument("action", choices=["compute"])
    p.add_argument("path")
    p.add_argument("--basis", choices=["monomial", "schur"], default="monomial")
    p.add_argument("--slice", help="bottom, top or t=K")
    p.set_defaults(func=cmd_chi)

    p = sub.add_parser("lambda", help="partition-indexed paths and exponents")
    p.add_argument("action", choices=["paths", "alpha"])
    p.add_argument("partition", help='comma-separated parts, e.g. "3,2"')
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_lambda)

    p = sub.add_parser("verify", help="check identities; JSON lines on stdout")
    p.add_argument("check", choices=sorted(list(_CHECKS) + ["block-swap"]))
    p.add_argument("--max-size", type=int)
    p.add_argument("--lambda", dest="lambda_")
    p.add_argument("--max-semilength", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--blocks")
    p.add_argument("--i", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scan", help="exhaustive scans over paths")
    p.add_argument("check", choices=["schur-positivity"])
    p.add_argument("--max-semilength", type=int, required=True)
    p.add_argument("--out")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_scan)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "jobs", 1) < 1:
        parser.error("--jobs must be at least 1")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"dyckchi: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
