"""Command-line interface: feasible, construct, aeaqecc, sweep, weightdist.

Exit codes depend only on the outcome:

    0  success / Feasible
    1  usage error or malformed q
    2  infeasible tuple or violated precondition
    3  out of scope
    4  verification defect or construction gap
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Optional, Sequence

import numpy as np

from . import export
from .code import (
    DEFAULT_ENUM_BOUND,
    INF,
    EnumerationBoundExceeded,
    GrsSpec,
    grs_encode,
    mds_weight_distribution,
    weight_census,
)
from .construct import (
    ConstructionDefect,
    ConstructionGap,
    InfeasibleTuple,
    PairRequest,
    Status,
    construct_pair,
    feasibility,
)
from .field import field_of_order, prime_power
from .quantum import build_pure_mds_aeaqecc, claimed_params

EXIT_OK, EXIT_USAGE, EXIT_INFEASIBLE, EXIT_SCOPE, EXIT_DEFECT = 0, 1, 2, 3, 4
_STATUS_EXIT = {
    Status.FEASIBLE: EXIT_OK,
    Status.INFEASIBLE_PROVEN: EXIT_INFEASIBLE,
    Status.OUT_OF_SCOPE: EXIT_SCOPE,
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit 2, which means "infeasible" here
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _common(suppress: bool) -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--format", choices=("text", "json"), default=d("text"))
    p.add_argument("--out", default=d(None), help="file (or directory for sweep) for the JSON record")
    p.add_argument("--jobs", type=int, default=d(1))
    p.add_argument("--seed", type=int, default=d(None))
    p.add_argument("--enum-bound", type=int, default=d(DEFAULT_ENUM_BOUND), dest="enum_bound")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="mdsintersect", parents=[_common(False)], description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    shared = _common(True)

    def tuple_cmd(name, help_):
        p = sub.add_parser(name, parents=[shared], help=help_)
        for arg in ("q", "n", "k1", "k2", "l"):
            p.add_argument(arg, type=int)
        return p

    tuple_cmd("feasible", "classify a tuple (q, n, k1, k2, l)")
    tuple_cmd("construct", "build and verify an intersection pair")
    tuple_cmd("aeaqecc", "build a pure MDS AEAQECC from an intersection pair")
    p = sub.add_parser("sweep", parents=[shared], help="construct every feasible tuple for one field")
    p.add_argument("q", type=int)
    p.add_argument("--max-dim", type=int, default=6, dest="max_dim")
    p = sub.add_parser("weightdist", parents=[shared], help="MDS weight distribution table")
    for arg in ("q", "n", "k"):
        p.add_argument(arg, type=int)
    p.add_argument("--brute", action="store_true", help="compare with the census of a GRS code")
    return parser


# -- helpers ---------------------------------------------------------------------


def _check_q(q: int, minimum: int = 0) -> None:
    if prime_power(q) is None:
        raise UsageError(f"q={q} is not a prime power")
    if q < minimum:
        raise UsageError(f"q={q} is too small: q >= {minimum} is required")


def _request(args) -> PairRequest:
    return PairRequest(args.q, args.n, args.k1, args.k2, args.l)


def _field_header(q: int) -> str:
    F = field_of_order(q)
    return f"field GF({q}) p={F.p} m={F.m} modulus={list(F.modulus)} generator={F.generator}"


def _matrix_text(name: str, rows) -> list[str]:
    out = [f"{name} ({len(rows)}x{len(rows[0]) if rows else 0}):"]
    out += ["  " + " ".join(str(x) for x in r) for r in rows]
    return out


def _write(path: Optional[str], record: dict) -> None:
    if path:
        with open(path, "w") as fh:
            fh.write(export.dumps(record) + "\n")


def _emit(args, report: export.RunReport, text_lines: Sequence[str]) -> int:
    if args.format == "json":
        print(export.dumps(export.report_to_dict(report)))
    else:
        print("\n".join(text_lines))
    return report.exit_code


# -- commands ------------------------------------------------------------------------


def cmd_feasible(args) -> int:
    _check_q(args.q)
    req = _request(args)
    verdict = feasibility(req)
    report = export.RunReport(
        command="feasible",
        request=export.request_to_dict(req),
        verdict=export.verdict_to_dict(verdict),
        exit_code=_STATUS_EXIT[verdict.status],
    )
    _write(args.out, export.report_to_dict(report))
    return _emit(args, report, [str(verdict)])


def _failure(args, command, req, verdict, code, message) -> int:
    report = export.RunReport(
        command=command,
        request=export.request_to_dict(req),
        verdict=export.verdict_to_dict(verdict) if verdict else None,
        verification={"error": message},
        exit_code=code,
    )
    if args.format == "json":
        print(export.dumps(export.report_to_dict(report)))
    print(message, file=sys.stderr)
    return code


def cmd_construct(args) -> int:
    _check_q(args.q)
    req = _request(args)
    verdict = feasibility(req)
    if not verdict.feasible:
        return _failure(args, "construct", req, verdict, _STATUS_EXIT[verdict.status], str(verdict))
    t0 = time.perf_counter()
    try:
        pair = construct_pair(req)
    except (ConstructionGap, ConstructionDefect) as exc:
        return _failure(args, "construct", req, verdict, EXIT_DEFECT, f"{type(exc).__name__}: {exc}")
    elapsed = time.perf_counter() - t0
    record = export.pair_to_dict(pair)
    _write(args.out, record)
    report = export.RunReport(
        command="construct",
        request=export.request_to_dict(req),
        verdict=export.verdict_to_dict(verdict),
        artifacts={"pair": record},
        verification={"l_claimed": pair.l_claimed, "l_verified": pair.l_verified, "mds": True, **pair.oracles},
        timing={"construct_seconds": elapsed},
    )
    lines = [
        _field_header(req.q),
        f"route {pair.route}",
        f"[n,k1,k2,l] = [{req.n},{req.k1},{req.k2},{req.l}]  l_verified={pair.l_verified}",
        f"oracles {pair.oracles}",
        *_matrix_text("G1", pair.C1.G.tolist()),
        *_matrix_text("G2", pair.C2.G.tolist()),
        *_matrix_text("intersection basis", pair.intersection_basis.tolist()),
    ]
    return _emit(args, report, lines)


def cmd_aeaqecc(args) -> int:
    _check_q(args.q)
    req = _request(args)
    t0 = time.perf_counter()
    try:
        pair, params = build_pure_mds_aeaqecc(*req.astuple(), bound=args.enum_bound)
    except (ValueError, InfeasibleTuple) as exc:
        return _failure(args, "aeaqecc", req, None, EXIT_INFEASIBLE, str(exc))
    except (ConstructionGap, ConstructionDefect) as exc:
        return _failure(args, "aeaqecc", req, None, EXIT_DEFECT, f"{type(exc).__name__}: {exc}")
    elapsed = time.perf_counter() - t0
    claimed = claimed_params(*req.astuple())
    pair_record = export.pair_to_dict(pair)
    record = export.params_to_dict(params, pair=pair_record)
    _write(args.out, record)
    rows = [(name, getattr(params, name), getattr(claimed, name)) for name in ("n", "k", "dz", "dx", "c", "pure", "mds")]
    report = export.RunReport(
        command="aeaqecc",
        request=export.request_to_dict(req),
        artifacts={"aeaqecc": record},
        verification={name: {"computed": a, "claimed": b} for name, a, b in rows},
        timing={"seconds": elapsed},
    )
    lines = [
        _field_header(req.q),
        f"{params}  pure={params.pure} mds={params.mds}  (pair route {pair.route})",
        f"{'':8}{'computed':>10}{'claimed':>10}",
        *[f"{name:8}{str(a):>10}{str(b):>10}" for name, a, b in rows],
    ]
    return _emit(args, report, lines)


def sweep_tuples(q: int, max_dim: int) -> list[PairRequest]:
    out = []
    for n in range(1, q + 3):
        top = min(n, max_dim)
        for k1 in range(top + 1):
            for k2 in range(top + 1):
                for l in range(min(k1, k2) + 1):
                    out.append(PairRequest(q, n, k1, k2, l))
    return out


def _sweep_one(req: PairRequest) -> tuple:
    verdict = feasibility(req)
    if not verdict.feasible:
        return (req.astuple(), verdict.status.value, None, "skipped", verdict.reason)
    try:
        pair = construct_pair(req)
    except ConstructionGap as exc:
        return (req.astuple(), verdict.status.value, verdict.route, "gap", str(exc))
    except ConstructionDefect as exc:
        return (req.astuple(), verdict.status.value, verdict.route, "defect", str(exc))
    return (req.astuple(), verdict.status.value, pair.route, "verified", "")


def run_sweep(q: int, max_dim: int, jobs: int = 1) -> list[tuple]:
    tuples = sweep_tuples(q, max_dim)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_sweep_one, tuples, chunksize=16))
    else:
        results = [_sweep_one(t) for t in tuples]
    return sorted(results, key=lambda r: r[0])


def cmd_sweep(args) -> int:
    _check_q(args.q, minimum=3)
    t0 = time.perf_counter()
    results = run_sweep(args.q, args.max_dim, args.jobs)
    elapsed = time.perf_counter() - t0
    counts = {
        "tuples": len(results),
        "Feasible": sum(r[1] == "Feasible" for r in results),
        "verified": sum(r[3] == "verified" for r in results),
        "gaps": sum(r[3] == "gap" for r in results),
        "defects": sum(r[3] == "defect" for r in results),
        "InfeasibleProven": sum(r[1] == "InfeasibleProven" for r in results),
        "OutOfScope": sum(r[1] == "OutOfScope" for r in results),
    }
    failed = [r for r in results if r[3] in ("gap", "defect")]
    code = EXIT_DEFECT if failed else EXIT_OK
    report = export.RunReport(
        command="sweep",
        request={"q": args.q, "max_dim": args.max_dim, "jobs": args.jobs},
        artifacts={
            "results": [
                {"tuple": list(t), "status": s, "route": r, "outcome": o, "detail": d} for t, s, r, o, d in results
            ]
        },
        verification=counts,
        timing={"seconds": elapsed},
        exit_code=code,
    )
    if args.out:
        os.makedirs(args.out, exist_ok=True)
        _write(os.path.join(args.out, f"sweep_q{args.q}.json"), export.report_to_dict(report))
    lines = [f"sweep q={args.q} max_dim={args.max_dim}: " + " ".join(f"{k}={v}" for k, v in counts.items())]
    lines += [f"  {o.upper()} (q,n,k1,k2,l)={t} route={r}" for t, _, r, o, _ in failed]
    lines.append(f"({elapsed:.1f}s)")
    return _emit(args, report, lines)


def grs_instance(q: int, n: int, k: int, seed: Optional[int] = None):
    """[n, k] GRS code on the first n points of F_q^*, 0, ∞; random multipliers if seeded."""
    F = field_of_order(q)
    if not 1 <= n <= q + 1:
        raise UsageError(f"a GRS instance needs 1 <= n <= q+1 = {q + 1}")
    points = (F.nonzero + (0, INF))[:n]
    if seed is None:
        v = (1,) * n
    else:
        v = tuple(int(x) for x in np.random.default_rng(seed).integers(1, q, size=n))
    return grs_encode(GrsSpec(F, points, v, k), tag=f"GRS_{k}")


def cmd_weightdist(args) -> int:
    _check_q(args.q)
    q, n, k = args.q, args.n, args.k
    if not 1 <= k < n:
        return _failure(args, "weightdist", PairRequest(q, n, k, k, k), None, EXIT_INFEASIBLE, f"need 1 <= k < n, got k={k}, n={n}")
    A = mds_weight_distribution(n, k, q)
    census = None
    if args.brute:
        try:
            census = weight_census(grs_instance(q, n, k, args.seed), bound=args.enum_bound).tolist()
        except (UsageError, EnumerationBoundExceeded) as exc:
            return _failure(args, "weightdist", PairRequest(q, n, k, k, k), None, EXIT_INFEASIBLE, str(exc))
    diff = [i for i in range(n + 1) if census is not None and census[i] != A[i]]
    d = n - k + 1
    zero_rows = [i for i in range(d, n + 1) if A[i] == 0]
    report = export.RunReport(
        command="weightdist",
        request={"q": q, "n": n, "k": k, "brute": args.brute, "seed": args.seed},
        artifacts={"formula": A, "census": census},
        verification={"diff": diff, "sum": sum(A), "q^k": q**k, "zero_rows": zero_rows},
        exit_code=EXIT_DEFECT if diff or sum(A) != q**k else EXIT_OK,
    )
    head = f"{'i':>4}{'A_i':>14}" + (f"{'census':>14}" if census is not None else "")
    lines = [f"[{n},{k},{d}]_{q} MDS weight distribution", head]
    for i in range(n + 1):
        row = f"{i:>4}{A[i]:>14}" + (f"{census[i]:>14}" if census is not None else "")
        if i in zero_rows:
            row += "   <- A_i = 0"
        if i in diff:
            row += "   MISMATCH"
        lines.append(row)
    lines.append(f"sum = {sum(A)} (q^k = {q**k})" + (f"; diff = {diff}" if census is not None else ""))
    return _emit(args, report, lines)


COMMANDS = {
    "feasible": cmd_feasible,
    "construct": cmd_construct,
    "aeaqecc": cmd_aeaqecc,
    "sweep": cmd_sweep,
    "weightdist": cmd_weightdist,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"mdsintersect: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
