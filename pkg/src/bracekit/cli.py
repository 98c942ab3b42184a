"""Command-line front end: build, verify, analyze, bounds, witness, export.

Exit codes: 0 success, 1 verification failure (a checked property does not
hold, or a requested witness provably does not exist / exceeds its budget),
2 invalid input (schema errors, unreadable files, bad parameters).  All
output is deterministic for fixed inputs and seed: JSON is emitted with
sorted keys and reports carry no timestamps.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from .braces import (
    IdealRecord,
    check_axioms,
    ideal_closure,
    is_ideal,
    is_prime_brace,
    is_simple,
    list_ideals,
    star_span,
)
from .bounds import (
    exponent_lower_bounds,
    find_orthogonal_element,
    minimal_witness_dimension,
    witness_block,
)
from .construct import build_family, build_prime_example, load_spec, nonsimple_witness, validate_spec
from .errors import (
    AxiomsNotVerifiedError,
    BracekitError,
    BudgetExceededError,
    ConditionViolationError,
    IncompleteLatticeError,
    NoWitnessError,
    SchemaError,
    SolutionFormatError,
    UnsupportedParameterError,
)
from .groupinfo import group_report
from .ybe import check_solution, export_solution, solution_from_brace

_INPUT_ERRORS = (
    SchemaError,
    SolutionFormatError,
    UnsupportedParameterError,
    ConditionViolationError,
    FileNotFoundError,
    IsADirectoryError,
    PermissionError,
    ValueError,
)
_VERIFICATION_ERRORS = (
    NoWitnessError,
    BudgetExceededError,
    AxiomsNotVerifiedError,
    IncompleteLatticeError,
)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bracekit",
        description="Finite brace construction, verification, and export.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, spec=True):
        if spec:
            p.add_argument("--spec", required=True, help="path to a family spec JSON file")
        p.add_argument("--out", help="write the result here instead of standard output")
        p.add_argument("--budget", type=int, default=1_000_000, help="closure/search budget")
        p.add_argument("--seed", type=int, default=0, help="seed for sampled checks")
        p.add_argument(
            "--threads",
            type=int,
            default=1,
            help="advisory worker count (results are identical for any value)",
        )
        p.add_argument("--json", action="store_true", help="emit machine-readable JSON")

    p = sub.add_parser("build", help="build a family brace and report its shape")
    common(p)

    p = sub.add_parser("verify", help="axiom-check a family brace and test simplicity")
    common(p)
    p.add_argument(
        "--expect-simple",
        action="store_true",
        help="exit 1 unless the brace is verified simple",
    )

    p = sub.add_parser("analyze", help="multiplicative group structure report")
    common(p)

    p = sub.add_parser("bounds", help="unit orders and exponent lower bounds for a prime cycle")
    p.add_argument("--primes", required=True, help="comma-separated primes, e.g. 3,7")
    p.add_argument("--out", help="write the result here instead of standard output")
    p.add_argument("--json", action="store_true", help="emit machine-readable JSON")

    p = sub.add_parser("witness", help="find an orthogonal block witness for (p, p1)")
    p.add_argument("--p", type=int, required=True, help="field characteristic")
    p.add_argument("--p1", type=int, required=True, help="required map order")
    p.add_argument("--dim", type=int, help="dimension (default: the minimal one)")
    p.add_argument("--budget", type=int, default=1_000_000, help="search budget")
    p.add_argument("--out", help="write the result here instead of standard output")
    p.add_argument("--json", action="store_true", help="emit machine-readable JSON")

    p = sub.add_parser("export", help="derive and export the YBE solution table")
    common(p)
    p.add_argument("--samples", type=int, default=1_000_000, help="braid triples when sampled")

    p = sub.add_parser("prime-example", help="build and verify the prime non-simple product")
    common(p, spec=False)
    p.add_argument("--samples", type=int, default=200, help="random closure seeds per side")
    p.add_argument(
        "--full",
        action="store_true",
        help="enumerate the full ideal lattice exhaustively (long-running)",
    )

    return parser


def _emit(payload, out_path) -> None:
    data = payload if isinstance(payload, bytes) else payload.encode("utf-8")
    if out_path:
        Path(out_path).write_bytes(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()


def _render(report: dict, as_json: bool) -> str:
    if as_json:
        return json.dumps(report, sort_keys=True, indent=2) + "\n"
    lines = []
    for key, value in report.items():
        if isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{key}:")
            for i, item in enumerate(value):
                inner = ", ".join(f"{k}={item[k]}" for k in sorted(item))
                lines.append(f"  [{i}] {inner}")
        elif isinstance(value, (list, tuple)):
            lines.append(f"{key} = ({', '.join(str(v) for v in value)})")
        else:
            lines.append(f"{key} = {value}")
    return "\n".join(lines) + "\n"


def _load_valid_spec(args):
    spec = load_spec(args.spec)
    report = validate_spec(spec)
    if not report.ok:
        for failure in report.failures:
            print(f"invalid spec: {failure}", file=sys.stderr)
        return spec, report, False
    return spec, report, True


def _cmd_build(args) -> int:
    spec, report, ok = _load_valid_spec(args)
    if not ok:
        return 2
    B = build_family(spec)
    out = {
        "kind": report.kind,
        "order": B.order,
        "moduli": [int(m) for m in B.codec.moduli],
        "predicted_simple": report.predicted_simple,
        "blocks": report.blocks,
    }
    _emit(_render(out, args.json), args.out)
    return 0


def _cmd_verify(args) -> int:
    spec, report, ok = _load_valid_spec(args)
    if not ok:
        return 2
    B = build_family(spec)
    axioms = check_axioms(B, mode="auto", seed=args.seed)
    result = is_simple(B, budget=args.budget)
    out = {
        "kind": report.kind,
        "order": B.order,
        "axioms_ok": axioms.ok,
        "axioms_mode": axioms.mode,
        "predicted_simple": report.predicted_simple,
        "simple": result.simple,
        "closures_run": result.closures_run,
    }
    if result.simple:
        out["ideal_lattice_sizes"] = [1, B.order]
    else:
        out["certificate_size"] = int(result.certificate.size)
        try:
            witness = nonsimple_witness(B)
            out["witness_size"] = witness.size
            out["certificate_inside_witness"] = bool(
                witness.contains(result.certificate.members)
            )
        except (NoWitnessError, AttributeError):
            pass
    _emit(_render(out, args.json), args.out)
    if not axioms.ok:
        return 1
    if args.expect_simple and not result.simple:
        return 1
    return 0


def _cmd_analyze(args) -> int:
    spec, _, ok = _load_valid_spec(args)
    if not ok:
        return 2
    B = build_family(spec)
    report = group_report(B, budget=args.budget)
    _emit(_render(report.as_dict(), args.json), args.out)
    return 0


def _cmd_bounds(args) -> int:
    primes = tuple(int(tok) for tok in args.primes.split(",") if tok.strip())
    report = exponent_lower_bounds(primes)
    _emit(_render(report.as_dict(), args.json), args.out)
    return 0


def _cmd_witness(args) -> int:
    dim = args.dim if args.dim is not None else minimal_witness_dimension(args.p, args.p1)
    witness = find_orthogonal_element(args.p, args.p1, dim, search_budget=args.budget)
    block = witness_block(witness)
    _emit(json.dumps(block, sort_keys=True, indent=2) + "\n", args.out)
    return 0


def _cmd_export(args) -> int:
    spec, _, ok = _load_valid_spec(args)
    if not ok:
        return 2
    B = build_family(spec)
    axioms = check_axioms(B, mode="auto", seed=args.seed)
    if not axioms.ok:
        print("axiom check failed; not exporting", file=sys.stderr)
        return 1
    table = solution_from_brace(B)
    report = check_solution(table, trials=args.samples, seed=args.seed)
    if not report.ok:
        print(f"solution checks failed: {report}", file=sys.stderr)
        return 1
    if args.out:
        export_solution(table, args.out)
    else:
        export_solution(table, sys.stdout.buffer)
        sys.stdout.buffer.flush()
    return 0


def _record(B, members) -> IdealRecord:
    members = np.asarray(sorted(int(m) for m in np.asarray(members).ravel()), dtype=np.int64)
    mask = np.zeros(B.order, dtype=bool)
    mask[members] = True
    return IdealRecord(
        members=members, size=int(members.size), seeds=(), two_sided=True, mask=mask
    )


def _cmd_prime_example(args) -> int:
    B = build_prime_example()
    inner = np.arange(B.A.order, dtype=np.int64)
    checks = {}
    checks["order"] = B.order == 92160
    checks["inner_is_ideal"] = is_ideal(B, inner)
    star = star_span(B, inner, inner)
    checks["inner_star_reproduces"] = bool(
        np.array_equal(star, inner) and star.size > 1
    )

    rng = np.random.default_rng(args.seed)
    inside = rng.choice(inner[1:], size=args.samples, replace=True)
    ok_inside = all(
        np.array_equal(ideal_closure(B, [int(s)], budget=args.budget).members, inner)
        for s in inside
    )
    checks[f"{args.samples}_inside_seeds_close_to_inner"] = ok_inside
    outside_pool = np.arange(B.A.order, B.order, dtype=np.int64)
    outside = rng.choice(outside_pool, size=args.samples, replace=True)
    ok_outside = all(
        ideal_closure(B, [int(s)], budget=args.budget).size == B.order for s in outside
    )
    checks[f"{args.samples}_outside_seeds_close_to_full"] = ok_outside

    if args.full:
        lattice = list_ideals(B, budget=args.budget)
    else:
        lattice = [
            _record(B, [0]),
            _record(B, inner),
            _record(B, np.arange(B.order, dtype=np.int64)),
        ]
    checks["lattice_size"] = len(lattice)
    prime = is_prime_brace(B, lattice, seed=args.seed, budget=args.budget)
    checks["prime"] = prime.prime

    out = {
        "order": B.order,
        "simple": False,
        "prime": prime.prime,
        "checks": {k: (bool(v) if isinstance(v, (bool, np.bool_)) else v) for k, v in checks.items()},
    }
    _emit(_render(out, args.json), args.out)
    passed = all(v for v in checks.values() if isinstance(v, (bool, np.bool_)))
    return 0 if passed else 1


_HANDLERS = {
    "build": _cmd_build,
    "verify": _cmd_verify,
    "analyze": _cmd_analyze,
    "bounds": _cmd_bounds,
    "witness": _cmd_witness,
    "export": _cmd_export,
    "prime-example": _cmd_prime_example,
}


def run(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    if getattr(args, "budget", 1) < 1 or getattr(args, "threads", 1) < 1:
        print("error: budgets and thread counts must be positive", file=sys.stderr)
        return 2
    try:
        return _HANDLERS[args.command](args)
    except _VERIFICATION_ERRORS as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 1
    except _INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BracekitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
