"""Command-line interface.

Subcommands: fedder, sharp-fedder, strong-fedder, fpt, nu, testideal,
closure, witness-check, lemma-audit. Exit code 0 means the computation
completed (an inconclusive verdict is a completed computation), 1 means a
usage or parse error, 2 means a resource cap aborted the run.

Structured output (--json) is a single JSON document with stable field
names; exact rationals are serialized as strings like "5/6" so nothing
downstream can round them. Identical argv produces byte-identical JSON,
which is why timings appear only in the human-readable table output.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .ceilarith import audit_inequalities, default_rational_grid
from .closure import ClosureVerdict, sharp_frobenius_membership, tight_closure_witness_check
from .errors import ParseError, ResourceCapExceeded
from .fpt import fpt_estimate, nu_table
from .ideals import Ideal
from .parser import (
    parse_poly,
    parse_poly_list,
    parse_rational,
    parse_ring,
    poly_to_str,
    rational_to_str,
    ring_to_str,
)
from .poly import PolyRing
from .purity import (
    PairSpec,
    PurityVerdict,
    classic_fpure,
    maximal_ideal,
    sharp_fedder,
    strong_fedder,
    verify_witness,
)
from .testideal import test_ideal

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CAP = 2


def _add_pair_flags(
    sub: argparse.ArgumentParser,
    ideal_help: str = "defining ideal generators, comma separated",
):
    sub.add_argument("--ring", required=True, help='ring spec, e.g. "p=3; vars=x,y"')
    sub.add_argument("--ideal", default="0", help=ideal_help)
    sub.add_argument("--a", default="1", help="pair ideal generators, comma separated")
    sub.add_argument("--t", default="1", help="pair exponent, e.g. 5/6")
    sub.add_argument("--emax", type=int, default=4)


def _add_common_flags(sub: argparse.ArgumentParser):
    sub.add_argument("--json", action="store_true", help="emit structured output")
    sub.add_argument("--seed", type=int, default=0, help="seed echoed into the report")
    sub.add_argument(
        "--verify-witness",
        action="store_true",
        help="recompute every embedded witness containment from scratch",
    )


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="fpurity")
    subs = top.add_subparsers(dest="command", required=True)

    for name in ("fedder", "sharp-fedder", "strong-fedder"):
        sub = subs.add_parser(name)
        _add_pair_flags(sub)
        _add_common_flags(sub)

    sub = subs.add_parser("nu")
    _add_pair_flags(sub)
    _add_common_flags(sub)

    sub = subs.add_parser("fpt")
    _add_pair_flags(sub)
    _add_common_flags(sub)

    sub = subs.add_parser("testideal")
    sub.add_argument("--ring", required=True, help='ring spec, e.g. "p=3; vars=x,y"')
    sub.add_argument("--a", required=True, help="pair ideal generators, comma separated")
    sub.add_argument("--t", default="1", help="pair exponent, e.g. 5/6")
    sub.add_argument("--efloor", type=int, default=None, help="earliest admissible stabilization exponent")
    sub.add_argument("--emax", type=int, default=12, help="chain cap; no stabilization by here aborts")
    _add_common_flags(sub)

    sub = subs.add_parser("closure")
    _add_pair_flags(sub, ideal_help="target ideal the element is probed against")
    sub.add_argument("--defining", default="0", help="defining ideal of the quotient pair")
    sub.add_argument("--z", required=True, help="element probed against the closure")
    _add_common_flags(sub)

    sub = subs.add_parser("witness-check")
    _add_pair_flags(sub, ideal_help="target ideal for the closure containments")
    sub.add_argument("--defining", default="0", help="defining ideal of the quotient pair")
    sub.add_argument("--z", required=True, help="element whose closure membership c witnesses")
    sub.add_argument("--c", required=True, help="witness multiplier")
    _add_common_flags(sub)

    sub = subs.add_parser("lemma-audit")
    sub.add_argument("--p", type=int, required=True)
    sub.add_argument("--emax", type=int, default=5)
    sub.add_argument("--dmax", type=int, default=5)
    sub.add_argument("--nmax", type=int, default=4)
    sub.add_argument("--tmax", type=int, default=12, help="audit all t = a/b with a,b <= tmax")
    _add_common_flags(sub)

    return top


def _parse_ideal(text: str, ring: PolyRing) -> Ideal:
    return Ideal(ring, parse_poly_list(text, ring))


def _make_pair(args, ring: PolyRing, defining: Ideal) -> PairSpec:
    t = parse_rational(args.t)
    a_given = _parse_ideal(args.a, ring)
    if a_given.is_zero():
        raise ParseError("pair ideal must be nonzero", 0)
    # the preimage of the image of the given generators is (gens) + I
    a_preimage = a_given.plus(defining) if not defining.is_zero() else a_given
    return PairSpec(ring, defining, a_preimage, t)


def _ideal_json(I: Ideal) -> list[str]:
    if I.is_zero():
        return ["0"]
    return [poly_to_str(g) for g in I.generators]


def _verdict_json(v: PurityVerdict) -> dict:
    out = {
        "criterion": v.criterion,
        "outcome": v.outcome,
        "e_tested": list(v.e_tested),
        "per_e": {str(e): held for e, held in sorted(v.per_e.items())},
        "note": v.note,
    }
    return out


def _witness_json(v: PurityVerdict) -> dict | None:
    if not v.proven:
        return None
    return {
        "e": v.witness_e,
        "q": str(v.witness_q),
        "generator": poly_to_str(v.witness_poly),
        "escapes": f"m^[{v.witness_q}]",
    }


def _closure_json(v: ClosureVerdict) -> dict:
    return {
        "outcome": v.outcome,
        "e_tested": list(v.e_tested),
        "held_e": list(v.held_e),
        "failed_e": list(v.failed_e),
        "certified_e": v.certified_e,
        "certificate": v.certificate,
        "note": v.note,
    }


def _run_fedder(args, flavor: str) -> dict:
    ring = parse_ring(args.ring)
    defining = _parse_ideal(args.ideal, ring)
    pair = _make_pair(args, ring, defining)
    if flavor == "sharp":
        verdict = sharp_fedder(pair, args.emax)
    elif flavor == "strong":
        verdict = strong_fedder(pair, args.emax)
    else:
        verdict = classic_fpure(pair, range(1, args.emax + 1))
    report = {
        "command": args.command,
        "inputs": _pair_inputs(args, ring, pair),
        "verdict": _verdict_json(verdict),
        "witness": _witness_json(verdict),
    }
    if args.verify_witness and verdict.proven:
        report["witness"]["verified"] = verify_witness(pair, verdict)
    return report


def _pair_inputs(args, ring: PolyRing, pair: PairSpec) -> dict:
    return {
        "ring": ring_to_str(ring),
        "ideal": _ideal_json(pair.defining),
        "a": _ideal_json(pair.a_preimage),
        "t": rational_to_str(pair.t),
        "emax": args.emax,
        "seed": args.seed,
    }


def _run_nu(args) -> dict:
    ring = parse_ring(args.ring)
    a = _parse_ideal(args.a, ring)
    records = nu_table(a, args.emax, maximal_ideal(ring))
    return {
        "command": "nu",
        "inputs": {
            "ring": ring_to_str(ring),
            "a": _ideal_json(a),
            "emax": args.emax,
            "seed": args.seed,
        },
        "nu_table": [
            {
                "e": r.e,
                "q": str(r.q),
                "nu": str(r.nu),
                "lo": rational_to_str(r.lo),
                "hi": rational_to_str(r.hi),
            }
            for r in records
        ],
    }


def _run_fpt(args) -> dict:
    ring = parse_ring(args.ring)
    a = _parse_ideal(args.a, ring)
    est = fpt_estimate(a, args.emax, maximal_ideal(ring))
    report = {
        "command": "fpt",
        "inputs": {
            "ring": ring_to_str(ring),
            "a": _ideal_json(a),
            "emax": args.emax,
            "seed": args.seed,
        },
        "interval": {"lo": rational_to_str(est.lo), "hi": rational_to_str(est.hi)},
        "label": est.label,
        "certificate": None,
        "nu_table": [
            {"e": r.e, "q": str(r.q), "nu": str(r.nu)} for r in est.records
        ],
    }
    if est.certificate:
        report["certificate"] = {
            "t_star": rational_to_str(est.certificate.t_star),
            "e_star": est.certificate.e_star,
            "kind": est.certificate.kind,
            "exact": est.certificate.exact,
        }
    return report


def _run_testideal(args) -> dict:
    ring = parse_ring(args.ring)
    a = _parse_ideal(args.a, ring)
    t = parse_rational(args.t)
    result = test_ideal(a, t, ring, e_floor=args.efloor, e_cap=args.emax)
    return {
        "command": "testideal",
        "inputs": {
            "ring": ring_to_str(ring),
            "a": _ideal_json(a),
            "t": rational_to_str(t),
            "seed": args.seed,
        },
        "tau": _ideal_json(result.tau),
        "stabilized_at": result.stabilized_at,
        "e_floor": result.e_floor,
        "chain": [{"e": e, "ideal": _ideal_json(K)} for e, K in result.chain],
        "note": result.note,
    }


def _quotient_inputs(args, ring: PolyRing, pair: PairSpec) -> dict:
    inputs = _pair_inputs(args, ring, pair)
    inputs["defining"] = inputs.pop("ideal")
    return inputs


def _run_closure(args) -> dict:
    ring = parse_ring(args.ring)
    defining = _parse_ideal(args.defining, ring)
    target = _parse_ideal(args.ideal, ring)
    pair = _make_pair(args, ring, defining)
    z = parse_poly(args.z, ring)
    verdict = sharp_frobenius_membership(z, target, pair, range(1, args.emax + 1))
    return {
        "command": "closure",
        "inputs": _quotient_inputs(args, ring, pair)
        | {"z": poly_to_str(z), "target": _ideal_json(target)},
        "verdict": _closure_json(verdict),
    }


def _run_witness_check(args) -> dict:
    ring = parse_ring(args.ring)
    defining = _parse_ideal(args.defining, ring)
    target = _parse_ideal(args.ideal, ring)
    pair = _make_pair(args, ring, defining)
    z = parse_poly(args.z, ring)
    c = parse_poly(args.c, ring)
    ok, trace = tight_closure_witness_check(z, target, pair, c, args.emax)
    return {
        "command": "witness-check",
        "inputs": _quotient_inputs(args, ring, pair)
        | {"z": poly_to_str(z), "c": poly_to_str(c), "target": _ideal_json(target)},
        "verdict": {
            "consistent": ok,
            "trace": {str(e): held for e, held in sorted(trace.items())},
        },
    }


def _run_lemma_audit(args) -> dict:
    t_set = default_rational_grid(args.tmax, args.tmax)
    report = audit_inequalities(args.p, args.emax, args.dmax, t_set, n_max=args.nmax)
    return {
        "command": "lemma-audit",
        "inputs": {
            "p": args.p,
            "emax": args.emax,
            "dmax": args.dmax,
            "nmax": args.nmax,
            "tmax": args.tmax,
            "seed": args.seed,
        },
        "checks": report.checks,
        "total_checks": report.total_checks,
        "violations": [
            {
                "inequality": v["inequality"],
                "t": rational_to_str(v["t"]),
                "where": {k: v[k] for k in v if k not in ("inequality", "t")},
            }
            for v in report.violations
        ],
    }


def emit(report: dict, fmt: str) -> str:
    """Render a report as an aligned table or a canonical JSON document."""
    if fmt == "structured":
        return json.dumps(report, indent=2, sort_keys=False)
    lines = [f"command: {report['command']}"]
    for key, value in report.items():
        if key == "command":
            continue
        lines.extend(_table_block(key, value))
    return "\n".join(lines)


def _table_block(key: str, value, indent: int = 0) -> list[str]:
    pad = "  " * indent
    if key == "nu_table" and isinstance(value, list):
        lines = [f"{pad}{key}:"]
        header = f"{pad}  {'e':>3} {'q':>8} {'nu':>8} {'lo':>10} {'hi':>10}"
        lines.append(header)
        for row in value:
            lines.append(
                f"{pad}  {row['e']:>3} {row['q']:>8} {row['nu']:>8} "
                f"{row.get('lo', ''):>10} {row.get('hi', ''):>10}"
            )
        return lines
    if isinstance(value, dict):
        lines = [f"{pad}{key}:"]
        for k, v in value.items():
            lines.extend(_table_block(str(k), v, indent + 1))
        return lines
    if isinstance(value, list):
        if not value:
            return [f"{pad}{key}: []"]
        if all(not isinstance(v, (dict, list)) for v in value):
            return [f"{pad}{key}: " + ", ".join(str(v) for v in value)]
        lines = [f"{pad}{key}:"]
        for v in value:
            if isinstance(v, dict):
                lines.append(f"{pad}  -")
                for k2, v2 in v.items():
                    lines.extend(_table_block(str(k2), v2, indent + 2))
            else:
                lines.append(f"{pad}  - {v}")
        return lines
    return [f"{pad}{key}: {value}"]


_RUNNERS = {
    "fedder": lambda args: _run_fedder(args, "classic"),
    "sharp-fedder": lambda args: _run_fedder(args, "sharp"),
    "strong-fedder": lambda args: _run_fedder(args, "strong"),
    "nu": _run_nu,
    "fpt": _run_fpt,
    "testideal": _run_testideal,
    "closure": _run_closure,
    "witness-check": _run_witness_check,
    "lemma-audit": _run_lemma_audit,
}


def run(argv: list[str]) -> tuple[int, str]:
    """Execute a command line; returns (exit code, rendered report)."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return (EXIT_USAGE if exc.code else EXIT_OK), ""
    started = time.perf_counter()
    try:
        report = _RUNNERS[args.command](args)
    except ResourceCapExceeded as exc:
        return EXIT_CAP, f"error: {exc}"
    except (ParseError, ValueError) as exc:
        return EXIT_USAGE, f"error: {exc}"
    if args.json:
        return EXIT_OK, emit(report, "structured")
    elapsed = time.perf_counter() - started
    return EXIT_OK, emit(report, "table") + f"\nelapsed: {elapsed:.3f}s"


def main() -> None:
    code, text = run(sys.argv[1:])
    if text:
        print(text)
    sys.exit(code)


if __name__ == "__main__":
    main()
