"""Batch command-line front end.

Exit codes: 0 = computed; 1 = usage error; 2 = refutation found (certify:
a refuting prime; verify-theorem: a nonempty discrepancy list); 3 = budget
exhausted / undecided.

JSON mode emits one top-level document {command, inputs, result,
citations, timings}; human mode prints the same content as text. Defaults
for the prime bound, orbit caps and trap cap can be overridden with the
POLYORBIT_PRIME_BOUND, POLYORBIT_MAX_STEPS, POLYORBIT_MAX_BITS and
POLYORBIT_TRAP_CAP environment variables.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass, field

from .classify import classify
from .modular import PrimeSet, certify_local, is_prime, lemma1_witnesses, primes_up_to
from .orbits import (
    MAX_BITS_DEFAULT,
    MAX_STEPS_DEFAULT,
    BudgetExceededError,
    OrbitKind,
    decide_nilpotency,
)
from .polynomials import Polynomial, PolynomialSyntaxError, ReductionError, parse_poly
from .trap import TRAP_CAP_DEFAULT, trap_first_hits, trap_fixed_points
from .verify import SearchSpace, explore_LN_of_u, explore_N_of_u, verify_theorem

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_REFUTED = 2
EXIT_UNDECIDED = 3

COMMANDS = (
    "orbit", "classify", "certify", "verify-theorem",
    "explore", "trap", "lemma1", "reduce",
)

REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "polyorbit report",
    "type": "object",
    "required": ["command", "inputs", "result", "citations", "timings"],
    "properties": {
        "command": {"type": "string", "enum": list(COMMANDS)},
        "inputs": {"type": "object"},
        "result": {"type": ["object", "array", "boolean"]},
        "citations": {"type": "array", "items": {"type": "string"}},
        "timings": {
            "type": "object",
            "required": ["wall_s"],
            "properties": {"wall_s": {"type": "number"}},
        },
    },
    "additionalProperties": False,
}


class UsageError(ValueError):
    pass


def _env_int(name: str, fallback: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return fallback
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"environment variable {name} must be an integer, got {raw!r}")


@dataclass
class RunConfig:
    """Validated inputs for one batch run."""

    command: str
    poly: Polynomial | None = None
    r: int = 0
    A: PrimeSet = field(default_factory=PrimeSet)
    prime_bound: int = 300
    r_bound: int = 10
    degree: int = 3
    coeff_bound: int = 5
    max_steps: int = MAX_STEPS_DEFAULT
    max_bits: int = MAX_BITS_DEFAULT
    trap_cap: int = TRAP_CAP_DEFAULT
    alpha: int = 0
    beta: int = 0
    gamma: int = 0
    explore_set: str = "N"
    output: str = "human"
    out_path: str | None = None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polyorbit",
        description="Orbits, nilpotency decisions, residue certificates and "
                    "exact classification for iterated integer polynomials.",
    )
    parser.add_argument(
        "--print-schema", action="store_true",
        help="print the JSON report schema and exit",
    )
    sub = parser.add_subparsers(dest="command")

    def common(p, poly=False, r=False, A=False, primes=False):
        if poly:
            p.add_argument("-u", "--poly", required=True,
                           help='polynomial: "-2x^2+7x-3" or "c0,c1,...,cd"')
        if r:
            p.add_argument("-r", type=int, required=True, help="start point")
        if A:
            p.add_argument("-A", type=int, nargs="*", default=[],
                           metavar="P", help="excluded primes")
        if primes:
            p.add_argument("--primes", type=int,
                           default=_env_int("POLYORBIT_PRIME_BOUND", 300),
                           help="prime bound (default 300)")
        p.add_argument("--output", choices=("human", "json"), default="human")
        p.add_argument("--out", default=None, help="also write the JSON report here")
        p.add_argument("--max-steps", type=int,
                       default=_env_int("POLYORBIT_MAX_STEPS", MAX_STEPS_DEFAULT))
        p.add_argument("--max-bits", type=int,
                       default=_env_int("POLYORBIT_MAX_BITS", MAX_BITS_DEFAULT))

    p = sub.add_parser("orbit", help="decide nilpotency of u at r over Z")
    common(p, poly=True, r=True)

    p = sub.add_parser("classify", help="exact classification of (u, r, A)")
    common(p, poly=True, r=True, A=True)

    p = sub.add_parser("certify", help="residue certificates for all primes <= bound")
    common(p, poly=True, r=True, A=True, primes=True)

    p = sub.add_parser("verify-theorem",
                       help="enumerate a coefficient box and cross-check the classifier")
    common(p, r=True, A=True, primes=True)
    p.add_argument("--degree", type=int, default=3)
    p.add_argument("--coeff-bound", type=int, default=5)

    p = sub.add_parser("explore", help="nilpotency / local-nilpotency window for u")
    common(p, poly=True, primes=True)
    p.add_argument("--set", dest="explore_set", choices=("N", "LN"), default="N")
    p.add_argument("--r-bound", type=int, default=10)

    p = sub.add_parser("trap", help="verify the additive-trap properties per prime")
    common(p, primes=True)
    p.add_argument("--trap-cap", type=int,
                   default=_env_int("POLYORBIT_TRAP_CAP", TRAP_CAP_DEFAULT))

    p = sub.add_parser("lemma1", help="cyclic-subgroup witness primes")
    common(p, primes=True)
    p.add_argument("--alpha", type=int, required=True)
    p.add_argument("--beta", type=int, required=True)
    p.add_argument("--gamma", type=int, required=True)

    p = sub.add_parser("reduce", help="move the base point from r to 1")
    common(p, poly=True, r=True)
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(command=args.command)
    if getattr(args, "poly", None) is not None:
        try:
            cfg.poly = parse_poly(args.poly)
        except PolynomialSyntaxError as exc:
            raise UsageError(f"bad polynomial: {exc}")
    if hasattr(args, "r"):
        cfg.r = args.r
    for p in getattr(args, "A", []):
        if not is_prime(p):
            raise UsageError(f"-A entries must be prime; {p} is not")
    cfg.A = PrimeSet(getattr(args, "A", []))
    for attr, name in [
        ("primes", "prime_bound"), ("r_bound", "r_bound"), ("degree", "degree"),
        ("coeff_bound", "coeff_bound"), ("max_steps", "max_steps"),
        ("max_bits", "max_bits"), ("trap_cap", "trap_cap"), ("alpha", "alpha"),
        ("beta", "beta"), ("gamma", "gamma"), ("explore_set", "explore_set"),
        ("output", "output"), ("out", "out_path"),
    ]:
        if hasattr(args, attr):
            setattr(cfg, name, getattr(args, attr))
    return cfg


def _orbit_result(cfg: RunConfig) -> tuple[int, dict]:
    outcome = decide_nilpotency(
        cfg.poly, cfg.r, max_steps=cfg.max_steps, max_bits=cfg.max_bits
    )
    result = {"kind": outcome.kind.value, "steps_used": outcome.steps_used}
    if outcome.index is not None:
        result["index"] = outcome.index
    if outcome.cycle_witness is not None:
        tail, values = outcome.cycle_witness
        result["cycle_witness"] = {"tail_length": tail, "cycle_values": list(values)}
    if outcome.escape_data is not None:
        step, value, bound = outcome.escape_data
        result["escape_data"] = {"step": step, "value": value, "bound": bound}
    code = EXIT_UNDECIDED if outcome.kind is OrbitKind.EXHAUSTED else EXIT_OK
    return code, result


def _classify_result(cfg: RunConfig) -> tuple[int, dict]:
    v = classify(cfg.poly, cfg.r, cfg.A)
    result = {
        "decidable": v.decidable,
        "result": v.result,
        "subclass": v.subclass,
        "index": v.index,
        "citation": v.citation,
        "note": v.note,
    }
    return (EXIT_OK if v.decidable else EXIT_UNDECIDED), result


def _certify_result(cfg: RunConfig) -> tuple[int, dict]:
    report = certify_local(cfg.poly, cfg.r, cfg.A, cfg.prime_bound)
    certs = []
    for cert in report.certificates:
        entry = {"p": cert.p, "kind": cert.kind, "m_p": cert.m_p}
        if cert.cycle is not None:
            tail, values = cert.cycle
            entry["cycle"] = {"tail_length": tail, "cycle_values": list(values)}
        certs.append(entry)
    result = {
        "status": report.status,
        "consistent": report.consistent,
        "refuted_at": report.refuted_at,
        "prime_bound": report.prime_bound,
        "certificates": certs,
    }
    return (EXIT_OK if report.consistent else EXIT_REFUTED), result


def _verify_result(cfg: RunConfig) -> tuple[int, dict]:
    space = SearchSpace(
        degree=cfg.degree, coeff_bound=cfg.coeff_bound, r=cfg.r,
        A=cfg.A, prime_bound=cfg.prime_bound,
    )
    report = verify_theorem(space)
    code = EXIT_REFUTED if report.discrepancies else EXIT_OK
    return code, report.to_dict()


def _explore_result(cfg: RunConfig) -> tuple[int, dict]:
    if cfg.explore_set == "N":
        found = explore_N_of_u(
            cfg.poly, cfg.r_bound, max_steps=cfg.max_steps, max_bits=cfg.max_bits
        )
        entries = [{"r": r, "index": idx} for r, idx in found]
        undecided = any(idx is None for _, idx in found)
    else:
        statuses = explore_LN_of_u(
            cfg.poly, cfg.r_bound, cfg.prime_bound,
            max_steps=cfg.max_steps, max_bits=cfg.max_bits,
        )
        entries = [e.to_dict() for e in statuses]
        undecided = any(e.status == "undecided" for e in statuses)
    result = {"set": cfg.explore_set, "r_bound": cfg.r_bound, "entries": entries}
    return (EXIT_UNDECIDED if undecided else EXIT_OK), result


def _trap_result(cfg: RunConfig) -> tuple[int, dict]:
    per_prime = []
    all_ok = True
    for p in primes_up_to(min(cfg.prime_bound, cfg.trap_cap)):
        hits = trap_first_hits(p, cap=cfg.trap_cap)
        fixed = trap_fixed_points(p, cap=cfg.trap_cap)
        nilpotent = all(step >= 1 for step in hits.values())
        fixed_ok = [(pt.x, pt.y) for pt in fixed] == [(0, 0)]
        all_ok = all_ok and nilpotent and fixed_ok
        per_prime.append({
            "p": p,
            "nilpotent_by_step_p": nilpotent,
            "max_first_hit": max(hits.values()),
            "fixed_points": [[pt.x, pt.y] for pt in fixed],
        })
    result = {"all_ok": all_ok, "primes": per_prime}
    return (EXIT_OK if all_ok else EXIT_REFUTED), result


def _lemma1_result(cfg: RunConfig) -> tuple[int, dict]:
    witnesses = lemma1_witnesses(cfg.alpha, cfg.beta, cfg.gamma, cfg.prime_bound)
    result = {
        "alpha": cfg.alpha, "beta": cfg.beta, "gamma": cfg.gamma,
        "prime_bound": cfg.prime_bound, "witnesses": witnesses,
    }
    return EXIT_OK, result


def _reduce_result(cfg: RunConfig) -> tuple[int, dict]:
    reduced = cfg.poly.reduce_at(cfg.r)
    return EXIT_OK, {"poly": str(cfg.poly), "r": cfg.r, "reduced": str(reduced)}


_HANDLERS = {
    "orbit": _orbit_result,
    "classify": _classify_result,
    "certify": _certify_result,
    "verify-theorem": _verify_result,
    "explore": _explore_result,
    "trap": _trap_result,
    "lemma1": _lemma1_result,
    "reduce": _reduce_result,
}


def _collect_citations(result: dict) -> list[str]:
    if "citation" in result and result["citation"]:
        return [result["citation"]]
    if "per_item_citations" in result:
        return sorted(result["per_item_citations"])
    if "entries" in result:
        seen = []
        for entry in result["entries"]:
            c = entry.get("citation") if isinstance(entry, dict) else None
            if c and c not in seen:
                seen.append(c)
        return seen
    return []


def run(cfg: RunConfig) -> tuple[int, dict]:
    """Dispatch one validated config; returns (exit code, report document)."""
    inputs = {}
    if cfg.poly is not None:
        inputs["poly"] = str(cfg.poly)
    if cfg.command in ("orbit", "classify", "certify", "verify-theorem", "reduce"):
        inputs["r"] = cfg.r
    if cfg.command in ("classify", "certify", "verify-theorem"):
        inputs["A"] = list(cfg.A)
    if cfg.command in ("certify", "verify-theorem", "explore", "trap", "lemma1"):
        inputs["prime_bound"] = cfg.prime_bound
    if cfg.command == "verify-theorem":
        inputs.update(degree=cfg.degree, coeff_bound=cfg.coeff_bound)
    if cfg.command == "explore":
        inputs.update(set=cfg.explore_set, r_bound=cfg.r_bound)
    if cfg.command == "lemma1":
        inputs.update(alpha=cfg.alpha, beta=cfg.beta, gamma=cfg.gamma)

    start = time.perf_counter()
    code, result = _HANDLERS[cfg.command](cfg)
    doc = {
        "command": cfg.command,
        "inputs": inputs,
        "result": result,
        "citations": _collect_citations(result),
        "timings": {"wall_s": round(time.perf_counter() - start, 6)},
    }
    return code, doc


def _render_human(doc: dict) -> str:
    lines = [f"command: {doc['command']}"]
    for key, value in doc["inputs"].items():
        lines.append(f"  {key}: {value}")
    lines.append("result:")
    lines.extend(_render_value(doc["result"], indent=2))
    if doc["citations"]:
        lines.append(f"citations: {', '.join(doc['citations'])}")
    lines.append(f"wall_s: {doc['timings']['wall_s']}")
    return "\n".join(lines)


def _render_value(value, indent: int) -> list[str]:
    pad = " " * indent
    if isinstance(value, dict):
        out = []
        for k, v in value.items():
            if isinstance(v, (dict, list)) and v and not _is_flat(v):
                out.append(f"{pad}{k}:")
                out.extend(_render_value(v, indent + 2))
            else:
                out.append(f"{pad}{k}: {_flat(v)}")
        return out
    if isinstance(value, list):
        out = []
        for item in value:
            if isinstance(item, (dict, list)) and not _is_flat(item):
                out.append(f"{pad}-")
                out.extend(_render_value(item, indent + 2))
            else:
                out.append(f"{pad}- {_flat(item)}")
        return out
    return [f"{pad}{value}"]


def _is_flat(value) -> bool:
    if isinstance(value, list):
        return all(not isinstance(x, (dict, list)) for x in value)
    if isinstance(value, dict):
        return len(value) <= 4 and all(
            not isinstance(x, (dict, list)) for x in value.values()
        )
    return True


def _flat(value) -> str:
    if isinstance(value, dict):
        return "{" + ", ".join(f"{k}={_flat(v)}" for k, v in value.items()) + "}"
    if isinstance(value, list):
        return "[" + ", ".join(_flat(v) for v in value) + "]"
    return str(value)


def _merge_poly_flag(argv: list[str]) -> list[str]:
    # "-u -2x-1" would parse as two flags; fold the value into --poly=...
    out = []
    i = 0
    while i < len(argv):
        if argv[i] in ("-u", "--poly") and i + 1 < len(argv):
            out.append(f"--poly={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    try:
        args = parser.parse_args(_merge_poly_flag(list(argv)))
    except SystemExit as exc:  # remap argparse's exit 2 to the usage code
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    if args.print_schema:
        print(json.dumps(REPORT_SCHEMA, indent=2))
        return EXIT_OK
    if not args.command:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    try:
        cfg = config_from_args(args)
        code, doc = run(cfg)
    except (UsageError, PolynomialSyntaxError, ReductionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceededError as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_UNDECIDED
    if cfg.out_path:
        with open(cfg.out_path, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, indent=2)
            fh.write("\n")
    if cfg.output == "json":
        print(json.dumps(doc, indent=2))
    else:
        print(_render_human(doc))
    return code


if __name__ == "__main__":
    raise SystemExit(main())
