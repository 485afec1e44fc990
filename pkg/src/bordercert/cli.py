"""Command-line front end.

Subcommands: inspect, modify, verify, tangent, certify, batch.  Exit codes:
0 success, 2 argument error, 3 inconclusive certification or failed
verification, 4 internal invariant violation.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import List, Optional

from .borderbasis import is_border_basis, specialize_system
from .certify import (
    SYMBOLIC_BUDGET,
    certify,
    inspect_signature,
    report_to_json_dict,
)
from .coeffring import IndeterminateRegistry, validated_prime
from .modification import build_generic_modification, build_targets, render_targets
from .monomial import ArgumentError, InternalInvariantError
from .orderideal import Signature, build, shape_to_signature
from .tangent import dim_U, random_assignment, tangent_dimension
from .version import __version__

EXIT_OK = 0
EXIT_ARGUMENT = 2
EXIT_INCONCLUSIVE = 3
EXIT_INTERNAL = 4


@dataclasses.dataclass(frozen=True)
class RunConfig:
    """A fully resolved invocation: one subcommand plus its settings."""

    subcommand: str
    signature: Optional[str] = None
    shape: Optional[str] = None
    trials: int = 3
    seed: int = 1
    field: str = "exact"
    prime: Optional[int] = None
    json_path: Optional[str] = None
    dump_path: Optional[str] = None
    input_path: Optional[str] = None
    budget: int = SYMBOLIC_BUDGET
    include_timings: bool = True
    jobs: int = 1
    verbosity: int = 0

    def __post_init__(self) -> None:
        if self.subcommand != "batch" and (self.signature is None) == (self.shape is None):
            raise ArgumentError("provide exactly one of --signature or --shape")
        if self.field not in ("exact", "prime"):
            raise ArgumentError(f"field must be 'exact' or 'prime', got {self.field!r}")
        if self.trials < 1:
            raise ArgumentError("trials must be at least 1")

    def resolved_signature(self) -> Signature:
        if self.signature is not None:
            n, r, s, delta, w = _parse_ints(self.signature, 5, "--signature")
            return Signature(n, r, s, delta, w)
        assert self.shape is not None
        n, kappa, r, s = _parse_ints(self.shape, 4, "--shape")
        return shape_to_signature(n, kappa, r, s)

    def resolved_prime(self) -> Optional[int]:
        if self.prime is not None:
            return validated_prime(self.prime)
        env = os.environ.get("BORDERCERT_PRIME")
        if env:
            if not env.strip().isdigit():
                raise ArgumentError(f"BORDERCERT_PRIME must be an integer, got {env!r}")
            return validated_prime(int(env.strip()))
        return None


def _parse_ints(text: str, count: int, what: str) -> List[int]:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != count or not all(p.lstrip("-").isdigit() for p in parts if p):
        raise ArgumentError(f"{what} must be {count} comma-separated integers, got {text!r}")
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise ArgumentError(f"{what} must be {count} comma-separated integers, got {text!r}")


def _add_signature_flags(p: argparse.ArgumentParser) -> None:
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--signature", help="n,r,s,delta,w")
    group.add_argument("--shape", help="n,kappa,r,s (converted to a signature)")


def _add_field_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--field", choices=("exact", "prime"), default="exact")
    p.add_argument("--prime", type=int, default=None, help="modulus for --field prime")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bordercert",
        description="Construct, modify, verify, and certify a family of border bases.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("inspect", help="structural summary of one signature")
    _add_signature_flags(p)
    p.add_argument("-v", "--verbose", action="count", default=0)
    p.add_argument("--json", metavar="PATH", help="write the summary as JSON")

    p = sub.add_parser("modify", help="emit the target-assignment dump")
    _add_signature_flags(p)
    p.add_argument("-v", "--verbose", action="count", default=0)
    p.add_argument(
        "--dump-targets",
        metavar="PATH",
        help="also write the dump to a file (stdout either way)",
    )

    p = sub.add_parser("verify", help="border-basis check of the modified system")
    _add_signature_flags(p)
    p.add_argument("-v", "--verbose", action="count", default=0)
    p.add_argument("--trials", type=int, default=3)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--budget", type=int, default=SYMBOLIC_BUDGET)
    _add_field_flags(p)

    p = sub.add_parser("tangent", help="tangent dimension at one specialization")
    _add_signature_flags(p)
    p.add_argument("-v", "--verbose", action="count", default=0)
    p.add_argument("--seed", type=int, default=1)
    _add_field_flags(p)

    p = sub.add_parser("certify", help="full certification pipeline")
    _add_signature_flags(p)
    p.add_argument("-v", "--verbose", action="count", default=0)
    p.add_argument("--trials", type=int, default=3)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--budget", type=int, default=SYMBOLIC_BUDGET)
    p.add_argument("--json", metavar="PATH", help="write the report as JSON")
    p.add_argument("--no-timings", action="store_true", help="omit timings from output")
    _add_field_flags(p)

    p = sub.add_parser("batch", help="certify every signature in a file")
    p.add_argument("input", help="file with one signature n,r,s,delta,w per line")
    p.add_argument("-v", "--verbose", action="count", default=0)
    p.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    p.add_argument("--trials", type=int, default=3)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--budget", type=int, default=SYMBOLIC_BUDGET)
    p.add_argument("--json", metavar="PATH", help="write JSON lines to a file")
    p.add_argument("--no-timings", action="store_true")
    _add_field_flags(p)
    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        subcommand=args.command,
        signature=getattr(args, "signature", None),
        shape=getattr(args, "shape", None),
        trials=getattr(args, "trials", 3),
        seed=getattr(args, "seed", 1),
        field=getattr(args, "field", "exact"),
        prime=getattr(args, "prime", None),
        json_path=getattr(args, "json", None),
        dump_path=getattr(args, "dump_targets", None),
        input_path=getattr(args, "input", None),
        budget=getattr(args, "budget", SYMBOLIC_BUDGET),
        include_timings=not getattr(args, "no_timings", False),
        jobs=getattr(args, "jobs", 1),
        verbosity=getattr(args, "verbose", 0),
    )


def _cmd_inspect(config: RunConfig) -> int:
    info = inspect_signature(config.resolved_signature())
    if config.json_path:
        with open(config.json_path, "w") as f:
            json.dump(info, f, indent=2)
            f.write("\n")
    print(f"signature  {tuple(info['signature'])}")
    print(f"hilbert    {tuple(info['hilbert'])}")
    for key in ("mu", "nu", "ell", "tau", "gamma", "eta", "dimU", "principalDim"):
        print(f"{key:<10} {info[key]}")
    print(f"leading    {', '.join(info['leading'])}")
    print(f"trailing   {', '.join(info['trailing'])}")
    print(f"leadTargets {', '.join(info['leadTargets'])}")
    print(f"deepTargets {', '.join(info['deepTargets'])}")
    if config.verbosity > 0:
        print(f"basis      {', '.join(info['basis'])}")
        print(f"border     {', '.join(info['border'])}")
        print(f"anchors    {', '.join(info['translationAnchors'])}")
    return EXIT_OK


def _cmd_modify(config: RunConfig) -> int:
    oid = build(config.resolved_signature())
    text = render_targets(oid, build_targets(oid)) + "\n"
    sys.stdout.write(text)
    if config.dump_path:
        with open(config.dump_path, "w") as f:
            f.write(text)
    return EXIT_OK


def _cmd_verify(config: RunConfig) -> int:
    prime = config.resolved_prime()
    oid = build(config.resolved_signature())
    registry = IndeterminateRegistry(oid)
    system = build_generic_modification(oid, registry)
    ok_all = True
    if system.total_tail_terms() <= config.budget:
        ok, failures = is_border_basis(system)
        ok_all = ok
        print(f"symbolic border-basis check: {'ok' if ok else 'FAILED'}")
        for pair, residue in failures[:5]:
            print(f"  pair {pair}: residue {residue}", file=sys.stderr)
    else:
        for k in range(config.trials):
            seed = config.seed + k
            spec = specialize_system(
                system,
                random_assignment(registry, seed),
                field=config.field,
                prime=prime,
            )
            ok, failures = is_border_basis(spec)
            ok_all = ok_all and ok
            print(f"seed {seed} border-basis check: {'ok' if ok else 'FAILED'}")
            for pair, residue in failures[:5]:
                print(f"  pair {pair}: residue {residue}", file=sys.stderr)
    return EXIT_OK if ok_all else EXIT_INCONCLUSIVE


def _cmd_tangent(config: RunConfig) -> int:
    prime = config.resolved_prime()
    oid = build(config.resolved_signature())
    registry = IndeterminateRegistry(oid)
    system = build_generic_modification(oid, registry)
    spec = specialize_system(
        system,
        random_assignment(registry, config.seed),
        field=config.field,
        prime=prime,
    )
    tangent = tangent_dimension(spec)
    print(f"tangentDim {tangent}")
    print(f"dimU       {dim_U(oid)}")
    print(f"field      {config.field}")
    print(f"seed       {config.seed}")
    return EXIT_OK


def _cmd_certify(config: RunConfig) -> int:
    report = certify(
        config.resolved_signature(),
        trials=config.trials,
        field_kind=config.field,
        seed=config.seed,
        prime=config.resolved_prime(),
        budget=config.budget,
    )
    payload = report_to_json_dict(report, include_timings=config.include_timings)
    if config.json_path:
        with open(config.json_path, "w") as f:
            json.dump(payload, f, indent=2)
            f.write("\n")
    print(f"signature     {report.signature}")
    print(f"verdict       {report.verdict}")
    print(f"dimU          {report.dimU}")
    print(f"principalDim  {report.principalDim}")
    print(f"tangent dims  {[t['tangentDim'] for t in report.trials]}")
    print(f"verification  {report.verificationMode}")
    for note in report.evidence:
        print(f"note: {note}", file=sys.stderr)
    return EXIT_OK if report.verdict != "INCONCLUSIVE" else EXIT_INCONCLUSIVE


def _batch_entry(task) -> dict:
    line, trials, field_kind, seed, prime, budget, include_timings = task
    try:
        n, r, s, delta, w = _parse_ints(line, 5, "signature line")
        report = certify(
            Signature(n, r, s, delta, w),
            trials=trials,
            field_kind=field_kind,
            seed=seed,
            prime=prime,
            budget=budget,
        )
        return report_to_json_dict(report, include_timings=include_timings)
    except Exception as exc:  # one bad signature must not abort the batch
        return {"signature": line, "error": f"{type(exc).__name__}: {exc}"}


def _cmd_batch(config: RunConfig) -> int:
    prime = config.resolved_prime()
    assert config.input_path is not None
    with open(config.input_path) as f:
        lines = [ln.strip() for ln in f]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    tasks = [
        (
            ln,
            config.trials,
            config.field,
            config.seed,
            prime,
            config.budget,
            config.include_timings,
        )
        for ln in lines
    ]
    jobs = max(1, config.jobs)
    if jobs == 1 or len(tasks) <= 1:
        results = [_batch_entry(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_batch_entry, tasks))
    out = sys.stdout
    close = False
    if config.json_path:
        out = open(config.json_path, "w")
        close = True
    try:
        for result in results:
            out.write(json.dumps(result) + "\n")
    finally:
        if close:
            out.close()
    return EXIT_OK


_COMMANDS = {
    "inspect": _cmd_inspect,
    "modify": _cmd_modify,
    "verify": _cmd_verify,
    "tangent": _cmd_tangent,
    "certify": _cmd_certify,
    "batch": _cmd_batch,
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ARGUMENT if exc.code not in (0, None) else EXIT_OK
    try:
        config = _config_from_args(args)
        return _COMMANDS[config.subcommand](config)
    except ArgumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ARGUMENT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ARGUMENT
    except InternalInvariantError as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
