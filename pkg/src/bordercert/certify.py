"""End-to-end certification of one signature, with a machine-readable report.

The pipeline: build the order ideal, construct the generic modification,
verify the border-basis property (symbolically when the system is small
enough, otherwise at each random specialization), record the least power of
every variable lying in the ideal, run the tangent-dimension computation at
several seeded specializations, and compare the minimum against the
closed-form family dimension.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional

from .borderbasis import (
    BorderSystem,
    is_border_basis,
    power_in_ideal,
    specialize_system,
)
from .coeffring import DEFAULT_PRIME, IndeterminateRegistry, validated_prime
from .modification import build_generic_modification
from .monomial import ArgumentError
from .orderideal import OrderIdealData, Signature, build
from .tangent import dim_U, frame, random_assignment, tangent_dimension
from .version import __version__

SYMBOLIC_BUDGET = 20000  # total tail terms up to which the symbolic check runs


@dataclass
class CertificationReport:
    signature: Signature
    mu: int
    hilbert: tuple
    ell: int
    tau: int
    gamma: int
    eta: int
    dimU: int
    principalDim: int
    verificationMode: str
    powers: Optional[List[int]]
    trials: List[dict]
    verdict: str
    evidence: List[str] = field(default_factory=list)
    timings: Dict[str, float] = field(default_factory=dict)
    toolVersion: str = __version__


def report_to_json_dict(report: CertificationReport, include_timings: bool = True) -> dict:
    """Schema-stable dict: fixed key order, exact integers, 'p/q' rationals."""
    out = {
        "signature": list(report.signature.as_tuple()),
        "mu": report.mu,
        "hilbert": list(report.hilbert),
        "ell": report.ell,
        "tau": report.tau,
        "gamma": report.gamma,
        "eta": report.eta,
        "dimU": report.dimU,
        "principalDim": report.principalDim,
        "verificationMode": report.verificationMode,
        "powers": report.powers,
        "trials": [
            {"seed": t["seed"], "tangentDim": t["tangentDim"], "field": t["field"]}
            for t in report.trials
        ],
        "verdict": report.verdict,
        "evidence": list(report.evidence),
    }
    if include_timings:
        out["timings"] = {k: round(v, 6) for k, v in report.timings.items()}
    out["toolVersion"] = report.toolVersion
    return _jsonable(out)


def _jsonable(value):
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return int(value)
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def certify(
    sig: Signature,
    trials: int = 3,
    field_kind: str = "exact",
    seed: int = 1,
    prime: Optional[int] = None,
    budget: int = SYMBOLIC_BUDGET,
) -> CertificationReport:
    """Run the whole pipeline for one signature."""
    if trials < 1:
        raise ArgumentError("at least one trial is required")
    if field_kind not in ("exact", "prime"):
        raise ArgumentError(f"unknown field {field_kind!r} (use 'exact' or 'prime')")
    if prime is not None:
        prime = validated_prime(prime)
    timings: Dict[str, float] = {}
    evidence: List[str] = []

    t0 = time.perf_counter()
    oid = build(sig)
    registry = IndeterminateRegistry(oid)
    system = build_generic_modification(oid, registry)
    timings["build"] = time.perf_counter() - t0

    family_dim = dim_U(oid)
    principal = sig.n * oid.mu
    eta = frame(oid).eta

    verified = True
    t0 = time.perf_counter()
    if system.total_tail_terms() <= budget:
        mode = "symbolic"
        ok, failures = is_border_basis(system)
        if not ok:
            verified = False
            pair, residue = failures[0]
            evidence.append(
                f"symbolic border-basis check failed: pair {pair} leaves residue {residue}"
            )
    else:
        mode = "specialized"
    timings["verification"] = time.perf_counter() - t0

    powers: Optional[List[int]] = None
    trial_rows: List[dict] = []
    t0 = time.perf_counter()
    for k in range(trials):
        trial_seed = seed + k
        assignment = random_assignment(registry, trial_seed)
        specialized = specialize_system(system, assignment, field=field_kind, prime=prime)
        if mode == "specialized":
            ok, failures = is_border_basis(specialized)
            if not ok:
                verified = False
                pair, residue = failures[0]
                evidence.append(
                    f"border-basis check failed at seed {trial_seed}: "
                    f"pair {pair} leaves residue {residue}"
                )
                trial_rows.append(
                    {"seed": trial_seed, "tangentDim": None, "field": field_kind}
                )
                continue
        if powers is None:
            tp = time.perf_counter()
            powers = [power_in_ideal(specialized, var) for var in range(1, sig.n + 1)]
            timings["powers"] = time.perf_counter() - tp
        tangent = tangent_dimension(specialized)
        trial_rows.append({"seed": trial_seed, "tangentDim": tangent, "field": field_kind})
    timings["tangent"] = time.perf_counter() - t0

    dims = sorted({t["tangentDim"] for t in trial_rows if t["tangentDim"] is not None})
    min_tangent = dims[0] if dims else None
    if len(dims) > 1:
        evidence.append(
            f"trial tangent dimensions disagree ({dims}); reporting the minimum"
        )

    if not verified or min_tangent is None:
        verdict = "INCONCLUSIVE"
    elif min_tangent == family_dim and field_kind == "exact":
        verdict = "ELEMENTARY_CERTIFIED"
    elif min_tangent != family_dim and min_tangent < principal:
        verdict = "NON_PRINCIPAL_ONLY"
    else:
        verdict = "INCONCLUSIVE"
        if field_kind == "prime" and min_tangent == family_dim:
            evidence.append(
                "prime-field tangent dimension matches the family dimension; "
                "an exact-rational trial is required for certification"
            )

    return CertificationReport(
        signature=sig,
        mu=oid.mu,
        hilbert=oid.hilbert,
        ell=oid.ell,
        tau=oid.tau,
        gamma=oid.gamma,
        eta=eta,
        dimU=family_dim,
        principalDim=principal,
        verificationMode=mode,
        powers=powers,
        trials=trial_rows,
        verdict=verdict,
        evidence=evidence,
        timings=timings,
        toolVersion=__version__,
    )


def inspect_signature(sig: Signature) -> dict:
    """Pure structural summary of one signature; no linear algebra."""
    oid = build(sig)
    fr = frame(oid)
    return _jsonable(
        {
            "signature": list(sig.as_tuple()),
            "minimalLeadMonomial": str(sig.minimal_lead_monomial()),
            "mu": oid.mu,
            "nu": oid.nu,
            "hilbert": list(oid.hilbert),
            "ell": oid.ell,
            "tau": oid.tau,
            "gamma": oid.gamma,
            "eta": fr.eta,
            "dimU": dim_U(oid),
            "principalDim": sig.n * oid.mu,
            "basis": [str(m) for m in oid.basis],
            "border": [str(m) for m in oid.border],
            "leading": [str(m) for m in oid.leading],
            "trailing": [str(m) for m in oid.trailing],
            "targetPool": [str(m) for m in oid.tar_all],
            "targetPoolTruncated": [str(m) for m in oid.tar_prime],
            "targetSeeds": [str(m) for m in oid.tar_double_prime],
            "leadTargets": [str(m) for m in oid.s_lead],
            "deepTargets": [str(m) for m in oid.s_deep],
            "translationAnchors": {
                str(alpha): str(b) for alpha, b in sorted(fr.anchors.items())
            },
            "translationShifts": {
                str(alpha): [str(m) for m in ms]
                for alpha, ms in sorted(fr.delta_sets.items())
            },
        }
    )
