"""Tangent-space dimension at a specialized point and coordinate tangent data.

The first-order deformations of a border basis replace each tail coefficient
Y_ij by Y_ij - eps*a_ij.  Requiring every neighbor relation to keep reducing
to zero modulo eps^2 yields one linear equation per (neighbor pair, basis
monomial) in the mu*nu unknowns a_ij; the tangent dimension is mu*nu minus
the rank of that system.

Coordinate tangent tuples differentiate the constructed family itself: one
tuple per free tail slot, per free target coefficient, and per translation
direction.  Their joint rank equals the closed-form family dimension at a
sufficiently general specialization, which is the certification criterion.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .borderbasis import (
    BorderSystem,
    SpanElement,
    dualize_system,
    is_border_basis,
    reduce,
    s_polynomial,
    specialize_system,
)
from .coeffring import DualScalar, IndeterminateRegistry
from .linalg import rank_of
from .monomial import ArgumentError, InternalInvariantError, Monomial
from .orderideal import OrderIdealData, translation_frame


@dataclass(frozen=True)
class TangentTuple:
    """Dense length-mu*nu vector of deformation coefficients a_ij.

    Index order: the basis index i varies fastest, the border index j slowest.
    """

    mu: int
    nu: int
    values: Tuple[Fraction, ...]

    def entry(self, i: int, j: int) -> Fraction:
        if not (1 <= i <= self.mu and 1 <= j <= self.nu):
            raise ArgumentError(f"entry ({i},{j}) outside 1..{self.mu} x 1..{self.nu}")
        return self.values[(j - 1) * self.mu + (i - 1)]

    def nonzero_positions(self):
        out = []
        for idx, v in enumerate(self.values):
            if v:
                out.append((idx % self.mu + 1, idx // self.mu + 1))
        return out


@dataclass(frozen=True)
class TranslationFrame:
    """Anchor generators and shift monomials for the translation directions.

    For each variable x_alpha there is one anchor border monomial b_{j_alpha}
    and a list of shift monomials; differentiating the shifted family along
    (alpha, lambda) is expected to move exactly the key tail slot
    (i_{alpha,lambda}, j_alpha).
    """

    anchors: Dict[int, Monomial]
    anchor_index: Dict[int, int]
    delta_sets: Dict[int, List[Monomial]]
    key_basis_index: Dict[Tuple[int, int], int]
    eta: int

    def labels(self) -> List[str]:
        out = []
        for alpha in sorted(self.delta_sets):
            for lam in range(1, len(self.delta_sets[alpha]) + 1):
                out.append(f"Z[{alpha},{lam}]")
        return out

    def size(self) -> int:
        return sum(len(v) for v in self.delta_sets.values())


def frame(oid: OrderIdealData) -> TranslationFrame:
    anchors, delta_sets, eta = translation_frame(oid)
    anchor_index = {}
    key_index: Dict[Tuple[int, int], int] = {}
    for alpha, b in anchors.items():
        j = oid.index_of_border.get(b)
        if j is None:
            raise InternalInvariantError(f"translation anchor {b} is not a border monomial")
        anchor_index[alpha] = j
        stem = b.div_var(alpha)
        for lam, m in enumerate(delta_sets[alpha], start=1):
            t = stem.mul(m)
            i = oid.index_of_basis.get(t)
            if i is None:
                raise InternalInvariantError(f"key monomial {t} for x{alpha} is not in the basis")
            key_index[(alpha, lam)] = i
    return TranslationFrame(anchors, anchor_index, delta_sets, key_index, eta)


def dim_U(oid: OrderIdealData) -> int:
    """Closed-form dimension of the constructed family."""
    sig = oid.signature
    eta = frame(oid).eta
    return oid.ell * oid.tau + oid.gamma + (sig.delta - 1) * eta + (sig.n - sig.delta + 1)


# ------------------------------------------------------------------ tangent


def _column(mu: int, i: int, j: int) -> int:
    return (j - 1) * mu + (i - 1)


def tangent_dimension(sys: BorderSystem) -> int:
    """dim of first-order deformations of the border basis at `sys`."""
    if sys.ring.kind not in ("rational", "prime"):
        raise ArgumentError("tangent dimension needs a specialized system")
    ok, failures = is_border_basis(sys)
    if not ok:
        pair, residue = failures[0]
        raise ArgumentError(
            f"not a border basis: pair {pair} leaves residue {residue}"
        )
    oid = sys.oid
    mu, nu = oid.mu, oid.nu
    one = sys.ring.one()
    prime = sys.ring.prime if sys.ring.kind == "prime" else 0
    index_of_basis = oid.index_of_basis
    rows: List[Dict[int, object]] = []

    def add(eq: Dict[int, object], col: int, c) -> None:
        v = eq.get(col)
        v = c if v is None else v + c
        if v:
            eq[col] = v
        else:
            eq.pop(col, None)

    for pair in sys.neighbor_pairs():
        eqs: List[Dict[int, object]] = [dict() for _ in range(mu)]
        for i, t in enumerate(oid.basis, start=1):
            shifted = reduce(SpanElement.single(t.mul_var(pair.alpha), one), sys)
            col = _column(mu, i, pair.j1)
            for tk, c in shifted.terms.items():
                add(eqs[index_of_basis[tk] - 1], col, -c)
            other = t if pair.beta == 0 else t.mul_var(pair.beta)
            shifted = reduce(SpanElement.single(other, one), sys)
            col = _column(mu, i, pair.j2)
            for tk, c in shifted.terms.items():
                add(eqs[index_of_basis[tk] - 1], col, c)
        spoly = s_polynomial(sys, pair.j1, pair.j2, pair.alpha, pair.beta)
        for m, c in spoly.terms.items():
            j_prime = oid.index_of_border.get(m)
            if j_prime is None:
                continue
            for k in range(1, mu + 1):
                add(eqs[k - 1], _column(mu, k, j_prime), c)
        rows.extend(eq for eq in eqs if eq)

    dim = mu * nu - rank_of(rows, prime)
    if dim < dim_U(oid):
        raise InternalInvariantError(
            f"tangent dimension {dim} fell below the family dimension {dim_U(oid)}"
        )
    return dim


# ------------------------------------------------- coordinate tangent tuples


_LABEL = re.compile(r"(C\[\d+,\d+\]|theta\[\d+\]|Z\[(\d+),(\d+)\])$")


def random_assignment(registry: IndeterminateRegistry, seed: int) -> Dict[int, Fraction]:
    """Deterministic nonzero integer values in [-50, 50] for every slot."""
    rng = random.Random(seed)
    pool = [v for v in range(-50, 51) if v != 0]
    return {i: Fraction(rng.choice(pool)) for i in range(len(registry))}


def _parameter_tuple(sys_generic: BorderSystem, values, chi_id: int) -> TangentTuple:
    oid = sys_generic.oid
    mu, nu = oid.mu, oid.nu
    dual_values = {
        i: DualScalar(v, Fraction(1 if i == chi_id else 0)) for i, v in values.items()
    }
    one = DualScalar.of(1)
    out = [Fraction(0)] * (mu * nu)
    for j in range(1, nu + 1):
        for i, y in sys_generic.tails[j - 1].items():
            slope = y.evaluate(dual_values, one).slope
            if slope:
                out[_column(mu, i, j)] = -slope
    return TangentTuple(mu, nu, tuple(out))


def _formal_partial(f: SpanElement, alpha: int, shift: Monomial) -> SpanElement:
    """(d f / d x_alpha) * shift, computed termwise."""
    terms: Dict[Monomial, object] = {}
    for m, c in f.terms.items():
        e = m.var_degree(alpha)
        if not e:
            continue
        key = m.div_var(alpha).mul(shift)
        v = terms.get(key)
        v = c * e if v is None else v + c * e
        if v:
            terms[key] = v
        else:
            terms.pop(key, None)
    return SpanElement(terms)


def _translation_tuple(
    spec_sys: BorderSystem, fr: TranslationFrame, alpha: int, lam: int
) -> TangentTuple:
    oid = spec_sys.oid
    mu, nu = oid.mu, oid.nu
    if alpha not in fr.delta_sets or not 1 <= lam <= len(fr.delta_sets[alpha]):
        raise ArgumentError(f"no translation direction Z[{alpha},{lam}]")
    shift = fr.delta_sets[alpha][lam - 1]
    dual_sys = dualize_system(spec_sys)
    out = [Fraction(0)] * (mu * nu)
    for j in range(1, nu + 1):
        gen = spec_sys.generator(j)
        deriv = _formal_partial(gen, alpha, shift)
        terms: Dict[Monomial, DualScalar] = {
            m: DualScalar.of(c) for m, c in gen.terms.items()
        }
        for m, c in deriv.terms.items():
            prev = terms.get(m, DualScalar.of(0))
            terms[m] = DualScalar(prev.value, prev.slope + c)
        reduced = reduce(SpanElement(terms), dual_sys)
        for t, v in reduced.terms.items():
            if v.value:
                raise InternalInvariantError(
                    f"generator {j} does not reduce to zero at order zero"
                )
            out[_column(mu, oid.index_of_basis[t], j)] = v.slope
    return TangentTuple(mu, nu, tuple(out))


def coordinate_tangent_tuple(
    sys_generic: BorderSystem, assignment, chi: str
) -> TangentTuple:
    """Derivative of the constructed family along one coordinate at a point."""
    if sys_generic.ring.kind != "poly":
        raise ArgumentError("coordinate tuples differentiate the symbolic system")
    registry = sys_generic.ring.registry
    m = _LABEL.fullmatch(chi)
    if m is None:
        raise ArgumentError(f"unknown coordinate {chi!r}")
    from .coeffring import _normalize_assignment

    values = _normalize_assignment(registry, assignment)
    missing = set(range(len(registry))) - set(values)
    if missing:
        raise ArgumentError(f"assignment misses {len(missing)} indeterminates")
    if chi.startswith("Z["):
        alpha, lam = int(m.group(2)), int(m.group(3))
        spec_sys = specialize_system(sys_generic, values)
        return _translation_tuple(spec_sys, frame(sys_generic.oid), alpha, lam)
    return _parameter_tuple(sys_generic, values, registry.id_of(chi))


def coordinate_labels(sys_generic: BorderSystem) -> List[str]:
    """Every coordinate of the family: tail slots, targets, translations."""
    registry = sys_generic.ring.registry
    return (
        list(registry.distinguished)
        + list(registry.modification)
        + frame(sys_generic.oid).labels()
    )


def independence_rank(sys_generic: BorderSystem, assignment) -> int:
    """Rank of all coordinate tangent tuples at one specialization."""
    rows = []
    for chi in coordinate_labels(sys_generic):
        tup = coordinate_tangent_tuple(sys_generic, assignment, chi)
        rows.append({k: v for k, v in enumerate(tup.values) if v})
    return rank_of(rows)
