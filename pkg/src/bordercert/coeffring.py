"""Exact coefficient arithmetic for the border-basis construction.

Four kinds of scalars appear downstream:

* plain rationals (`fractions.Fraction`),
* `CoeffPoly`: sparse polynomials over the rationals in named indeterminates —
  one tail coefficient C[i,j] per (trailing monomial, leading monomial) slot
  plus one free target coefficient theta[q] per seed target term,
* `DualScalar`: first-order dual numbers a + b*eps with eps^2 = 0, used to
  read off directional derivatives,
* `PrimeFieldScalar`: residues modulo a large configured prime, used to
  accelerate rank computations probabilistically.

No floating point appears anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Tuple, Union

from .monomial import ArgumentError

Rational = Union[int, Fraction]

DEFAULT_PRIME = 2**61 - 1
MIN_PRIME = 2**31


def _is_probable_prime(m: int) -> bool:
    """Deterministic Miller-Rabin for the word-sized moduli we accept."""
    if m < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if m % p == 0:
            return m == p
    d, r = m - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, m)
        if x in (1, m - 1):
            continue
        for _ in range(r - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


class IndeterminateRegistry:
    """Stable names and dense integer ids for one order ideal's indeterminates.

    The tail slots C[i,j] (i the basis index of a trailing monomial, j the
    border index of a leading monomial) come first, grouped by j; the free
    target coefficients theta[1..gamma] follow.
    """

    __slots__ = ("distinguished", "modification", "names", "_id_of_name", "_c_ids", "_theta_ids")

    def __init__(self, oid):
        self.distinguished = []
        self._c_ids: Dict[Tuple[int, int], int] = {}
        names = []
        for lead in oid.leading:
            j = oid.index_of_border[lead]
            for trail in oid.trailing:
                i = oid.index_of_basis[trail]
                name = f"C[{i},{j}]"
                self._c_ids[(i, j)] = len(names)
                names.append(name)
                self.distinguished.append(name)
        self.modification = []
        self._theta_ids: Dict[int, int] = {}
        for q in range(1, oid.gamma + 1):
            name = f"theta[{q}]"
            self._theta_ids[q] = len(names)
            names.append(name)
            self.modification.append(name)
        self.names = names
        self._id_of_name = {name: i for i, name in enumerate(names)}
        if len(self.distinguished) != oid.ell * oid.tau:
            raise ArgumentError("tail slot count must be ell*tau")

    def __len__(self) -> int:
        return len(self.names)

    def c_id(self, i: int, j: int) -> int:
        try:
            return self._c_ids[(i, j)]
        except KeyError:
            raise ArgumentError(f"no tail slot C[{i},{j}] in this registry") from None

    def theta_id(self, q: int) -> int:
        try:
            return self._theta_ids[q]
        except KeyError:
            raise ArgumentError(f"no target coefficient theta[{q}] in this registry") from None

    def id_of(self, name: str) -> int:
        try:
            return self._id_of_name[name]
        except KeyError:
            raise ArgumentError(f"unknown indeterminate {name!r}") from None

    def name_of(self, ind_id: int) -> str:
        return self.names[ind_id]


def _as_fraction(value: Rational) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise ArgumentError(f"expected an exact rational, got {type(value).__name__}")


ExponentKey = Tuple[Tuple[int, int], ...]


class CoeffPoly:
    """A sparse polynomial over the rationals in registry indeterminates.

    Terms map a sorted tuple of (indeterminate id, exponent) pairs to a
    nonzero rational coefficient; the empty tuple is the constant term.
    """

    __slots__ = ("registry", "terms")

    def __init__(self, registry: IndeterminateRegistry, terms: Dict[ExponentKey, Fraction]):
        self.registry = registry
        self.terms = terms

    # ------------------------------------------------------------- builders

    @classmethod
    def zero(cls, registry: IndeterminateRegistry) -> "CoeffPoly":
        return cls(registry, {})

    @classmethod
    def constant(cls, registry: IndeterminateRegistry, value: Rational) -> "CoeffPoly":
        v = _as_fraction(value)
        return cls(registry, {(): v} if v else {})

    @classmethod
    def indeterminate(cls, registry: IndeterminateRegistry, ind_id: int) -> "CoeffPoly":
        if not 0 <= ind_id < len(registry):
            raise ArgumentError(f"indeterminate id {ind_id} out of range")
        return cls(registry, {((ind_id, 1),): Fraction(1)})

    # ------------------------------------------------------------ ring ops

    def _check_registry(self, other: "CoeffPoly") -> None:
        if self.registry is not other.registry:
            raise ArgumentError("cannot combine polynomials over different registries")

    def __add__(self, other: "CoeffPoly") -> "CoeffPoly":
        self._check_registry(other)
        terms = dict(self.terms)
        for key, c in other.terms.items():
            v = terms.get(key, 0) + c
            if v:
                terms[key] = v
            else:
                terms.pop(key, None)
        return CoeffPoly(self.registry, terms)

    def __neg__(self) -> "CoeffPoly":
        return CoeffPoly(self.registry, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "CoeffPoly") -> "CoeffPoly":
        return self + (-other)

    def __mul__(self, other) -> "CoeffPoly":
        if isinstance(other, (int, Fraction)):
            f = _as_fraction(other)
            if not f:
                return CoeffPoly.zero(self.registry)
            return CoeffPoly(self.registry, {k: c * f for k, c in self.terms.items()})
        self._check_registry(other)
        terms: Dict[ExponentKey, Fraction] = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                key = _merge_keys(k1, k2)
                v = terms.get(key, 0) + c1 * c2
                if v:
                    terms[key] = v
                else:
                    terms.pop(key, None)
        return CoeffPoly(self.registry, terms)

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.terms == (CoeffPoly.constant(self.registry, other).terms)
        return (
            isinstance(other, CoeffPoly)
            and self.registry is other.registry
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    # ------------------------------------------------------------- queries

    @property
    def constant_term(self) -> Fraction:
        return self.terms.get((), Fraction(0))

    def degree(self) -> int:
        """Total degree in the indeterminates; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e for _, e in key) for key in self.terms)

    def indeterminates(self) -> set:
        return {ind for key in self.terms for ind, _ in key}

    # -------------------------------------------------------- specialization

    def specialize(self, assignment: Mapping) -> Fraction:
        """Exact rational value of the polynomial at a point."""
        values = _normalize_assignment(self.registry, assignment)
        total = Fraction(0)
        for key, c in self.terms.items():
            v = c
            for ind, e in key:
                if ind not in values:
                    raise ArgumentError(f"no value assigned to {self.registry.name_of(ind)}")
                v *= values[ind] ** e
            total += v
        return total

    def evaluate(self, values: Mapping[int, object], one):
        """Evaluate with values from an arbitrary commutative ring.

        ``values`` maps indeterminate ids to ring elements and ``one`` is the
        ring's multiplicative identity (used to coerce rational coefficients).
        """
        total = None
        for key, c in self.terms.items():
            v = one * c
            for ind, e in key:
                if ind not in values:
                    raise ArgumentError(f"no value assigned to {self.registry.name_of(ind)}")
                v = v * values[ind] ** e
            total = v if total is None else total + v
        if total is None:
            return one * 0
        return total

    # ------------------------------------------------------------ rendering

    def _sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (sum(e for _, e in kv[0]), kv[0]))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for key, c in self._sorted_terms():
            factors = []
            for ind, e in key:
                name = self.registry.name_of(ind)
                factors.append(name if e == 1 else f"{name}^{e}")
            if not factors:
                body = _fraction_str(abs(c))
            elif abs(c) == 1:
                body = "*".join(factors)
            else:
                body = _fraction_str(abs(c)) + "*" + "*".join(factors)
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append((" + " if c > 0 else " - ") + body)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"CoeffPoly({self})"


def _merge_keys(k1: ExponentKey, k2: ExponentKey) -> ExponentKey:
    if not k1:
        return k2
    if not k2:
        return k1
    merged = dict(k1)
    for ind, e in k2:
        merged[ind] = merged.get(ind, 0) + e
    return tuple(sorted(merged.items()))


def _fraction_str(f: Fraction) -> str:
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _normalize_assignment(registry: IndeterminateRegistry, assignment: Mapping) -> Dict[int, Fraction]:
    """Accept keys that are ids or display names; values must be exact rationals."""
    values: Dict[int, Fraction] = {}
    for key, raw in assignment.items():
        ind = registry.id_of(key) if isinstance(key, str) else int(key)
        values[ind] = _as_fraction(raw)
    return values


def specialize(p: CoeffPoly, assignment: Mapping) -> Fraction:
    return p.specialize(assignment)


def constant_term(p: CoeffPoly) -> Fraction:
    return p.constant_term


@dataclass(frozen=True)
class DualScalar:
    """A dual number value + slope*eps with eps^2 = 0."""

    value: Fraction
    slope: Fraction

    @classmethod
    def of(cls, value: Rational, slope: Rational = 0) -> "DualScalar":
        return cls(_as_fraction(value), _as_fraction(slope))

    @staticmethod
    def _coerce(other) -> "DualScalar":
        if isinstance(other, DualScalar):
            return other
        return DualScalar(_as_fraction(other), Fraction(0))

    def __add__(self, other) -> "DualScalar":
        o = self._coerce(other)
        return DualScalar(self.value + o.value, self.slope + o.slope)

    __radd__ = __add__

    def __neg__(self) -> "DualScalar":
        return DualScalar(-self.value, -self.slope)

    def __sub__(self, other) -> "DualScalar":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "DualScalar":
        return self._coerce(other) + (-self)

    def __mul__(self, other) -> "DualScalar":
        o = self._coerce(other)
        return DualScalar(self.value * o.value, self.value * o.slope + self.slope * o.value)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "DualScalar":
        if e < 0:
            raise ArgumentError("negative powers of dual numbers are not needed")
        out = DualScalar(Fraction(1), Fraction(0))
        for _ in range(e):
            out = out * self
        return out

    def __bool__(self) -> bool:
        return bool(self.value) or bool(self.slope)


class PrimeFieldScalar:
    """A residue modulo a configured prime p > 2^31."""

    __slots__ = ("prime", "residue")

    def __init__(self, prime: int, residue: int):
        self.prime = prime
        self.residue = residue % prime

    @classmethod
    def of(cls, prime: int, value: Rational) -> "PrimeFieldScalar":
        f = _as_fraction(value)
        if f.denominator % prime == 0:
            raise ArgumentError(f"denominator of {f} vanishes modulo {prime}")
        return cls(prime, f.numerator * pow(f.denominator, -1, prime))

    def _check(self, other) -> "PrimeFieldScalar":
        if isinstance(other, PrimeFieldScalar):
            if other.prime != self.prime:
                raise ArgumentError("cannot combine residues over different primes")
            return other
        return PrimeFieldScalar.of(self.prime, other)

    def __add__(self, other) -> "PrimeFieldScalar":
        o = self._check(other)
        return PrimeFieldScalar(self.prime, self.residue + o.residue)

    __radd__ = __add__

    def __neg__(self) -> "PrimeFieldScalar":
        return PrimeFieldScalar(self.prime, -self.residue)

    def __sub__(self, other) -> "PrimeFieldScalar":
        return self + (-self._check(other))

    def __rsub__(self, other) -> "PrimeFieldScalar":
        return self._check(other) + (-self)

    def __mul__(self, other) -> "PrimeFieldScalar":
        o = self._check(other)
        return PrimeFieldScalar(self.prime, self.residue * o.residue)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "PrimeFieldScalar":
        if e < 0:
            return self.inverse() ** (-e)
        return PrimeFieldScalar(self.prime, pow(self.residue, e, self.prime))

    def inverse(self) -> "PrimeFieldScalar":
        if self.residue == 0:
            raise ArgumentError("zero has no inverse")
        return PrimeFieldScalar(self.prime, pow(self.residue, -1, self.prime))

    def __bool__(self) -> bool:
        return self.residue != 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self.residue == other % self.prime
        return (
            isinstance(other, PrimeFieldScalar)
            and self.prime == other.prime
            and self.residue == other.residue
        )

    def __hash__(self) -> int:
        return hash((self.prime, self.residue))

    def __repr__(self) -> str:
        return f"PrimeFieldScalar({self.residue} mod {self.prime})"


def validated_prime(p: int) -> int:
    """Check a user-supplied modulus: prime and larger than 2^31."""
    if p <= MIN_PRIME:
        raise ArgumentError(f"prime must exceed 2^31, got {p}")
    if not _is_probable_prime(p):
        raise ArgumentError(f"{p} is not prime")
    return p
