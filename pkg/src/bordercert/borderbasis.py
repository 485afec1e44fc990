"""Border systems, reduction modulo their rewrite rules, and the basis test.

A border system stores one generator per border monomial in the rewrite form
g_j = b_j - sum_i Y_ij t_i, so b_j may be replaced by its *tail*
sum_i Y_ij t_i.  The coefficients Y_ij live in any commutative ring R that
supports +, -, *, ** and truthiness as zero test: sparse polynomials in the
named coefficients, exact rationals, dual numbers, or a prime field.

`reduce` rewrites an arbitrary element to one supported on basis monomials.
For input supported on the basis and its border a single substitution sweep
suffices (tails live in the span of the basis); any other monomial is peeled
one variable at a time until it reaches that region.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .coeffring import (
    DEFAULT_PRIME,
    CoeffPoly,
    DualScalar,
    IndeterminateRegistry,
    PrimeFieldScalar,
    _normalize_assignment,
)
from .monomial import ArgumentError, InternalInvariantError, Monomial, negdeglex_key
from .orderideal import NeighborPair, OrderIdealData, neighbor_pairs


@dataclass(frozen=True)
class RingSpec:
    """Which coefficient ring a border system's tails live in."""

    kind: str  # "poly" | "rational" | "dual" | "prime"
    registry: Optional[IndeterminateRegistry] = None
    prime: Optional[int] = None

    def one(self):
        if self.kind == "poly":
            return CoeffPoly.constant(self.registry, 1)
        if self.kind == "rational":
            return Fraction(1)
        if self.kind == "dual":
            return DualScalar.of(1)
        if self.kind == "prime":
            return PrimeFieldScalar(self.prime, 1)
        raise ArgumentError(f"unknown ring kind {self.kind!r}")


RATIONAL_RING = RingSpec("rational")
DUAL_RING = RingSpec("dual")


class SpanElement:
    """A finite linear combination of monomials with coefficients in a ring."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Dict[Monomial, object]] = None):
        self.terms = {m: c for m, c in (terms or {}).items() if c}

    @classmethod
    def single(cls, m: Monomial, c) -> "SpanElement":
        return cls({m: c})

    def support(self):
        return set(self.terms)

    def coefficient(self, m: Monomial):
        """Coefficient of a monomial; plain 0 when absent."""
        return self.terms.get(m, 0)

    def scaled(self, c) -> "SpanElement":
        if not c:
            return SpanElement()
        return SpanElement({m: v * c for m, v in self.terms.items()})

    def monomial_multiple(self, m: Monomial) -> "SpanElement":
        return SpanElement({t.mul(m): v for t, v in self.terms.items()})

    def variable_shift(self, alpha: int, beta: int) -> "SpanElement":
        """Multiply every monomial by x_alpha / x_beta; the division must be exact."""
        out = {}
        for t, v in self.terms.items():
            if t.var_degree(beta) == 0:
                raise InternalInvariantError(f"term {t} is not divisible by x{beta}")
            out[t.mul_var(alpha).div_var(beta)] = v
        return SpanElement(out)

    def __add__(self, other: "SpanElement") -> "SpanElement":
        terms = dict(self.terms)
        for m, c in other.terms.items():
            v = terms.get(m)
            v = c if v is None else v + c
            if v:
                terms[m] = v
            else:
                terms.pop(m, None)
        return SpanElement(terms)

    def __sub__(self, other: "SpanElement") -> "SpanElement":
        return self + other.scaled(-1)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SpanElement) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset((m, repr(c)) for m, c in self.terms.items()))

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: negdeglex_key(kv[0]))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            body, negative = _render_coefficient_times_monomial(c, m)
            if not parts:
                parts.append("-" + body if negative else body)
            else:
                parts.append((" - " if negative else " + ") + body)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"SpanElement({self})"


def _render_coefficient_times_monomial(c, m: Monomial) -> Tuple[str, bool]:
    """Render c*m without a leading sign; return (text, sign_was_negative)."""
    mono = str(m)
    if isinstance(c, CoeffPoly):
        if len(c.terms) == 1:
            text = str(c)
            negative = text.startswith("-")
            if negative:
                text = text[1:]
            if text == "1":
                return mono, negative
            return (text if mono == "1" else f"{text}*{mono}"), negative
        text = str(c)
        return (text if mono == "1" else f"({text})*{mono}"), False
    if isinstance(c, Fraction) or isinstance(c, int):
        f = Fraction(c)
        negative = f < 0
        f = abs(f)
        num = str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"
        if mono == "1":
            return num, negative
        if f == 1:
            return mono, negative
        return f"{num}*{mono}", negative
    if isinstance(c, PrimeFieldScalar):
        if mono == "1":
            return str(c.residue), False
        if c.residue == 1:
            return mono, False
        return f"{c.residue}*{mono}", False
    return (f"({c})" if mono == "1" else f"({c})*{mono}"), False


class BorderSystem:
    """One rewrite rule per border monomial: b_j -> sum_i Y_ij t_i.

    Immutable after construction.  ``tails[j-1]`` maps 1-based basis indices
    to the coefficient Y_ij, omitting zeros.
    """

    __slots__ = ("oid", "tails", "ring", "_outside_cache", "_index_cache", "_pairs")

    def __init__(self, oid: OrderIdealData, tails: List[Dict[int, object]], ring: RingSpec):
        if len(tails) != oid.nu:
            raise ArgumentError(f"need one tail per border monomial ({oid.nu}), got {len(tails)}")
        for tail in tails:
            for i in tail:
                if not 1 <= i <= oid.mu:
                    raise ArgumentError(f"tail refers to basis index {i} outside 1..{oid.mu}")
        self.oid = oid
        self.tails = tuple({i: c for i, c in tail.items() if c} for tail in tails)
        self.ring = ring
        self._outside_cache: Dict[Monomial, Dict[Monomial, object]] = {}
        self._index_cache: Dict[Monomial, int] = {}
        self._pairs: Optional[Tuple[NeighborPair, ...]] = None

    # ------------------------------------------------------------ accessors

    def tail(self, j: int) -> Dict[int, object]:
        return dict(self.tails[j - 1])

    def tail_span(self, j: int) -> SpanElement:
        basis = self.oid.basis
        return SpanElement({basis[i - 1]: c for i, c in self.tails[j - 1].items()})

    def generator(self, j: int) -> SpanElement:
        """The full generator g_j = b_j - tail_j."""
        f = SpanElement.single(self.oid.border[j - 1], self.ring.one())
        return f + self.tail_span(j).scaled(-1)

    def neighbor_pairs(self) -> Tuple[NeighborPair, ...]:
        if self._pairs is None:
            self._pairs = neighbor_pairs(self.oid)
        return self._pairs

    def total_tail_terms(self) -> int:
        """Total number of nonzero coefficient terms across all tails."""
        count = 0
        for tail in self.tails:
            for c in tail.values():
                count += len(c.terms) if isinstance(c, CoeffPoly) else 1
        return count

    # ------------------------------------------------------------- division

    def _division_index(self, m: Monomial) -> int:
        """Minimal number of variable divisions taking m into basis-or-border."""
        cached = self._index_cache.get(m)
        if cached is not None:
            return cached
        oid = self.oid
        if m in oid.index_of_basis or m in oid.index_of_border:
            idx = 0
        else:
            best = 0  # the unit monomial always divides m and lies in the basis
            for d in oid.basis:
                if d.degree > best and d.divides(m):
                    best = d.degree
            for d in oid.border:
                if d.degree > best and d.divides(m):
                    best = d.degree
            idx = m.degree - best
        self._index_cache[m] = idx
        return idx

    def _normal_form(self, m: Monomial) -> Dict[Monomial, object]:
        """Reduction of a single monomial: a map basis monomial -> coefficient."""
        oid = self.oid
        i = oid.index_of_basis.get(m)
        if i is not None:
            return {m: self.ring.one()}
        cached = self._outside_cache.get(m)
        if cached is not None:
            return cached
        j = oid.index_of_border.get(m)
        if j is not None:
            basis = oid.basis
            out = {basis[k - 1]: c for k, c in self.tails[j - 1].items()}
        else:
            idx = self._division_index(m)
            gamma = None
            for k in range(1, m.n + 1):
                if m.var_degree(k) and self._division_index(m.div_var(k)) < idx:
                    gamma = k
                    break
            if gamma is None:
                raise InternalInvariantError(f"no peeling variable found for {m}")
            inner = self._normal_form(m.div_var(gamma))
            out = {}
            for t, c in inner.items():
                for t2, c2 in self._normal_form(t.mul_var(gamma)).items():
                    v = out.get(t2)
                    v = c * c2 if v is None else v + c * c2
                    if v:
                        out[t2] = v
                    else:
                        out.pop(t2, None)
        self._outside_cache[m] = out
        return out


def generic_distinguished(
    oid: OrderIdealData, registry: Optional[IndeterminateRegistry] = None
) -> BorderSystem:
    """The pre-basis whose leading tails carry one named coefficient per slot."""
    if registry is None:
        registry = IndeterminateRegistry(oid)
    ring = RingSpec("poly", registry=registry)
    leading = set(oid.leading)
    tails: List[Dict[int, object]] = []
    for b in oid.border:
        tail: Dict[int, object] = {}
        if b in leading:
            j = oid.index_of_border[b]
            for t in oid.trailing:
                i = oid.index_of_basis[t]
                tail[i] = CoeffPoly.indeterminate(registry, registry.c_id(i, j))
        tails.append(tail)
    return BorderSystem(oid, tails, ring)


def reduce(f: SpanElement, sys: BorderSystem) -> SpanElement:
    """Rewrite f modulo the system onto the basis monomials."""
    oid = sys.oid
    acc: Dict[Monomial, object] = {}

    def put(m: Monomial, c) -> None:
        v = acc.get(m)
        v = c if v is None else v + c
        if v:
            acc[m] = v
        else:
            acc.pop(m, None)

    basis_index = oid.index_of_basis
    for m, c in f.terms.items():
        if m in basis_index:
            put(m, c)
        else:
            for t, y in sys._normal_form(m).items():
                put(t, c * y)
    return SpanElement(acc)


def s_polynomial(sys: BorderSystem, j1: int, j2: int, alpha: int, beta: int) -> SpanElement:
    """x_alpha*g_j1 - x_beta*g_j2 for a neighbor pair, border terms cancelled."""
    oid = sys.oid
    if not (1 <= j1 <= oid.nu and 1 <= j2 <= oid.nu):
        raise ArgumentError(f"border indices must lie in 1..{oid.nu}")
    b1, b2 = oid.border[j1 - 1], oid.border[j2 - 1]
    lhs = b1.mul_var(alpha)
    rhs = b2 if beta == 0 else b2.mul_var(beta)
    if lhs != rhs:
        raise ArgumentError(f"({j1},{j2},{alpha},{beta}) is not a neighbor pair")
    basis = oid.basis
    f = SpanElement()
    terms: Dict[Monomial, object] = {}
    for i, y in sys.tails[j2 - 1].items():
        t = basis[i - 1] if beta == 0 else basis[i - 1].mul_var(beta)
        v = terms.get(t)
        terms[t] = y if v is None else v + y
    for i, y in sys.tails[j1 - 1].items():
        t = basis[i - 1].mul_var(alpha)
        v = terms.get(t)
        terms[t] = -y if v is None else v - y
    f.terms = {m: c for m, c in terms.items() if c}
    return f


def is_border_basis(sys: BorderSystem):
    """Check every neighbor pair; return (ok, list of (pair, nonzero residue))."""
    failures = []
    for pair in sys.neighbor_pairs():
        residue = reduce(s_polynomial(sys, pair.j1, pair.j2, pair.alpha, pair.beta), sys)
        if residue:
            failures.append((pair, residue))
    return (not failures, failures)


def specialize_system(
    sys: BorderSystem,
    assignment,
    field: str = "exact",
    prime: Optional[int] = None,
) -> BorderSystem:
    """Evaluate every tail coefficient at a point, exactly or modulo a prime."""
    if sys.ring.kind != "poly":
        raise ArgumentError("only systems with polynomial coefficients can be specialized")
    registry = sys.ring.registry
    values = _normalize_assignment(registry, assignment)
    missing = set(range(len(registry))) - set(values)
    if missing:
        names = ", ".join(registry.name_of(i) for i in sorted(missing)[:5])
        raise ArgumentError(f"assignment misses {len(missing)} indeterminates ({names}, ...)")
    if field == "exact":
        ring = RATIONAL_RING

        def convert(f):
            return f

    elif field == "prime":
        p = prime if prime is not None else DEFAULT_PRIME
        ring = RingSpec("prime", prime=p)

        def convert(f):
            return PrimeFieldScalar.of(p, f)

    else:
        raise ArgumentError(f"unknown field {field!r} (use 'exact' or 'prime')")
    tails: List[Dict[int, object]] = []
    for tail in sys.tails:
        new: Dict[int, object] = {}
        for i, y in tail.items():
            v = y.specialize(values)
            if v:
                new[i] = convert(v)
        tails.append(new)
    return BorderSystem(sys.oid, tails, ring)


def dualize_system(sys: BorderSystem, slopes: Optional[Dict[Tuple[int, int], Fraction]] = None) -> BorderSystem:
    """Lift a rational system to dual numbers, optionally deforming tails.

    ``slopes`` maps (basis index i, border index j) to the eps-coefficient
    added to Y_ij.
    """
    if sys.ring.kind != "rational":
        raise ArgumentError("only rational systems can be lifted to dual numbers")
    slopes = slopes or {}
    tails: List[Dict[int, object]] = []
    for j0, tail in enumerate(sys.tails, start=1):
        new: Dict[int, object] = {}
        for i, y in tail.items():
            new[i] = DualScalar.of(y, slopes.get((i, j0), 0))
        for (i, j), sl in slopes.items():
            if j == j0 and i not in new and sl:
                new[i] = DualScalar.of(0, sl)
        tails.append(new)
    return BorderSystem(sys.oid, tails, DUAL_RING)


def power_in_ideal(sys: BorderSystem, k: int) -> int:
    """Least e with x_k^e rewriting to 0; errors past the theoretical bound."""
    oid = sys.oid
    sig = oid.signature
    if not 1 <= k <= sig.n:
        raise ArgumentError(f"variable index {k} out of range 1..{sig.n}")
    bound = (sig.s + 1) * oid.mu
    for e in range(1, bound + 1):
        f = SpanElement.single(Monomial.variable(sig.n, k, e), sys.ring.one())
        if not reduce(f, sys):
            return e
    raise InternalInvariantError(
        f"x{k}^e does not reduce to zero for any e <= {bound}; system is not supported at the origin"
    )


def render_system(sys: BorderSystem) -> str:
    """One line per border monomial: the rewrite rule b_j = tail."""
    lines = []
    for j, b in enumerate(sys.oid.border, start=1):
        lines.append(f"{b} = {sys.tail_span(j)}")
    return "\n".join(lines)
