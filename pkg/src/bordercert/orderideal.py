"""The two-parameter-family order ideal, its border, and every derived monomial set.

A signature (n, r, s, delta, w) selects an order ideal inside x_1..x_n that is
a full polynomial ring truncation below degree r and, from degree r up to the
socle degree s, a lex cut of the degree slices in the variables x_delta..x_n.
The variables split into *front* (x_1..x_(delta-1)), *middle* (x_delta) and
*back* (x_(delta+1)..x_n) groups.

`build` assembles the basis and its border together with the index maps and
the special subsets the downstream construction consumes: the degree-r border
monomials at or above the lex-minimal one (`leading`), the top-degree basis
monomials (`trailing`), the pools of admissible target terms, and the border
monomials that will actually carry targets (`s_lead` and `s_deep`).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Tuple

from .monomial import (
    ArgumentError,
    InternalInvariantError,
    Monomial,
    SegmentSpec,
    binomial,
    cmp_lex,
    monomials_of,
    negdeglex_key,
    segment,
)


@dataclass(frozen=True)
class Signature:
    """The five integer invariants selecting one order ideal of the family."""

    n: int
    r: int
    s: int
    delta: int
    w: int

    def __post_init__(self):
        if self.n < 2:
            raise ArgumentError(f"need at least two variables, got n={self.n}")
        if not 1 <= self.delta < self.n:
            raise ArgumentError(f"middle variable index must satisfy 1 <= delta < n, got {self.delta}")
        if self.r < 2:
            raise ArgumentError(f"lead degree must satisfy r >= 2, got {self.r}")
        if self.s <= self.r:
            raise ArgumentError(f"socle degree must satisfy s > r, got s={self.s}, r={self.r}")
        if not 0 <= self.w <= self.r - 1:
            raise ArgumentError(f"twist exponent must satisfy 0 <= w <= r-1, got {self.w}")

    def minimal_lead_monomial(self) -> Monomial:
        """The lex-least degree-r monomial outside the basis: x_delta^(r-w) * x_n^w."""
        exps = [0] * self.n
        exps[self.delta - 1] = self.r - self.w
        exps[self.n - 1] += self.w
        return Monomial(exps)

    def as_tuple(self) -> Tuple[int, int, int, int, int]:
        return (self.n, self.r, self.s, self.delta, self.w)

    def __str__(self) -> str:
        return f"({self.n},{self.r},{self.s},{self.delta},{self.w})"


def shape_to_signature(n: int, kappa: int, r: int, s: int) -> Signature:
    """Convert the lex-segment-complement shape parameters to a signature.

    The degree-r slice of the resulting basis is the full slice in the last
    kappa variables, which forces delta = n - kappa and w = r - 1.
    """
    if not 1 <= kappa < n:
        raise ArgumentError(f"need 1 <= kappa < n, got kappa={kappa}, n={n}")
    return Signature(n=n, r=r, s=s, delta=n - kappa, w=r - 1)


@dataclass(frozen=True, eq=False)
class OrderIdealData:
    """An order ideal of the family with its border and derived monomial sets.

    ``basis`` lists t_1..t_mu and ``border`` lists b_1..b_nu, both in
    negdeglex order with 1-based index maps.  ``leading`` collects the
    degree-r border monomials, ``trailing`` the top-degree basis monomials.
    ``tar_all`` / ``tar_prime`` are the basis monomials of degree r..s and
    r..s-1 (the admissible target terms), and ``tar_double_prime`` is the
    subset of ``tar_prime`` divisible by x_(delta+1)^w that seeds the free
    target coefficients.  ``s_lead`` / ``s_deep`` are the border monomials in
    x_delta..x_n of degree r and of degree r+1..s: exactly the generators
    whose tails receive targets.
    """

    signature: Signature
    basis: Tuple[Monomial, ...]
    border: Tuple[Monomial, ...]
    index_of_basis: Dict[Monomial, int] = field(repr=False)
    index_of_border: Dict[Monomial, int] = field(repr=False)
    mu: int
    nu: int
    hilbert: Tuple[int, ...]
    leading: Tuple[Monomial, ...]
    trailing: Tuple[Monomial, ...]
    tar_all: Tuple[Monomial, ...]
    tar_prime: Tuple[Monomial, ...]
    tar_double_prime: Tuple[Monomial, ...]
    s_lead: Tuple[Monomial, ...]
    s_deep: Tuple[Monomial, ...]
    gamma: int
    ell: int
    tau: int

    def basis_of_degree(self, d: int) -> Tuple[Monomial, ...]:
        if d < 0 or d > self.signature.s:
            return ()
        lo = sum(self.hilbert[:d])
        return self.basis[lo : lo + self.hilbert[d]]

    def __hash__(self) -> int:
        return hash(self.signature)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, OrderIdealData) and self.signature == other.signature \
            and self.basis == other.basis


def _in_variables_from(m: Monomial, k: int) -> bool:
    """True when m uses only x_k..x_n."""
    return all(e == 0 for e in m.exps[: k - 1])


def build(sig: Signature) -> OrderIdealData:
    """Construct the order ideal of a signature with all derived sets."""
    n, r, s, delta, w = sig.n, sig.r, sig.s, sig.delta, sig.w
    b_min = sig.minimal_lead_monomial()

    basis_by_degree: List[List[Monomial]] = []
    for d in range(0, r):
        basis_by_degree.append(monomials_of(n, 1, d))
    for d in range(r, s + 1):
        bound = b_min.mul_var(n, d - r)
        basis_by_degree.append([m for m in monomials_of(n, delta, d) if cmp_lex(bound, m) > 0])

    basis: List[Monomial] = [m for level in basis_by_degree for m in level]
    basis_set = set(basis)
    index_of_basis = {m: i for i, m in enumerate(basis, start=1)}

    border_set = set()
    for t in basis:
        for k in range(1, n + 1):
            m = t.mul_var(k)
            if m not in basis_set:
                border_set.add(m)
    border = sorted(border_set, key=negdeglex_key)
    index_of_border = {m: j for j, m in enumerate(border, start=1)}

    hilbert = tuple(len(level) for level in basis_by_degree)

    leading = tuple(m for m in monomials_of(n, 1, r) if cmp_lex(m, b_min) >= 0)
    trailing = tuple(basis_by_degree[s])
    tar_all = tuple(m for d in range(r, s + 1) for m in basis_by_degree[d])
    tar_prime = tuple(m for d in range(r, s) for m in basis_by_degree[d])
    x_next = Monomial.variable(n, delta + 1, w)
    tar_double_prime = tuple(m for m in tar_prime if x_next.divides(m))

    s_lead = tuple(m for m in leading if _in_variables_from(m, delta))
    s_deep = tuple(
        b for b in border if _in_variables_from(b, delta) and r + 1 <= b.degree <= s
    )

    ell = len(leading)
    data = OrderIdealData(
        signature=sig,
        basis=tuple(basis),
        border=tuple(border),
        index_of_basis=index_of_basis,
        index_of_border=index_of_border,
        mu=len(basis),
        nu=len(border),
        hilbert=hilbert,
        leading=leading,
        trailing=trailing,
        tar_all=tar_all,
        tar_prime=tar_prime,
        tar_double_prime=tar_double_prime,
        s_lead=s_lead,
        s_deep=s_deep,
        gamma=len(tar_double_prime),
        ell=ell,
        tau=len(trailing),
    )

    if tuple(b for b in border if b.degree == r) != leading:
        raise InternalInvariantError("degree-r border does not match the leading set")
    if border[ell - 1] != b_min:
        raise InternalInvariantError("lex-minimal lead monomial is not at border index ell")
    return data


def gamma_formula(sig: Signature) -> int:
    """Closed-form count of the free target coefficients (the theta's)."""
    n, r, s, delta, w = sig.n, sig.r, sig.s, sig.delta, sig.w
    total = 0
    for d in range(r, s):
        for e in range(d - (r - (w + 1)), d + 1):
            for u in range(0, e - w + 1):
                total += binomial(u + (n - delta - 1) - 1, u)
    return total


@dataclass(frozen=True)
class NeighborPair:
    """Border indices j1 < j2 with x_alpha * b_j1 = x_beta * b_j2.

    beta = 0 encodes x_0 = 1, i.e. the product of b_j1 with one variable is
    itself the border monomial b_j2.
    """

    j1: int
    j2: int
    alpha: int
    beta: int


def neighbor_pairs(oid: OrderIdealData) -> Tuple[NeighborPair, ...]:
    """All variable-multiple coincidences between border monomials, canonically ordered."""
    n = oid.signature.n
    found = set()
    for b in oid.border:
        j = oid.index_of_border[b]
        for alpha in range(1, n + 1):
            m = b.mul_var(alpha)
            j_next = oid.index_of_border.get(m)
            if j_next is not None:
                found.add(NeighborPair(j, j_next, alpha, 0))
            for beta in range(1, n + 1):
                if beta == alpha or m.var_degree(beta) == 0:
                    continue
                other = m.div_var(beta)
                if other == b:
                    continue
                j_other = oid.index_of_border.get(other)
                if j_other is None:
                    continue
                if j < j_other:
                    found.add(NeighborPair(j, j_other, alpha, beta))
    return tuple(sorted(found, key=lambda p: (p.j1, p.j2, p.alpha, p.beta)))


@dataclass(frozen=True)
class PathStep:
    """One move of a staircase path: x_alpha * previous = x_beta * monomial."""

    monomial: Monomial
    alpha: int
    beta: int


def _suffix_shape(sig: Signature, m: Monomial) -> List[int]:
    """Partial degree sums e_0 >= e_1 >= ... of m over x_(delta+1)..x_n."""
    delta, n = sig.delta, sig.n
    e = [m.degree - m.var_degree(delta)]
    for i in range(1, n - delta):
        e.append(e[i - 1] - m.var_degree(delta + i))
    return e


def across_street_path(oid: OrderIdealData, frm: Monomial, to: Monomial):
    """The canonical staircase path from the lex-max of a block to a lex-smaller target.

    ``frm`` must have the two-variable form x_delta^(d-s0) * x_(delta+1)^s0 and
    ``to`` must be a degree-d monomial in x_delta..x_n whose back-degree is at
    least s0.  The path shifts exponent weight one variable at a time, first
    from x_delta to x_(delta+1), then from x_(delta+1) to x_(delta+2), and so
    on; consecutive monomials m, m' satisfy x_alpha * m = x_beta * m'.
    """
    sig = oid.signature
    delta, n = sig.delta, sig.n
    if not _in_variables_from(frm, delta) or not _in_variables_from(to, delta):
        raise ArgumentError("path endpoints must avoid the front variables")
    if frm.degree != to.degree:
        raise ArgumentError("path endpoints must have equal degree")
    s0 = frm.degree - frm.var_degree(delta)
    if frm != Monomial.variable(n, delta, frm.degree - s0).mul_var(delta + 1, s0):
        raise ArgumentError(f"path source {frm} is not the lex-maximal element of a block")
    e = _suffix_shape(sig, to)
    if e[0] < s0:
        raise ArgumentError(f"target {to} has smaller back-degree than source {frm}")

    steps: List[PathStep] = []
    m = frm
    counts = [e[0] - s0] + e[1:]
    for i, count in enumerate(counts):
        alpha, beta = delta + i + 1, delta + i
        for _ in range(count):
            m = m.mul_var(alpha).div_var(beta)
            steps.append(PathStep(m, alpha, beta))
    if m != to:
        raise InternalInvariantError(f"staircase path from {frm} ended at {m}, not {to}")
    return tuple(steps)


def translation_frame(oid: OrderIdealData):
    """Anchor border monomials and shift sets for the translation directions.

    Returns ``(anchors, delta_sets, eta)``: for every variable x_alpha an
    anchor border monomial (x_alpha * x_n^(r-1) for front variables, else
    x_alpha * x_n^s) and a negdeglex-ordered list of shift monomials whose
    first element is 1.  ``eta`` is the common size of the front shift sets,
    0 when there are no front variables.
    """
    sig = oid.signature
    n, r, s, delta = sig.n, sig.r, sig.s, sig.delta
    x_n_pow = Monomial.variable(n, n, r - 1)
    anchors: Dict[int, Monomial] = {}
    for alpha in range(1, n + 1):
        if alpha < delta:
            anchors[alpha] = x_n_pow.mul_var(alpha)
        else:
            anchors[alpha] = Monomial.variable(n, n, s).mul_var(alpha)
        if anchors[alpha] not in oid.index_of_border:
            raise InternalInvariantError(f"translation anchor {anchors[alpha]} is not a border monomial")

    tar_prime_set = set(oid.tar_prime)
    front_shifts: List[Monomial] = []
    for d in range(0, s - r + 1):
        for m in monomials_of(n, delta, d):
            prod = m.mul(x_n_pow)
            if prod == x_n_pow or prod in tar_prime_set:
                front_shifts.append(m)

    delta_sets: Dict[int, List[Monomial]] = {}
    for alpha in range(1, delta):
        delta_sets[alpha] = list(front_shifts)
    for alpha in range(delta, n + 1):
        delta_sets[alpha] = [Monomial.unit(n)]

    eta = len(front_shifts) if delta > 1 else 0
    return anchors, delta_sets, eta
