"""The three-step target assignment and the fully modified generic system.

Certain border generators receive an extra *target* polynomial: a combination
of basis monomials of degree >= r with coefficients in the free target
indeterminates theta[q].  Step 1 seeds the top block of degree-r border
monomials in the middle-and-back variables and spreads it across the block by
exact monomial transport; step 2 pushes the targets up to the deeper
target-bearing border monomials by multiplication and truncation; step 3
walks the remaining degree-r blocks downward, each time reducing the middle
variable times the previous target modulo the partially built system and
dividing the result exactly by the first back variable.

Adding the target of b_j to its generator turns Y_ij into
C_ij (trailing slots of a leading monomial) minus the t_i-coefficient of the
target; `install_targets` performs exactly that bookkeeping.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Optional

from .borderbasis import BorderSystem, SpanElement, generic_distinguished, reduce
from .coeffring import CoeffPoly, IndeterminateRegistry
from .monomial import (
    ArgumentError,
    InternalInvariantError,
    Monomial,
    SegmentSpec,
    monomials_of,
    segment,
)
from .orderideal import OrderIdealData, across_street_path


@dataclass(frozen=True)
class TargetMap:
    """Targets keyed by 1-based border index; absent entries mean zero."""

    registry: IndeterminateRegistry
    targets: Dict[int, SpanElement]

    def get(self, j: int) -> SpanElement:
        return self.targets.get(j, SpanElement())

    def with_targets(self, extra: Dict[int, SpanElement]) -> "TargetMap":
        merged = dict(self.targets)
        merged.update(extra)
        return TargetMap(self.registry, merged)


def _lead_block(oid: OrderIdealData, e: int):
    sig = oid.signature
    return segment(SegmentSpec(sig.n, sig.delta, sig.r, (e,)))


def _propagated(oid: OrderIdealData, block, source_target: SpanElement) -> Dict[int, SpanElement]:
    """Transport the target of block[0] to every other member along its path."""
    out = {oid.index_of_border[block[0]]: source_target}
    for m in block[1:]:
        value = source_target
        for step in across_street_path(oid, block[0], m):
            value = value.variable_shift(step.alpha, step.beta)
        out[oid.index_of_border[m]] = value
    return out


def step1(oid: OrderIdealData, registry: Optional[IndeterminateRegistry] = None) -> TargetMap:
    """Seed the top degree-r block with the free target coefficients."""
    if registry is None:
        registry = IndeterminateRegistry(oid)
    seed = SpanElement(
        {
            t: CoeffPoly.indeterminate(registry, registry.theta_id(q))
            for q, t in enumerate(oid.tar_double_prime, start=1)
        }
    )
    block = _lead_block(oid, oid.signature.w)
    return TargetMap(registry, _propagated(oid, block, seed))


def _deep_factorization(oid: OrderIdealData, b: Monomial):
    """Split b = m' * b_src with b_src in the top degree-r block.

    m' is the lex-minimal back-variables divisor of the back part of b with
    degree deg(b) - r; existence is guaranteed for every deep target monomial.
    """
    sig = oid.signature
    rest = b.try_div(Monomial.variable(sig.n, sig.delta, sig.r - sig.w))
    if rest is None:
        raise InternalInvariantError(f"deep target monomial {b} lacks the expected middle power")
    candidates = [
        m for m in monomials_of(sig.n, sig.delta + 1, b.degree - sig.r) if m.divides(rest)
    ]
    if not candidates:
        raise InternalInvariantError(f"no factorization of deep target monomial {b}")
    m_prime = candidates[-1]  # negdeglex order within one degree = lex descending
    b_src = b.try_div(m_prime)
    if b_src is None or oid.index_of_border.get(b_src) is None:
        raise InternalInvariantError(f"factorization of {b} left the border")
    return m_prime, b_src


def _truncated(f: SpanElement, max_degree: int) -> SpanElement:
    return SpanElement({t: c for t, c in f.terms.items() if t.degree <= max_degree})


def step2(oid: OrderIdealData, tm: TargetMap) -> TargetMap:
    """Extend the targets to the deeper target-bearing border monomials."""
    sig = oid.signature
    extra: Dict[int, SpanElement] = {}
    for b in oid.s_deep:
        m_prime, b_src = _deep_factorization(oid, b)
        src = tm.targets.get(oid.index_of_border[b_src])
        if src is None:
            raise ArgumentError("step2 requires the degree-r targets from step1")
        extra[oid.index_of_border[b]] = _truncated(src.monomial_multiple(m_prime), sig.s)
    return tm.with_targets(extra)


def step3(oid: OrderIdealData, tm: TargetMap, sys_so_far: BorderSystem) -> TargetMap:
    """Fill the remaining degree-r blocks by reduce-and-divide, top down."""
    sig = oid.signature
    delta, back = sig.delta, sig.delta + 1
    x_delta = Monomial.variable(sig.n, delta)
    out = tm
    for e in range(sig.w, 0, -1):
        top = _lead_block(oid, e)[0]
        current = out.targets.get(oid.index_of_border[top])
        if current is None:
            raise ArgumentError(f"step3 requires the target of {top} before extending below it")
        reduced = reduce(current.monomial_multiple(x_delta), sys_so_far)
        shifted: Dict[Monomial, object] = {}
        for t, c in reduced.terms.items():
            if t.var_degree(back) < e:
                raise InternalInvariantError(
                    f"reduction of x{delta}*target({top}) is not divisible by x{back}^{e}"
                )
            shifted[t.div_var(back)] = c
        block = _lead_block(oid, e - 1)
        out = out.with_targets(_propagated(oid, block, SpanElement(shifted)))
    return out


def install_targets(base: BorderSystem, tm: TargetMap) -> BorderSystem:
    """Add each target into its generator: Y_ij -= coefficient of t_i in the target."""
    oid = base.oid
    tails = [dict(t) for t in base.tails]
    for j, target in tm.targets.items():
        tail = tails[j - 1]
        for t, c in target.terms.items():
            i = oid.index_of_basis.get(t)
            if i is None:
                raise InternalInvariantError(f"target of b[{j}] contains non-basis monomial {t}")
            y = tail.get(i)
            y = -c if y is None else y - c
            if y:
                tail[i] = y
            else:
                tail.pop(i, None)
    return BorderSystem(oid, tails, base.ring)


def build_targets(oid: OrderIdealData, registry: Optional[IndeterminateRegistry] = None) -> TargetMap:
    """Run the three steps and validate the resulting target map."""
    tm = step1(oid, registry)
    tm = step2(oid, tm)
    sys_so_far = install_targets(generic_distinguished(oid, tm.registry), tm)
    tm = step3(oid, tm, sys_so_far)
    _validate_targets(oid, tm)
    return tm


def build_generic_modification(
    oid: OrderIdealData, registry: Optional[IndeterminateRegistry] = None
) -> BorderSystem:
    """The generic system with every target installed."""
    tm = build_targets(oid, registry)
    sys = install_targets(generic_distinguished(oid, tm.registry), tm)
    for tail in sys.tails:
        for y in tail.values():
            if y.constant_term:
                raise InternalInvariantError("a tail coefficient acquired a constant term")
    return sys


def _validate_targets(oid: OrderIdealData, tm: TargetMap) -> None:
    sig = oid.signature
    expected = {oid.index_of_border[m] for m in oid.s_lead} | {
        oid.index_of_border[m] for m in oid.s_deep
    }
    if set(tm.targets) != expected:
        raise InternalInvariantError("targets must cover exactly the target-bearing border monomials")
    tar_prime_set = set(oid.tar_prime)
    tar_all_set = set(oid.tar_all)
    theta_ids = {tm.registry.theta_id(q) for q in range(1, oid.gamma + 1)}
    for j, target in tm.targets.items():
        b = oid.border[j - 1]
        deep = b.degree > sig.r
        for t, c in target.terms.items():
            if deep:
                if t not in tar_all_set or not b.degree <= t.degree <= sig.s:
                    raise InternalInvariantError(
                        f"deep target of b[{j}] has an out-of-range term {t}"
                    )
            elif t not in tar_prime_set:
                raise InternalInvariantError(f"lead target of b[{j}] has term {t} outside the pool")
            if not c.indeterminates() <= theta_ids:
                raise InternalInvariantError("target coefficients must involve only theta's")
    # the first back variable divides the target of each block top to the block's depth
    for e in range(0, sig.w + 1):
        top = _lead_block(oid, e)[0]
        target = tm.targets[oid.index_of_border[top]]
        for t in target.terms:
            if t.var_degree(sig.delta + 1) < e:
                raise InternalInvariantError(
                    f"target of {top} violates the back-variable divisibility of its block"
                )


def render_targets(oid: OrderIdealData, tm: TargetMap) -> str:
    """One line 'Upsilon(b[j]) = <polynomial>' per target, by border index."""
    lines = []
    for j in sorted(tm.targets):
        lines.append(f"Upsilon(b[{j}]) = {tm.targets[j]}")
    return "\n".join(lines)
