"""Tests for the three-step target assignment and the modified system.

The two golden dump files were checked line by line against hand-computed
values: every coefficient of the (3,4,6,2,1) target of b[11] was derived by
expanding reduce(x2 * target(b[12])) manually and dividing by x3.
"""

import re
from pathlib import Path

import pytest

from bordercert import (
    ArgumentError,
    CoeffPoly,
    IndeterminateRegistry,
    Monomial,
    Signature,
    SpanElement,
    build,
    build_generic_modification,
    build_targets,
    generic_distinguished,
    install_targets,
    is_border_basis,
    render_targets,
    across_street_path,
    step1,
    step2,
    step3,
)
from helpers import small_signatures

GOLDEN = Path(__file__).parent / "golden"


def _theta(reg, q):
    return CoeffPoly.indeterminate(reg, reg.theta_id(q))


def test_step1_seeds_the_top_block():
    oid = build(Signature(3, 4, 6, 2, 1))
    tm = step1(oid)
    reg = tm.registry
    # the only degree-4 block with depth w=1 is the singleton {x2^3*x3}
    assert set(tm.targets) == {12}
    expected = SpanElement(
        {
            Monomial((0, 2, 2)): _theta(reg, 1),
            Monomial((0, 1, 3)): _theta(reg, 2),
            Monomial((0, 0, 4)): _theta(reg, 3),
            Monomial((0, 2, 3)): _theta(reg, 4),
            Monomial((0, 1, 4)): _theta(reg, 5),
            Monomial((0, 0, 5)): _theta(reg, 6),
        }
    )
    assert tm.targets[12] == expected
    assert tm.get(11) == SpanElement()


def test_step1_spreads_across_a_wider_block():
    # (5,2,3,3,0): the top degree-2 block is all of degree-2 in x3..x5
    oid = build(Signature(5, 2, 3, 3, 0))
    tm = step1(oid)
    indices = sorted(tm.targets)
    assert indices == [oid.index_of_border[m] for m in oid.s_lead]
    assert len(indices) == 1  # w=0: block {x3^2 >= m >= x3^2}
    reg = tm.registry
    seeded = tm.targets[oid.index_of_border[Monomial((0, 0, 2, 0, 0))]]
    assert seeded == SpanElement(
        {
            Monomial((0, 0, 1, 1, 0)): _theta(reg, 1),
            Monomial((0, 0, 1, 0, 1)): _theta(reg, 2),
            Monomial((0, 0, 0, 2, 0)): _theta(reg, 3),
            Monomial((0, 0, 0, 1, 1)): _theta(reg, 4),
            Monomial((0, 0, 0, 0, 2)): _theta(reg, 5),
        }
    )


def test_step2_multiplies_and_truncates():
    oid = build(Signature(3, 4, 6, 2, 1))
    tm = step2(oid, step1(oid))
    reg = tm.registry
    # b[20] = x2^3*x3^3 = x3^2 * b[12]; degree-7 products are dropped
    assert tm.targets[20] == SpanElement(
        {
            Monomial((0, 2, 4)): _theta(reg, 1),
            Monomial((0, 1, 5)): _theta(reg, 2),
            Monomial((0, 0, 6)): _theta(reg, 3),
        }
    )
    # b[16] = x2^3*x3^2 keeps all six shifted terms
    assert len(tm.targets[16].terms) == 6
    assert set(tm.targets) == {12, 16, 20}


def test_step2_requires_step1():
    oid = build(Signature(3, 4, 6, 2, 1))
    from bordercert.modification import TargetMap

    with pytest.raises(ArgumentError):
        step2(oid, TargetMap(IndeterminateRegistry(oid), {}))


def test_step3_reduce_and_divide_golden():
    """The filled-in target of b[11] = x2^4 in the (3,4,6,2,1) system."""
    oid = build(Signature(3, 4, 6, 2, 1))
    tm = step2(oid, step1(oid))
    reg = tm.registry
    sys_partial = install_targets(generic_distinguished(oid, reg), tm)
    tm = step3(oid, tm, sys_partial)
    t = [None] + [_theta(reg, q) for q in range(1, 7)]
    two = CoeffPoly.constant(reg, 2)
    expected = SpanElement(
        {
            Monomial((0, 2, 2)): t[2] - t[1] * t[1],
            Monomial((0, 1, 3)): t[3] - t[1] * t[2],
            Monomial((0, 0, 4)): -(t[1] * t[3]),
            Monomial((0, 2, 3)): t[5] - two * t[1] * t[4],
            Monomial((0, 1, 4)): t[6] - t[1] * t[5] - t[2] * t[4],
            Monomial((0, 0, 5)): -(t[1] * t[6]) - t[3] * t[4],
        }
    )
    assert tm.targets[11] == expected


def test_step3_requires_earlier_steps():
    oid = build(Signature(3, 4, 6, 2, 1))
    from bordercert.modification import TargetMap

    reg = IndeterminateRegistry(oid)
    empty = TargetMap(reg, {})
    with pytest.raises(ArgumentError):
        step3(oid, empty, generic_distinguished(oid, reg))


def test_step3_is_a_no_op_for_zero_block_depth():
    oid = build(Signature(5, 2, 3, 3, 0))
    tm = step2(oid, step1(oid))
    sys_partial = install_targets(generic_distinguished(oid, tm.registry), tm)
    assert step3(oid, tm, sys_partial).targets == tm.targets


def test_deep_factorization_is_choice_independent():
    """Every admissible split of a deep target monomial gives the same target."""
    for sig in (Signature(4, 2, 4, 2, 1), Signature(5, 2, 3, 3, 0)):
        oid = build(sig)
        tm = build_targets(oid)
        middle_power = Monomial.variable(sig.n, sig.delta, sig.r - sig.w)
        top_block = [m for m in oid.s_lead if m.var_degree(sig.delta) == sig.r - sig.w]
        checked = 0
        for b in oid.s_deep:
            target = tm.targets[oid.index_of_border[b]]
            for src in top_block:
                m_prime = b.try_div(src)
                if m_prime is None or m_prime.min_variable() <= sig.delta:
                    continue
                shifted = tm.targets[oid.index_of_border[src]].monomial_multiple(m_prime)
                truncated = SpanElement(
                    {t: c for t, c in shifted.terms.items() if t.degree <= sig.s}
                )
                assert truncated == target
                checked += 1
        assert checked >= len(oid.s_deep)


def test_deep_targets_transport_along_paths():
    """Within one degree slice the deep targets are path-shifts of each other."""
    for sig in (Signature(5, 2, 3, 3, 0), Signature(4, 2, 4, 2, 1), Signature(3, 4, 6, 2, 1)):
        oid = build(sig)
        tm = build_targets(oid)
        by_degree = {}
        for b in oid.s_deep:
            by_degree.setdefault(b.degree, []).append(b)
        for block in by_degree.values():
            top = block[0]
            for b in block[1:]:
                value = tm.targets[oid.index_of_border[top]]
                for stp in across_street_path(oid, top, b):
                    value = value.variable_shift(stp.alpha, stp.beta)
                assert value == tm.targets[oid.index_of_border[b]]


def test_target_invariants_across_grid():
    sample = [
        sig
        for sig in small_signatures(n_max=4, s_max=5)
        if sig.n >= 3
    ][::3] + [Signature(5, 2, 3, 3, 0), Signature(5, 2, 3, 3, 1)]
    for sig in sample:
        oid = build(sig)
        tm = build_targets(oid)  # internal validation runs here
        targeted = {oid.index_of_border[m] for m in oid.s_lead}
        targeted |= {oid.index_of_border[m] for m in oid.s_deep}
        assert set(tm.targets) == targeted
        pool_prime = set(oid.tar_prime)
        for m in oid.s_lead:
            target = tm.targets[oid.index_of_border[m]]
            for t, c in target.terms.items():
                assert t in pool_prime
                assert c.indeterminates() <= {
                    tm.registry.theta_id(q) for q in range(1, oid.gamma + 1)
                }
        for m in oid.s_deep:
            target = tm.targets[oid.index_of_border[m]]
            for t in target.terms:
                assert m.degree <= t.degree <= sig.s
                assert t in set(oid.tar_all)


def test_block_depth_divisibility():
    """The first back variable divides each block-top target to the block depth."""
    sig = Signature(3, 4, 6, 2, 1)
    oid = build(sig)
    tm = build_targets(oid)
    for m in oid.s_lead:
        e = sig.r - m.var_degree(sig.delta)  # depth of the block m heads
        target = tm.targets[oid.index_of_border[m]]
        for t in target.terms:
            assert t.var_degree(sig.delta + 1) >= e


def test_modified_system_tail_shape():
    sig = Signature(3, 4, 6, 2, 1)
    oid = build(sig)
    reg = IndeterminateRegistry(oid)
    sys = build_generic_modification(oid, reg)
    tm = build_targets(oid, reg)

    trailing = {oid.index_of_basis[t] for t in oid.trailing}
    # the seeded generator: minus-theta on the seed pool, plain C elsewhere
    tail12 = sys.tail(12)
    for q, t in enumerate(oid.tar_double_prime, start=1):
        assert tail12[oid.index_of_basis[t]] == -_theta(reg, q)
    for i in trailing:
        assert str(tail12[i]) == f"C[{i},12]"
    # a deep generator is not a leading one: pure minus-target tail
    tail16 = sys.tail(16)
    deep_target = tm.targets[16]
    assert set(tail16) == {oid.index_of_basis[t] for t in deep_target.terms}
    for t, c in deep_target.terms.items():
        assert tail16[oid.index_of_basis[t]] == -c
    # an untargeted border generator keeps an empty tail
    untargeted = [
        j
        for j in range(1, oid.nu + 1)
        if oid.border[j - 1] not in set(oid.s_lead) | set(oid.s_deep)
        and oid.border[j - 1] not in set(oid.leading)
    ]
    for j in untargeted:
        assert sys.tail(j) == {}
    # no tail coefficient carries a constant term
    for j in range(1, oid.nu + 1):
        for c in sys.tail(j).values():
            assert c.constant_term == 0


def test_modified_system_is_a_border_basis_symbolically():
    for sig in (
        Signature(3, 2, 3, 2, 1),
        Signature(3, 4, 6, 2, 1),
        Signature(4, 2, 3, 2, 1),
        Signature(4, 3, 4, 3, 2),
        Signature(5, 2, 3, 3, 0),
        Signature(3, 2, 4, 1, 1),
        Signature(4, 3, 4, 2, 1),
    ):
        sys = build_generic_modification(build(sig))
        ok, failures = is_border_basis(sys)
        assert ok, (sig, failures[:1])


def test_render_targets_golden_files():
    for sig, name in [
        (Signature(3, 4, 6, 2, 1), "modify_3_4_6_2_1.txt"),
        (Signature(5, 2, 3, 3, 0), "modify_5_2_3_3_0.txt"),
    ]:
        oid = build(sig)
        text = render_targets(oid, build_targets(oid)) + "\n"
        assert text == (GOLDEN / name).read_text()


def test_render_targets_format():
    oid = build(Signature(4, 2, 4, 2, 1))
    text = render_targets(oid, build_targets(oid))
    lines = text.splitlines()
    js = []
    for line in lines:
        m = re.fullmatch(r"Upsilon\(b\[(\d+)\]\) = .+", line)
        assert m, line
        js.append(int(m.group(1)))
    assert js == sorted(js)
