"""Shared brute-force oracles and signature grids for the test suite."""

from __future__ import annotations

from fractions import Fraction
from itertools import product

from bordercert import Signature


def fraction_rank(rows):
    """Rank of a list of Fraction row vectors by plain Gaussian elimination.

    Deliberately independent of the package's own rank routines so it can act
    as an oracle for them.
    """
    pivots = []  # list of (column, normalized row)
    rank = 0
    for row in rows:
        row = list(row)
        for col, prow in pivots:
            c = row[col]
            if c:
                for k in range(col, len(row)):
                    row[k] -= c * prow[k]
        lead = next((k for k, v in enumerate(row) if v), None)
        if lead is None:
            continue
        inv = Fraction(1) / row[lead]
        row = [v * inv for v in row]
        pivots.append((lead, row))
        pivots.sort(key=lambda cr: cr[0])
        rank += 1
    return rank


def membership_rows(sys, mult_degree):
    """Coefficient rows of m * g_j over all monomials of bounded degree.

    The row space is the degree-limited slice of the ideal, giving a linear-
    algebra membership oracle that is independent of the rewriting engine.
    """
    from bordercert import monomials_of

    sig = sys.oid.signature
    top = mult_degree + sig.s + 1
    columns = [m for d in range(top + 1) for m in monomials_of(sig.n, 1, d)]
    col_of = {m: k for k, m in enumerate(columns)}
    rows = []
    for j in range(1, sys.oid.nu + 1):
        gen = sys.generator(j)
        for d in range(mult_degree + 1):
            for m in monomials_of(sig.n, 1, d):
                row = [Fraction(0)] * len(columns)
                for t, c in gen.monomial_multiple(m).terms.items():
                    row[col_of[t]] = c
                rows.append(row)
    return rows, col_of


def as_dense_row(f, col_of):
    row = [Fraction(0)] * len(col_of)
    for t, c in f.terms.items():
        row[col_of[t]] = c
    return row


def monomial_lcm(m1, m2):
    from bordercert import Monomial

    return Monomial(tuple(max(a, b) for a, b in zip(m1.exps, m2.exps)))


def hom_tangent_oracle(oid):
    """dim Hom(I, R/I) for the monomial ideal generated by the border.

    Independent route: minimal monomial generators with pairwise
    least-common-multiple syzygies (which generate the full syzygy module of
    a monomial ideal), eliminated by the dense Fraction oracle above.  The
    tangent space of the punctual Hilbert scheme at a monomial point equals
    this Hom space.
    """
    border = list(oid.border)
    mingens = [
        b for b in border if not any(b2 != b and b2.divides(b) for b2 in border)
    ]
    basis = list(oid.basis)
    position = {m: k for k, m in enumerate(basis)}
    mu, ngen = len(basis), len(mingens)
    rows = {}
    for a in range(ngen):
        for b in range(a + 1, ngen):
            lcm = monomial_lcm(mingens[a], mingens[b])
            qa = lcm.try_div(mingens[a])
            qb = lcm.try_div(mingens[b])
            # relation (lcm/m_a) u_a - (lcm/m_b) u_b = 0 in R/I, one scalar
            # equation per basis monomial the two products can land on
            by_target = {}
            for t_pos, t in enumerate(basis):
                hit = position.get(qa.mul(t))
                if hit is not None:
                    by_target.setdefault(hit, {})[a * mu + t_pos] = Fraction(1)
                hit = position.get(qb.mul(t))
                if hit is not None:
                    cell = by_target.setdefault(hit, {})
                    cell[b * mu + t_pos] = cell.get(b * mu + t_pos, Fraction(0)) - 1
            for sparse in by_target.values():
                key = tuple(sorted((c, v) for c, v in sparse.items() if v))
                if key:
                    rows[key] = sparse
    ncols = ngen * mu
    dense = [[row.get(c, Fraction(0)) for c in range(ncols)] for row in rows.values()]
    return ncols - fraction_rank(dense)


def small_signatures(n_max: int = 5, s_max: int = 5):
    """Every valid signature with n <= n_max and s <= s_max."""
    sigs = []
    for n in range(2, n_max + 1):
        for delta in range(1, n):
            for r in range(2, s_max):
                for s in range(r + 1, s_max + 1):
                    for w in range(0, r):
                        sigs.append(Signature(n, r, s, delta, w))
    return sigs


def paper_table_signatures():
    """The eight summary rows: signature -> (hilbert, dimU)."""
    return {
        (5, 2, 3, 3, 0): ((1, 5, 5, 7), 86),
        (5, 3, 4, 3, 1): ((1, 5, 15, 7, 9), 268),
        (5, 3, 5, 3, 1): ((1, 5, 15, 7, 9, 11), 341),
        (5, 3, 5, 3, 0): ((1, 5, 15, 9, 12, 15), 434),
        (6, 2, 4, 4, 0): ((1, 6, 5, 7, 9), 186),
        (6, 3, 4, 4, 1): ((1, 6, 21, 7, 9), 461),
        (6, 3, 4, 3, 2): ((1, 6, 21, 10, 15), 705),
        (6, 3, 4, 3, 1): ((1, 6, 21, 16, 25), 1023),
    }
