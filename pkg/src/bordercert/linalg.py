"""Exact rank computation for sparse rational and prime-field matrices.

Rows are sparse mappings column -> value.  Rational ranks go through a
fraction-free integer elimination (clear denominators once, then combine
rows by cross-multiplication and strip common factors), so no rounding can
occur anywhere.  Prime-field ranks use ordinary elimination with pivots
normalized to 1.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Dict, Iterable, List

from .coeffring import PrimeFieldScalar
from .monomial import ArgumentError

SparseRow = Dict[int, object]


def _to_integer_row(row: SparseRow) -> Dict[int, int]:
    denom = 1
    for v in row.values():
        f = v if isinstance(v, Fraction) else Fraction(v)
        denom = denom * f.denominator // gcd(denom, f.denominator)
    out = {}
    common = 0
    for c, v in row.items():
        f = v if isinstance(v, Fraction) else Fraction(v)
        n = int(f * denom)
        if n:
            out[c] = n
            common = gcd(common, n)
    if common > 1:
        out = {c: n // common for c, n in out.items()}
    return out


def _strip_content(row: Dict[int, int]) -> Dict[int, int]:
    common = 0
    for n in row.values():
        common = gcd(common, n)
        if common == 1:
            return row
    if common > 1:
        return {c: n // common for c, n in row.items()}
    return row


def exact_rank(rows: Iterable[SparseRow]) -> int:
    """Rank over the rationals of sparse rows with Fraction/int values."""
    pivots: Dict[int, Dict[int, int]] = {}
    rank = 0
    for raw in sorted(rows, key=len):  # sparse rows first limits fill-in
        row = _to_integer_row(raw)
        while row:
            lead = min(row)
            pivot = pivots.get(lead)
            if pivot is None:
                pivots[lead] = _strip_content(row)
                rank += 1
                break
            pl, rl = pivot[lead], row[lead]
            new: Dict[int, int] = {}
            for c, v in row.items():
                new[c] = v * pl
            for c, v in pivot.items():
                n = new.get(c, 0) - v * rl
                if n:
                    new[c] = n
                else:
                    new.pop(c, None)
            row = _strip_content(new)
    return rank


def modp_rank(rows: Iterable[SparseRow], prime: int) -> int:
    """Rank over the field with `prime` elements; values are ints or residues."""
    pivots: Dict[int, Dict[int, int]] = {}
    rank = 0
    for raw in sorted(rows, key=len):
        row = {}
        for c, v in raw.items():
            n = v.residue if isinstance(v, PrimeFieldScalar) else int(v) % prime
            if n:
                row[c] = n
        while row:
            lead = min(row)
            pivot = pivots.get(lead)
            if pivot is None:
                inv = pow(row[lead], -1, prime)
                pivots[lead] = {c: (v * inv) % prime for c, v in row.items()}
                rank += 1
                break
            rl = row[lead]
            new = dict(row)
            for c, v in pivot.items():
                n = (new.get(c, 0) - v * rl) % prime
                if n:
                    new[c] = n
                else:
                    new.pop(c, None)
            row = new
    return rank


def dedupe_rows(rows: Iterable[SparseRow], prime: int = 0) -> List[SparseRow]:
    """Drop exact duplicates up to scaling; empty rows are dropped too."""
    seen = set()
    out: List[SparseRow] = []
    for row in rows:
        if not row:
            continue
        if prime:
            items = []
            for c, v in row.items():
                n = v.residue if isinstance(v, PrimeFieldScalar) else int(v) % prime
                if n:
                    items.append((c, n))
            items.sort()
            if not items:
                continue
            inv = pow(items[0][1], -1, prime)
            key = tuple((c, (n * inv) % prime) for c, n in items)
        else:
            items = sorted(row.items())
            inv = Fraction(1) / Fraction(items[0][1])
            key = tuple((c, Fraction(v) * inv) for c, v in items)
        if key in seen:
            continue
        seen.add(key)
        out.append(row)
    return out


def rank_of(rows: Iterable[SparseRow], prime: int = 0) -> int:
    """Deduplicate then rank, over Q (prime=0) or over F_prime."""
    if prime < 0:
        raise ArgumentError("prime must be positive")
    deduped = dedupe_rows(rows, prime)
    return modp_rank(deduped, prime) if prime else exact_rank(deduped)
