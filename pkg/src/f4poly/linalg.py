"""Exact sparse linear algebra over the rationals: echelon form, rank, nullspace.

Rows are dicts column -> coefficient (int or Fraction, zeros absent).  The
elimination is fraction-free: rows are rescaled to primitive integer vectors
after every combination, so all intermediate entries stay integral.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Dict, Iterable, List, Sequence, Tuple

Row = Dict[int, int]


def _to_int_row(row: Dict[int, object]) -> Row:
    """Clear denominators and divide by the content; drop zeros."""
    den = 1
    for c in row.values():
        if isinstance(c, Fraction):
            den = den * c.denominator // gcd(den, c.denominator)
    out: Row = {}
    g = 0
    for col, c in row.items():
        v = int(c * den)
        if v:
            out[col] = v
            g = gcd(g, v)
    if g > 1:
        for col in out:
            out[col] //= g
    return out


def echelon(rows: Iterable[Dict[int, object]]) -> List[Tuple[int, Row]]:
    """Reduce to row echelon form.

    Returns [(pivot_col, pivot_row), ...] in increasing pivot-column order.
    Each pivot row is a primitive integer row whose minimal column is its
    pivot.  Pivot choice (fewest nonzeros, then input order) is deterministic.
    """
    active = [r for r in (_to_int_row(row) for row in rows) if r]
    if not active:
        return []
    maxcol = max(max(r) for r in active)
    pivots: List[Tuple[int, Row]] = []
    for col in range(maxcol + 1):
        best = -1
        for idx, r in enumerate(active):
            if col in r and (best < 0 or len(r) < len(active[best])):
                best = idx
        if best < 0:
            continue
        piv = active.pop(best)
        a = piv[col]
        reduced = []
        for r in active:
            b = r.pop(col, 0)
            if b:
                g = 0
                out: Row = {}
                for c, v in r.items():
                    out[c] = a * v
                for c, v in piv.items():
                    if c == col:
                        continue
                    w = out.get(c, 0) - b * v
                    if w:
                        out[c] = w
                    else:
                        out.pop(c, None)
                for v in out.values():
                    g = gcd(g, v)
                if g > 1:
                    for c in out:
                        out[c] //= g
                if out:
                    reduced.append(out)
            else:
                reduced.append(r)
        active = reduced
        pivots.append((col, piv))
        if not active:
            break
    return pivots


def rank(rows: Iterable[Dict[int, object]]) -> int:
    return len(echelon(rows))


def nullspace(rows: Iterable[Dict[int, object]], ncols: int) -> List[Tuple[int, ...]]:
    """Primitive integer basis of the right kernel, one vector per free column.

    Vectors are length-ncols tuples; the basis is ordered by free column and
    each vector is normalized so its first nonzero entry is positive.
    """
    pivots = echelon(rows)
    pivot_cols = [c for c, _ in pivots]
    pivot_set = set(pivot_cols)
    basis: List[Tuple[int, ...]] = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        x: Dict[int, Fraction] = {free: Fraction(1)}
        for col, row in reversed(pivots):
            if col > free:
                continue
            s = Fraction(0)
            for c, v in row.items():
                if c != col and c in x:
                    s += v * x[c]
            if s:
                x[col] = -s / row[col]
        den = 1
        for c in x.values():
            den = den * c.denominator // gcd(den, c.denominator)
        ints = {col: int(v * den) for col, v in x.items()}
        g = 0
        for v in ints.values():
            g = gcd(g, v)
        if g > 1:
            ints = {col: v // g for col, v in ints.items()}
        vec = [0] * ncols
        for col, v in ints.items():
            vec[col] = v
        for v in vec:
            if v:
                if v < 0:
                    vec = [-w for w in vec]
                break
        basis.append(tuple(vec))
    return basis


def rank_of_vectors(vectors: Sequence[Sequence[object]]) -> int:
    """Rank of a list of dense coefficient sequences."""
    rows = []
    for vec in vectors:
        rows.append({i: c for i, c in enumerate(vec) if c})
    return rank(rows)
