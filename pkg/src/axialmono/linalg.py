"""Exact sparse linear algebra over the rationals.

Rows are mappings ``column -> value`` (ints or Fractions).  Elimination is
fraction-free: every working row is an integer vector kept primitive (content
divided out), so no rational arithmetic happens until solutions are read off.
The pivot of every row is its smallest column, which produces the reduced row
echelon form; free variables are therefore the trailing columns and the basic
solution (free variables set to zero) is deterministic.

Systems are split into connected components of the column-sharing graph
before elimination.  Decompositions in this package produce many small
decoupled blocks, so this keeps everything cheap.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping, Sequence

Row = Mapping[int, object]


class InconsistentSystem(ValueError):
    pass


def _integer_row(row: Row) -> dict[int, int]:
    den = 1
    for v in row.values():
        if isinstance(v, Fraction):
            den = lcm(den, v.denominator)
        elif not isinstance(v, int):
            raise TypeError(f"exact entries required, got {type(v).__name__}")
    out = {}
    for c, v in row.items():
        if v:
            iv = v * den
            out[c] = int(iv)
    return _primitive(out)


def _primitive(row: dict[int, int]) -> dict[int, int]:
    if not row:
        return row
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            break
    lead = row[min(row)]
    if lead < 0:
        g = -g
    if g != 1:
        row = {c: v // g for c, v in row.items()}
    return row


def _eliminate(target: dict[int, int], pivot_row: dict[int, int], col: int) -> dict[int, int]:
    a = pivot_row[col]
    b = target[col]
    g = gcd(a, b)
    a //= g
    b //= g
    out = {c: a * v for c, v in target.items()}
    for c, v in pivot_row.items():
        nv = out.get(c, 0) - b * v
        if nv:
            out[c] = nv
        else:
            out.pop(c, None)
    return _primitive(out)


def _components(rows: Sequence[dict[int, int]], exclude: int | None) -> list[list[int]]:
    parent: dict[int, int] = {}

    def find(x):
        root = x
        while parent.setdefault(root, root) != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    for row in rows:
        cols = [c for c in row if c != exclude]
        if not cols:
            continue
        r0 = find(cols[0])
        for c in cols[1:]:
            rc = find(c)
            if rc != r0:
                parent[rc] = r0
    groups: dict[int, list[int]] = {}
    for i, row in enumerate(rows):
        cols = [c for c in row if c != exclude]
        key = find(cols[0]) if cols else -1
        groups.setdefault(key, []).append(i)
    return list(groups.values())


def rref(rows: Iterable[Row], exclude: int | None = None) -> dict[int, dict[int, int]]:
    """Reduced row echelon form as ``{pivot column: primitive integer row}``.

    ``exclude`` names an augmented (right-hand side) column that is never used
    to join components; it can still become a pivot, which signals an
    inconsistent system.
    """
    int_rows = [r for r in (_integer_row(row) for row in rows) if r]
    pivots: dict[int, dict[int, int]] = {}
    for comp in _components(int_rows, exclude):
        local: dict[int, dict[int, int]] = {}
        for i in comp:
            r = int_rows[i]
            for c in sorted(set(r) & local.keys()):
                if c in r:
                    r = _eliminate(r, local[c], c)
            if not r:
                continue
            p = min(r)
            for c, prow in list(local.items()):
                if p in prow:
                    local[c] = _eliminate(prow, r, p)
            local[p] = r
        pivots.update(local)
    return pivots


def rank(rows: Iterable[Row]) -> int:
    return len(rref(rows))


def nullspace(rows: Iterable[Row], ncols: int) -> list[dict[int, Fraction]]:
    """Basis of ``{v : row . v = 0 for all rows}``, one vector per free column."""
    piv = rref(rows)
    pivot_of_col: dict[int, list[int]] = {}
    for p, row in piv.items():
        for c in row:
            if c != p:
                pivot_of_col.setdefault(c, []).append(p)
    basis = []
    for f in range(ncols):
        if f in piv:
            continue
        v = {f: Fraction(1)}
        for p in pivot_of_col.get(f, ()):
            row = piv[p]
            v[p] = Fraction(-row[f], row[p])
        basis.append(v)
    return basis


def solve(rows: Sequence[Row], rhs: Sequence[object], ncols: int) -> list[Fraction]:
    """Basic solution of ``rows . x = rhs`` (free variables zero).

    Raises :class:`InconsistentSystem` when no solution exists.
    """
    if len(rows) != len(rhs):
        raise ValueError("rows and rhs differ in length")
    aug = []
    for row, b in zip(rows, rhs):
        r = {c: v for c, v in row.items() if v}
        if b:
            r[ncols] = b
        aug.append(r)
    piv = rref(aug, exclude=ncols)
    if ncols in piv:
        raise InconsistentSystem("right-hand side is not in the column space")
    x = [Fraction(0)] * ncols
    for p, row in piv.items():
        x[p] = Fraction(row.get(ncols, 0), row[p])
    return x
