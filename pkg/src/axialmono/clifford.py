"""Arithmetic in the real Clifford algebra R_{0,m} and its complexification.

Blades are bitmasks: bit ``j-1`` set means ``e_j`` is a factor.  Generators
square to ``-1``.  Coefficients may be :class:`fractions.Fraction`, ``int``,
``float`` or ``complex``; nothing here depends on which.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

import numpy as np

MAX_DIM = 12


class DimensionError(ValueError):
    pass


def grade(blade: int) -> int:
    return bin(blade).count("1")


@lru_cache(maxsize=None)
def blade_product(a: int, b: int) -> tuple[int, int]:
    """Return ``(sign, blade)`` with ``e_a e_b = sign * e_blade``."""
    # each generator of b moves left past the higher-index generators of a
    swaps = 0
    t = a >> 1
    while t:
        swaps += grade(t & b)
        t >>= 1
    # contracted pairs e_j e_j = -1
    swaps += grade(a & b)
    return (-1 if swaps & 1 else 1), a ^ b


def blade_from_indices(indices: Iterable[int]) -> int:
    """Bitmask of a strictly increasing list of 1-based generator indices."""
    idx = list(indices)
    if any(j >= k for j, k in zip(idx, idx[1:])):
        raise ValueError(f"blade indices must be strictly increasing: {idx}")
    out = 0
    for j in idx:
        if j < 1:
            raise ValueError(f"generator index must be >= 1, got {j}")
        out |= 1 << (j - 1)
    return out


def blade_indices(blade: int) -> list[int]:
    out, j = [], 1
    while blade:
        if blade & 1:
            out.append(j)
        blade >>= 1
        j += 1
    return out


def blades_of_grade(m: int, ell: int) -> list[int]:
    return [b for b in range(1 << m) if grade(b) == ell]


def _check_dim(m: int) -> None:
    if not 1 <= m <= MAX_DIM:
        raise DimensionError(f"dimension must be in 1..{MAX_DIM}, got {m}")


class Multivector:
    """Immutable sparse element of R_{0,m}.

    ``terms`` maps blade bitmasks to nonzero coefficients.
    """

    __slots__ = ("m", "_terms", "_hash")

    def __init__(self, m: int, terms: Mapping[int, object] | None = None):
        _check_dim(m)
        clean = {}
        if terms:
            top = 1 << m
            for blade, c in terms.items():
                if not 0 <= blade < top:
                    raise DimensionError(f"blade {blade} out of range for m={m}")
                if c != 0:
                    clean[blade] = c
        self.m = m
        self._terms = clean
        self._hash = None

    # construction helpers
    @classmethod
    def scalar(cls, m: int, c=1) -> "Multivector":
        return cls(m, {0: c})

    @classmethod
    def basis(cls, m: int, *indices: int, coef=1) -> "Multivector":
        """``basis(3, 1, 2)`` is ``e_1 e_2``."""
        return cls(m, {blade_from_indices(indices): coef})

    @classmethod
    def vector(cls, coords) -> "Multivector":
        coords = list(coords)
        return cls(len(coords), {1 << j: c for j, c in enumerate(coords)})

    @classmethod
    def zero(cls, m: int) -> "Multivector":
        return cls(m)

    @property
    def terms(self) -> dict[int, object]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __getitem__(self, blade: int):
        return self._terms.get(blade, 0)

    def __len__(self):
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def grades(self) -> set[int]:
        return {grade(b) for b in self._terms}

    # arithmetic
    def _same_dim(self, other: "Multivector") -> None:
        if self.m != other.m:
            raise DimensionError(f"dimension mismatch: {self.m} vs {other.m}")

    def __add__(self, other):
        if not isinstance(other, Multivector):
            other = Multivector.scalar(self.m, other)
        self._same_dim(other)
        out = dict(self._terms)
        for b, c in other._terms.items():
            out[b] = out.get(b, 0) + c
        return Multivector(self.m, out)

    __radd__ = __add__

    def __neg__(self):
        return Multivector(self.m, {b: -c for b, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Multivector):
            other = Multivector.scalar(self.m, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, s) -> "Multivector":
        return Multivector(self.m, {b: c * s for b, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, Multivector):
            return geometric_product(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __truediv__(self, s):
        if isinstance(s, int):
            s = Fraction(s)
        return Multivector(self.m, {b: c / s for b, c in self._terms.items()})

    def __eq__(self, other):
        if isinstance(other, Multivector):
            return self.m == other.m and self._terms == other._terms
        if other == 0:
            return not self._terms
        return self._terms == ({0: other} if other != 0 else {})

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.m, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        if not self._terms:
            return "0"
        parts = []
        for b in sorted(self._terms, key=lambda b: (grade(b), b)):
            name = "e" + "".join(str(j) for j in blade_indices(b)) if b else "1"
            parts.append(f"{self._terms[b]}*{name}")
        return " + ".join(parts)

    def map_coefficients(self, f) -> "Multivector":
        return Multivector(self.m, {b: f(c) for b, c in self._terms.items()})

    def max_abs(self) -> float:
        return max((abs(c) for c in self._terms.values()), default=0.0)

    def to_array(self, dtype=complex) -> np.ndarray:
        out = np.zeros(1 << self.m, dtype=dtype)
        for b, c in self._terms.items():
            out[b] = c
        return out

    @classmethod
    def from_array(cls, m: int, arr, tol: float = 0.0) -> "Multivector":
        return cls(m, {b: complex(c) if np.iscomplexobj(arr) else float(c)
                       for b, c in enumerate(arr) if abs(c) > tol})


def geometric_product(a: Multivector, b: Multivector) -> Multivector:
    a._same_dim(b)
    out: dict[int, object] = {}
    for ba, ca in a._terms.items():
        for bb, cb in b._terms.items():
            s, blade = blade_product(ba, bb)
            v = ca * cb
            out[blade] = out.get(blade, 0) + (v if s > 0 else -v)
    return Multivector(a.m, out)


def _conj_sign(blade: int) -> int:
    # reversal (-1)^{l(l-1)/2} times (-1)^l from e_j -> -e_j
    ell = grade(blade)
    return -1 if (ell * (ell + 1) // 2) & 1 else 1


def conjugate(a: Multivector) -> Multivector:
    return Multivector(a.m, {b: c if _conj_sign(b) > 0 else -c for b, c in a.items()})


def reverse(a: Multivector) -> Multivector:
    return Multivector(a.m, {b: c if (grade(b) * (grade(b) - 1) // 2) % 2 == 0 else -c
                             for b, c in a.items()})


def grade_project(a: Multivector, ell: int) -> Multivector:
    if not 0 <= ell <= a.m:
        raise ValueError(f"grade {ell} outside 0..{a.m}")
    return Multivector(a.m, {b: c for b, c in a.items() if grade(b) == ell})


def sandwich_sum(a: Multivector) -> Multivector:
    """Sum over j of ``e_j a e_j``."""
    out = Multivector.zero(a.m)
    for j in range(a.m):
        e = Multivector(a.m, {1 << j: 1})
        out = out + e * a * e
    return out


def mu(ell: int, m: int) -> int:
    """Eigenvalue of the sandwich sum on grade-``ell`` elements."""
    if not 0 <= ell <= m:
        raise ValueError(f"grade {ell} outside 0..{m}")
    return (-1) ** ell * (2 * ell - m)


@lru_cache(maxsize=None)
def cayley_table(m: int) -> tuple[np.ndarray, np.ndarray]:
    """Dense sign and index tables: ``e_a e_b = sign[a, b] * e_{index[a, b]}``."""
    n = 1 << m
    sign = np.empty((n, n), dtype=np.int8)
    index = np.empty((n, n), dtype=np.int64)
    for a in range(n):
        for b in range(n):
            s, c = blade_product(a, b)
            sign[a, b] = s
            index[a, b] = c
    return sign, index


def array_product(x: np.ndarray, y: np.ndarray, m: int) -> np.ndarray:
    """Geometric product of stacked dense multivectors, shape ``(..., 2**m)``."""
    sign, _ = cayley_table(m)
    n = 1 << m
    x, y = np.broadcast_arrays(x, y)
    out = np.zeros(x.shape, dtype=np.result_type(x, y))
    for a in range(n):
        xa = x[..., a]
        if not np.any(xa):
            continue
        for b in range(n):
            out[..., a ^ b] += sign[a, b] * xa * y[..., b]
    return out
