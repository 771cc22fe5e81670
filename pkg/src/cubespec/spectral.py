"""Eigenvalue-level machinery of the hypercube.

The adjacency spectrum of H(n) is n - 2i for levels i = 0..n; the level-i
eigenspace is spanned by the characters chi_u with weight(u) = i.  The
spectrum of a function is the set of levels carrying a nonzero Fourier
coefficient, and a function lies "in band [i, j]" when every coefficient
outside weights i..j vanishes (so the zero function is in every band).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .functions import (
    MAX_DIMENSION,
    VertexFunction,
    inverse_walsh,
    walsh_transform,
    weight,
)


@dataclass(frozen=True)
class SpectrumSet:
    """Set of eigenvalue levels present in a function, with its ambient n."""

    n: int
    levels: frozenset[int]

    def __post_init__(self):
        if any(not 0 <= i <= self.n for i in self.levels):
            raise ValueError(f"levels {sorted(self.levels)} out of range 0..{self.n}")

    @property
    def sorted_levels(self) -> tuple[int, ...]:
        return tuple(sorted(self.levels))

    def __contains__(self, level: int) -> bool:
        return level in self.levels

    def __iter__(self):
        return iter(self.sorted_levels)


def character(n: int, u: int) -> VertexFunction:
    """The character chi_u(x) = (-1)^(u.x), a +-1 valued function on H(n)."""
    if not 0 <= n <= MAX_DIMENSION:
        raise ValueError(f"dimension must be in [0, {MAX_DIMENSION}], got {n}")
    if not 0 <= u < (1 << n):
        raise ValueError(f"vertex code {u} out of range for n={n}")
    one = Fraction(1)
    vals = tuple(-one if weight(u & x) & 1 else one for x in range(1 << n))
    return VertexFunction(n, vals)


def eigenvalue_of_level(n: int, i: int) -> int:
    """Adjacency eigenvalue of H(n) attached to level i."""
    if not 0 <= i <= n:
        raise ValueError(f"level {i} out of range 0..{n}")
    return n - 2 * i


def spectrum(f: VertexFunction) -> SpectrumSet:
    """Levels with a nonzero Fourier coefficient; empty for the zero function."""
    fhat = walsh_transform(f)
    levels = frozenset(weight(u) for u, c in enumerate(fhat.values) if c != 0)
    return SpectrumSet(f.n, levels)


def level_project(f: VertexFunction, i: int) -> VertexFunction:
    """Component of f in the level-i eigenspace; the projections sum to f."""
    if not 0 <= i <= f.n:
        raise ValueError(f"level {i} out of range 0..{f.n}")
    fhat = walsh_transform(f)
    zero = Fraction(0)
    masked = tuple(c if weight(u) == i else zero for u, c in enumerate(fhat.values))
    return inverse_walsh(VertexFunction(f.n, masked))


def in_band(f: VertexFunction, i: int, j: int) -> bool:
    """True iff every Fourier coefficient at weight outside [i, j] is zero."""
    if not 0 <= i <= j <= f.n:
        raise ValueError(f"invalid band [{i}, {j}] for n={f.n}")
    fhat = walsh_transform(f)
    return all(c == 0 for u, c in enumerate(fhat.values) if not i <= weight(u) <= j)


def check_eigen_relation(f: VertexFunction, lam: int) -> bool:
    """Direct test of lam * f(x) = sum of f over the n neighbors of x, at every x.

    Works straight from the value table, independently of the transform.
    """
    n = f.n
    vals = f.values
    for x in range(1 << n):
        acc = sum((vals[x ^ (1 << b)] for b in range(n)), Fraction(0))
        if acc != lam * vals[x]:
            return False
    return True


def _clip_band(i: int, j: int, m: int) -> tuple[int, int]:
    return min(max(i, 0), m), min(max(j, 0), m)


def reduction_check(f: VertexFunction, i: int, j: int, r: int) -> bool:
    """Check the three slice statements for f in band [i, j] and coordinate r.

    With f0, f1 the slices fixing coordinate r: f0 - f1 must lie in band
    [i-1, j-1], f0 + f1 in band [i, j], and each slice in band [i-1, j],
    all on H(n-1) with bands clipped to [0, n-1].
    """
    from .functions import restrict

    if not 0 <= i <= j <= f.n:
        raise ValueError(f"invalid band [{i}, {j}] for n={f.n}")
    m = f.n - 1
    f0 = restrict(f, r, 0)
    f1 = restrict(f, r, 1)
    lo, hi = _clip_band(i - 1, j - 1, m)
    if not in_band(f0 - f1, lo, hi):
        return False
    lo, hi = _clip_band(i, j, m)
    if not in_band(f0 + f1, lo, hi):
        return False
    lo, hi = _clip_band(i - 1, j, m)
    return in_band(f0, lo, hi) and in_band(f1, lo, hi)
