"""Factory for functions of minimum support in a spectral band.

Every optimal band member is equivalent to a tensor product of three kinds
of blocks on H(k): phi(k) (+1 at the all-zeros vertex, -1 at the all-ones
vertex), psi(k) (+1 at both), and point_mass(k) (+1 at all-zeros only).
A Blueprint records which blocks to use: a multiset of odd part sizes, a
multiset of even part sizes, and a remainder absorbed by a point mass.

LOWER blueprints (bands with i + j >= n) use phi on every part and achieve
support 2^i with i = #odd + #even parts; UPPER blueprints (i + j <= n) use
psi on the odd parts instead and achieve support 2^(n-j).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .functions import MAX_DIMENSION, VertexFunction, tensor
from .spectral import SpectrumSet

LOWER = "LOWER"
UPPER = "UPPER"


def _check_block_size(k: int) -> None:
    if k > MAX_DIMENSION:
        raise ValueError(f"block size {k} exceeds the dimension cap {MAX_DIMENSION}")


def phi(k: int) -> VertexFunction:
    """+1 at the all-zeros vertex of H(k), -1 at the all-ones vertex."""
    if k < 1:
        raise ValueError(f"phi needs k >= 1, got {k}")
    _check_block_size(k)
    vals = [Fraction(0)] * (1 << k)
    vals[0] = Fraction(1)
    vals[(1 << k) - 1] = Fraction(-1)
    return VertexFunction(k, tuple(vals))


def psi(k: int) -> VertexFunction:
    """+1 at both the all-zeros and all-ones vertices of H(k)."""
    if k < 1:
        raise ValueError(f"psi needs k >= 1, got {k}")
    _check_block_size(k)
    vals = [Fraction(0)] * (1 << k)
    vals[0] = Fraction(1)
    vals[(1 << k) - 1] = Fraction(1)
    return VertexFunction(k, tuple(vals))


def point_mass(k: int) -> VertexFunction:
    """+1 at the all-zeros vertex of H(k); for k = 0 the constant 1 on H(0)."""
    if k < 0:
        raise ValueError(f"point_mass needs k >= 0, got {k}")
    _check_block_size(k)
    vals = [Fraction(0)] * (1 << k)
    vals[0] = Fraction(1)
    return VertexFunction(k, tuple(vals))


@dataclass(frozen=True)
class Blueprint:
    """Partition data naming one optimal function as a block tensor product.

    Parts are stored sorted descending; odd_parts sum + even_parts sum +
    remainder must equal n.  The block count k + l (odd count plus even
    count) fixes the support size 2^(k+l).
    """

    case: str
    odd_parts: tuple[int, ...]
    even_parts: tuple[int, ...]
    remainder: int
    n: int

    def __post_init__(self):
        if self.case not in (LOWER, UPPER):
            raise ValueError(f"case must be {LOWER} or {UPPER}, got {self.case!r}")
        object.__setattr__(self, "odd_parts", tuple(sorted(self.odd_parts, reverse=True)))
        object.__setattr__(self, "even_parts", tuple(sorted(self.even_parts, reverse=True)))
        if any(p < 1 or p % 2 == 0 for p in self.odd_parts):
            raise ValueError(f"odd parts must be odd and >= 1, got {self.odd_parts}")
        if any(p < 2 or p % 2 == 1 for p in self.even_parts):
            raise ValueError(f"even parts must be even and >= 2, got {self.even_parts}")
        if self.remainder < 0:
            raise ValueError(f"remainder must be nonnegative, got {self.remainder}")
        total = sum(self.odd_parts) + sum(self.even_parts) + self.remainder
        if total != self.n:
            raise ValueError(f"parts plus remainder sum to {total}, expected n={self.n}")

    @property
    def k(self) -> int:
        return len(self.odd_parts)

    @property
    def ell(self) -> int:
        return len(self.even_parts)

    @property
    def support_size(self) -> int:
        return 1 << (self.k + self.ell)

    @property
    def band(self) -> tuple[int, int]:
        """The band [i, j] this blueprint is optimal for."""
        if self.case == LOWER:
            return self.k + self.ell, self.n - self.ell
        return self.ell, self.n - self.k - self.ell


def build(bp: Blueprint) -> VertexFunction:
    """Materialize the blueprint's tensor product, odd parts in the low bits.

    Factor order is fixed (odd parts descending, even parts descending,
    point mass last) so output tables are reproducible; any other order is
    equivalent under a coordinate permutation.
    """
    odd_block = phi if bp.case == LOWER else psi
    f = point_mass(0)
    for p in bp.odd_parts:
        f = tensor(f, odd_block(p))
    for p in bp.even_parts:
        f = tensor(f, phi(p))
    return tensor(f, point_mass(bp.remainder))


def blueprint_spectrum(bp: Blueprint) -> SpectrumSet:
    """Closed-form spectrum of build(bp), computed without building it.

    The spectrum runs from i to j of the blueprint's band, with step 1 when
    the remainder is positive and step 2 when it is zero.
    """
    lo, hi = bp.band
    step = 1 if bp.remainder > 0 else 2
    return SpectrumSet(bp.n, frozenset(range(lo, hi + 1, step)))


def _part_multisets(count: int, odd: bool, max_total: int, max_part: int):
    """Yield descending tuples of `count` parts of one parity, sum <= max_total."""
    if count == 0:
        yield ()
        return
    min_part = 1 if odd else 2
    first = min(max_part, max_total - min_part * (count - 1))
    if odd:
        first -= (first + 1) % 2
    else:
        first -= first % 2
    for p in range(first, min_part - 1, -2):
        for rest in _part_multisets(count - 1, odd, max_total - p, p):
            yield (p,) + rest


def enumerate_blueprints(n: int, i: int, j: int) -> list[Blueprint]:
    """All blueprints of optimal functions for the band [i, j] on H(n).

    For i + j >= n these are LOWER blueprints with k + l = i and l >= n - j;
    for i + j < n, UPPER blueprints with k + l = n - j and l >= i.  On the
    boundary i + j = n both characterizations coincide part-for-part; the
    LOWER form is returned.
    """
    if not 0 <= i <= j <= n:
        raise ValueError(f"invalid band [{i}, {j}] for n={n}")
    if i + j >= n:
        case, target, ell_min = LOWER, i, n - j
    else:
        case, target, ell_min = UPPER, n - j, i
    found = []
    for ell in range(max(ell_min, 0), target + 1):
        k = target - ell
        for odd_parts in _part_multisets(k, True, n - 2 * ell, n):
            left = n - sum(odd_parts)
            for even_parts in _part_multisets(ell, False, left, n):
                r = left - sum(even_parts)
                found.append(Blueprint(case, odd_parts, even_parts, r, n))
    found.sort(key=lambda bp: (bp.odd_parts, bp.even_parts))
    return found


def single_level_blueprint(n: int, i: int) -> Blueprint:
    """The unique blueprint for a single-level band [i, i].

    For i >= n/2: LOWER with 2i-n odd parts of size 1 and n-i even parts of
    size 2; for i < n/2 the mirrored UPPER blueprint.
    """
    if not 0 <= i <= n:
        raise ValueError(f"level {i} out of range 0..{n}")
    if 2 * i >= n:
        return Blueprint(LOWER, (1,) * (2 * i - n), (2,) * (n - i), 0, n)
    return Blueprint(UPPER, (1,) * (n - 2 * i), (2,) * i, 0, n)


def is_progression_spectrum(s: SpectrumSet, i: int, j: int, band_side: str) -> bool:
    """Whether s is an arithmetic progression with difference 1 or 2,
    anchored at i (LOWER) or at j (UPPER), staying inside [i, j].

    Every optimal function's spectrum has this shape; a band member whose
    spectrum does not is strictly above the support bound.
    """
    if band_side not in (LOWER, UPPER):
        raise ValueError(f"band_side must be {LOWER} or {UPPER}, got {band_side!r}")
    levels = s.sorted_levels
    if not levels:
        raise ValueError("empty spectrum")
    if band_side == LOWER:
        if levels[0] != i or levels[-1] > j:
            return False
    else:
        if levels[-1] != j or levels[0] < i:
            return False
    if len(levels) == 1:
        return True
    diffs = {b - a for a, b in zip(levels, levels[1:])}
    return len(diffs) == 1 and diffs.pop() in (1, 2)
