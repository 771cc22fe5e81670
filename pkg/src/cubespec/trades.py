"""Faces, trades, algebraic degree and affine-subspace structure.

An (n-m)-face fixes m coordinates of H(n) to constants.  A pair of
disjoint nonempty vertex sets {T0, T1} is a [t]-trade when every
(n-t)-face contains equally many elements of each.  The positive and
negative parts of an optimal band function form such a trade, its support
is an affine subspace whose characteristic function has low algebraic
degree, and the subspace splits back into the trade by parity over a
disjoint-support basis.  This module provides each of those ingredients
as an independently testable operation.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

from .functions import VertexFunction, support, weight


@dataclass(frozen=True)
class Face:
    """Subcube of H(n) fixing the given 1-based coordinates to bits.

    Member codes are generated on demand; a face with m fixed coordinates
    contains 2^(n-m) vertices.
    """

    n: int
    fixed_positions: tuple[int, ...]
    fixed_bits: tuple[int, ...]

    def __post_init__(self):
        if len(self.fixed_positions) != len(self.fixed_bits):
            raise ValueError("one bit per fixed position required")
        if len(set(self.fixed_positions)) != len(self.fixed_positions):
            raise ValueError(f"repeated fixed positions: {self.fixed_positions}")
        if any(not 1 <= p <= self.n for p in self.fixed_positions):
            raise ValueError(f"positions {self.fixed_positions} out of range 1..{self.n}")
        if any(b not in (0, 1) for b in self.fixed_bits):
            raise ValueError(f"bits must be 0/1, got {self.fixed_bits}")

    @property
    def dimension(self) -> int:
        return self.n - len(self.fixed_positions)

    def members(self):
        """Yield the codes of the 2^(n-m) vertices in this face."""
        base = 0
        for p, b in zip(self.fixed_positions, self.fixed_bits):
            base |= b << (p - 1)
        free = [c for c in range(self.n) if (c + 1) not in self.fixed_positions]
        for bits in range(1 << len(free)):
            code = base
            for idx, c in enumerate(free):
                if bits >> idx & 1:
                    code |= 1 << c
            yield code

    def contains(self, code: int) -> bool:
        return all(code >> (p - 1) & 1 == b for p, b in zip(self.fixed_positions, self.fixed_bits))


def enumerate_faces(n: int, m: int) -> list[Face]:
    """All C(n, m) * 2^m faces of H(n) with m fixed coordinates."""
    if not 0 <= m <= n:
        raise ValueError(f"fixed-coordinate count {m} out of range 0..{n}")
    faces = []
    for positions in combinations(range(1, n + 1), m):
        for bits in product((0, 1), repeat=m):
            faces.append(Face(n, positions, bits))
    return faces


def face_sums_vanish(f: VertexFunction, i: int) -> bool:
    """True iff every (n-i+1)-face of H(n) sums f to exactly zero.

    This holds for every member of the level-i eigenspace and is the
    face-level mechanism behind the trade structure of optimal functions.
    """
    if not 1 <= i <= f.n:
        raise ValueError(f"level {i} out of range 1..{f.n}")
    for face in enumerate_faces(f.n, i - 1):
        if sum(f.values[x] for x in face.members()) != 0:
            return False
    return True


@dataclass(frozen=True)
class TradePair:
    """Two disjoint nonempty vertex sets, candidates for a [t]-trade."""

    t0: frozenset[int]
    t1: frozenset[int]
    n: int

    def __post_init__(self):
        if not self.t0 or not self.t1:
            raise ValueError("both sets of a trade pair must be nonempty")
        if self.t0 & self.t1:
            raise ValueError("trade pair sets must be disjoint")
        top = 1 << self.n
        if any(x >= top or x < 0 for x in self.t0 | self.t1):
            raise ValueError(f"vertex code out of range for n={self.n}")


def is_trade(tp: TradePair, t: int) -> bool:
    """Balance test: every (n-t)-face holds equally many of t0 and t1.

    Counts are accumulated by projecting each element onto the t fixed
    coordinates, which is equivalent to scanning the faces themselves.
    """
    if not 0 <= t <= tp.n:
        raise ValueError(f"trade parameter {t} out of range 0..{tp.n}")
    for positions in combinations(range(tp.n), t):
        counts: dict[int, int] = {}
        for x in tp.t0:
            key = sum((x >> c & 1) << idx for idx, c in enumerate(positions))
            counts[key] = counts.get(key, 0) + 1
        for x in tp.t1:
            key = sum((x >> c & 1) << idx for idx, c in enumerate(positions))
            counts[key] = counts.get(key, 0) - 1
        if any(v != 0 for v in counts.values()):
            return False
    return True


def sign_split(f: VertexFunction) -> TradePair:
    """Positive-support / negative-support pair of f."""
    t0 = frozenset(x for x, v in enumerate(f.values) if v > 0)
    t1 = frozenset(x for x, v in enumerate(f.values) if v < 0)
    if not t0 or not t1:
        raise ValueError("sign_split needs both positive and negative values")
    return TradePair(t0, t1, f.n)


def three_values_check(f: VertexFunction) -> bool:
    """True iff the nonzero values of f all share one magnitude."""
    magnitudes = {abs(v) for v in f.values if v != 0}
    if not magnitudes:
        raise ValueError("three_values_check needs a nonzero function")
    return len(magnitudes) == 1


def anf_degree(indicator: VertexFunction) -> int:
    """Algebraic degree of a 0/1-valued function.

    Computed by the in-place Moebius butterfly over Z_2: the coefficient at
    monomial mask m is the XOR of the values over the subcube below m, and
    the degree is the largest popcount of a nonzero coefficient mask.
    """
    if any(v not in (0, 1) for v in indicator.values):
        raise ValueError("anf_degree expects a 0/1-valued indicator")
    coeffs = [int(v) for v in indicator.values]
    if not any(coeffs):
        raise ValueError("anf_degree expects a nonzero indicator")
    size = len(coeffs)
    h = 1
    while h < size:
        for i in range(0, size, h * 2):
            for j in range(i, i + h):
                coeffs[j + h] ^= coeffs[j]
        h *= 2
    return max(weight(m) for m, c in enumerate(coeffs) if c)


@dataclass(frozen=True)
class AffineSubspace:
    """Affine subspace of Z_2^n as a translation plus an echelon basis."""

    n: int
    translation: int
    basis: tuple[int, ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def members(self):
        """Yield the 2^dim member codes."""
        for bits in range(1 << len(self.basis)):
            x = self.translation
            for idx, b in enumerate(self.basis):
                if bits >> idx & 1:
                    x ^= b
            yield x


def _rref_gf2(vectors) -> list[int]:
    """Reduced echelon basis over Z_2, pivots on the lowest coordinates first."""
    basis: list[int] = []  # kept sorted by pivot (lowest set bit)
    for v in vectors:
        for b in basis:
            low = b & -b
            if v & low:
                v ^= b
        if v:
            low = v & -v
            basis = [b ^ v if b & low else b for b in basis]
            basis.append(v)
    basis.sort(key=lambda b: b & -b)
    return basis


def detect_affine(s, n: int) -> AffineSubspace | None:
    """Recognize a vertex set in H(n) as an affine subspace.

    Returns the subspace with translation = smallest member and the reduced
    echelon basis of the difference set, or None if s is not affine.  The
    set is affine exactly when its size equals 2^(rank of the differences).
    """
    s = set(s)
    if not s:
        raise ValueError("detect_affine needs a nonempty vertex set")
    if any(not 0 <= x < (1 << n) for x in s):
        raise ValueError(f"vertex code out of range for n={n}")
    t = min(s)
    basis = _rref_gf2(sorted(x ^ t for x in s))
    if 1 << len(basis) != len(s):
        return None
    return AffineSubspace(n, t, tuple(basis))


def has_disjoint_support_basis(sub: AffineSubspace) -> bool:
    """True iff the direction space has a basis of pairwise disjoint masks.

    A disjoint-support basis is already in reduced echelon form, and the
    reduced echelon basis is unique, so it suffices to test the stored
    echelon basis for pairwise disjointness.
    """
    for a, b in combinations(sub.basis, 2):
        if a & b:
            return False
    return True


def split_subspace(sub: AffineSubspace) -> TradePair:
    """Split a (t+1)-dimensional subspace with disjoint basis into a [t]-trade.

    Members reached by an even number of basis vectors go to t0, odd to t1.
    """
    if sub.dimension < 1:
        raise ValueError("split_subspace needs dimension >= 1")
    if not has_disjoint_support_basis(sub):
        raise ValueError("split_subspace needs a disjoint-support basis")
    t0, t1 = set(), set()
    for bits in range(1 << sub.dimension):
        x = sub.translation
        for idx, b in enumerate(sub.basis):
            if bits >> idx & 1:
                x ^= b
        (t1 if weight(bits) & 1 else t0).add(x)
    return TradePair(frozenset(t0), frozenset(t1), sub.n)
