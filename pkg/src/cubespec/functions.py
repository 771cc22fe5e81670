"""Exact rational functions on the vertices of the hypercube H(n).

Vertices of H(n) are the elements of Z_2^n, encoded as integer bitmasks in
[0, 2^n) with coordinate 1 in the least significant bit.  A VertexFunction
stores one Fraction per vertex, so every transform and every zero test in
this package is exact; floats are rejected on input.

The Walsh-Hadamard transform is stored unnormalized:

    walsh_transform(f)[u] = sum_x f(x) * (-1)^(u.x)

which keeps integer-valued functions integer-valued.  The 1/2^n factor
appears only in inner_product and inverse_walsh.

Tensor products place the first factor in the low bits: the value of
tensor(f1, f2) at code y*2^m + x is f1(x)*f2(y) for f1 on H(m).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

MAX_DIMENSION = 24


def weight(code: int) -> int:
    """Hamming weight (popcount) of a vertex code."""
    return code.bit_count()


def as_fraction(value) -> Fraction:
    """Convert to an exact Fraction, rejecting floats."""
    if isinstance(value, float):
        raise ValueError("floating point values are not allowed; pass int, Fraction or 'p/q'")
    return Fraction(value)


@dataclass(frozen=True)
class VertexFunction:
    """A function H(n) -> Q given by its dense value table in vertex-code order.

    Instances are immutable; all operations below return new objects, so
    values may be shared freely across threads.
    """

    n: int
    values: tuple[Fraction, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_DIMENSION:
            raise ValueError(f"dimension must be in [0, {MAX_DIMENSION}], got {self.n}")
        if len(self.values) != 1 << self.n:
            raise ValueError(
                f"value table has length {len(self.values)}, expected {1 << self.n} for n={self.n}"
            )

    def __add__(self, other: "VertexFunction") -> "VertexFunction":
        self._check_same_cube(other)
        return VertexFunction(self.n, tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other: "VertexFunction") -> "VertexFunction":
        self._check_same_cube(other)
        return VertexFunction(self.n, tuple(a - b for a, b in zip(self.values, other.values)))

    def __neg__(self) -> "VertexFunction":
        return VertexFunction(self.n, tuple(-a for a in self.values))

    def scale(self, c) -> "VertexFunction":
        c = as_fraction(c)
        return VertexFunction(self.n, tuple(c * a for a in self.values))

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.values)

    def _check_same_cube(self, other: "VertexFunction") -> None:
        if self.n != other.n:
            raise ValueError(f"dimension mismatch: {self.n} != {other.n}")


def make_function(n: int, values) -> VertexFunction:
    """Build a VertexFunction from any iterable of exact rationals.

    Accepts ints, Fractions and 'p' / 'p/q' strings; floats are rejected.
    """
    vals = tuple(as_fraction(v) for v in values)
    return VertexFunction(n, vals)


def zero_function(n: int) -> VertexFunction:
    return VertexFunction(n, (Fraction(0),) * (1 << n))


def constant_function(n: int, c) -> VertexFunction:
    return VertexFunction(n, (as_fraction(c),) * (1 << n))


def walsh_transform(f: VertexFunction) -> VertexFunction:
    """Unnormalized coefficient table: result[u] = sum_x f(x) * (-1)^(u.x).

    In-place butterfly, O(n * 2^n) exact additions.  Applying it twice
    multiplies by 2^n; the normalized coefficient <f, chi_u> equals
    result[u] / 2^n.
    """
    vals = list(f.values)
    size = len(vals)
    h = 1
    while h < size:
        for i in range(0, size, h * 2):
            for j in range(i, i + h):
                x = vals[j]
                y = vals[j + h]
                vals[j] = x + y
                vals[j + h] = x - y
        h *= 2
    return VertexFunction(f.n, tuple(vals))


def inverse_walsh(fhat: VertexFunction) -> VertexFunction:
    """Inverse of walsh_transform: f(x) = (1/2^n) * sum_u fhat(u) * (-1)^(u.x)."""
    g = walsh_transform(fhat)
    scale = Fraction(1, 1 << fhat.n)
    return VertexFunction(fhat.n, tuple(scale * v for v in g.values))


def tensor(f1: VertexFunction, f2: VertexFunction) -> VertexFunction:
    """Tensor product on H(m+n); value at code y*2^m + x is f1(x)*f2(y)."""
    m, n = f1.n, f2.n
    if m + n > MAX_DIMENSION:
        raise ValueError(f"tensor dimension {m + n} exceeds the cap {MAX_DIMENSION}")
    vals = tuple(a * b for b in f2.values for a in f1.values)
    return VertexFunction(m + n, vals)


def restrict(f: VertexFunction, r: int, k: int) -> VertexFunction:
    """Fix coordinate r (1-based) to bit k; returns the slice on H(n-1)."""
    if f.n < 1:
        raise ValueError("cannot restrict a function on H(0)")
    if not 1 <= r <= f.n:
        raise ValueError(f"coordinate {r} out of range 1..{f.n}")
    if k not in (0, 1):
        raise ValueError(f"bit must be 0 or 1, got {k}")
    b = r - 1
    low_mask = (1 << b) - 1
    vals = []
    for y in range(1 << (f.n - 1)):
        code = ((y & ~low_mask) << 1) | (k << b) | (y & low_mask)
        vals.append(f.values[code])
    return VertexFunction(f.n - 1, tuple(vals))


def parity_twist(f: VertexFunction) -> VertexFunction:
    """Multiply pointwise by (-1)^(weight of the vertex); an involution."""
    vals = tuple(-v if weight(x) & 1 else v for x, v in enumerate(f.values))
    return VertexFunction(f.n, vals)


def inner_product(f: VertexFunction, g: VertexFunction) -> Fraction:
    """Normalized inner product (1/2^n) * sum_x f(x)g(x)."""
    f._check_same_cube(g)
    total = sum((a * b for a, b in zip(f.values, g.values)), Fraction(0))
    return total / (1 << f.n)


def support(f: VertexFunction) -> frozenset[int]:
    """Vertex codes where f is nonzero (exact zero test)."""
    return frozenset(x for x, v in enumerate(f.values) if v != 0)


def support_size(f: VertexFunction) -> int:
    return sum(1 for v in f.values if v != 0)
