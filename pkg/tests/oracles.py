"""Independent reference implementations used to pin expected values.

Everything here is written in the most literal O(4^n)-ish style on purpose
so it shares no code path with the library: double-sum transforms,
subset-XOR algebraic coefficients, explicit face scans, and an
all-subsets rank search that does not use the library's pruning.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product

from cubespec import VertexFunction, make_function


def weight(x: int) -> int:
    return bin(x).count("1")


def sign(u: int, x: int) -> int:
    return -1 if weight(u & x) % 2 else 1


def naive_walsh(f: VertexFunction) -> VertexFunction:
    size = 1 << f.n
    vals = [
        sum((f.values[x] * sign(u, x) for x in range(size)), Fraction(0))
        for u in range(size)
    ]
    return make_function(f.n, vals)


def naive_inverse_walsh(fhat: VertexFunction) -> VertexFunction:
    size = 1 << fhat.n
    vals = [
        sum((fhat.values[u] * sign(u, x) for u in range(size)), Fraction(0)) / size
        for x in range(size)
    ]
    return make_function(fhat.n, vals)


def naive_anf_coefficients(values) -> list[int]:
    """Coefficient at mask m is the XOR of the 0/1 values over x <= m bitwise."""
    size = len(values)
    coeffs = []
    for m in range(size):
        acc = 0
        for x in range(size):
            if x & ~m == 0:
                acc ^= int(values[x])
        coeffs.append(acc)
    return coeffs


def naive_anf_degree(values) -> int:
    coeffs = naive_anf_coefficients(values)
    return max(weight(m) for m, c in enumerate(coeffs) if c)


def faces(n: int, fixed: int):
    """Yield the member lists of every face with `fixed` frozen coordinates."""
    for positions in combinations(range(n), fixed):
        free = [c for c in range(n) if c not in positions]
        for bits in product((0, 1), repeat=fixed):
            base = sum(b << c for c, b in zip(positions, bits))
            members = []
            for assign in product((0, 1), repeat=len(free)):
                code = base
                for c, b in zip(free, assign):
                    code |= b << c
                members.append(code)
            yield members


def naive_is_trade(t0, t1, n: int, t: int) -> bool:
    for members in faces(n, t):
        if sum(1 for x in members if x in t0) != sum(1 for x in members if x in t1):
            return False
    return True


def fraction_rank(matrix) -> int:
    """Row rank by plain Fraction elimination."""
    m = [[Fraction(v) for v in row] for row in matrix]
    if not m:
        return 0
    rank = 0
    ncols = len(m[0])
    row = 0
    for col in range(ncols):
        sel = next((r for r in range(row, len(m)) if m[r][col] != 0), None)
        if sel is None:
            continue
        m[row], m[sel] = m[sel], m[row]
        pv = m[row][col]
        for r in range(len(m)):
            if r != row and m[r][col] != 0:
                c = m[r][col] / pv
                m[r] = [a - c * b for a, b in zip(m[r], m[row])]
        rank += 1
        row += 1
    return rank


def naive_min_support(n: int, i: int, j: int) -> int:
    """Minimum support over the band, scanning every nonempty vertex subset.

    No vertex-0 pruning and no shared elimination state, so it double
    checks both the search result and the pruning argument.
    """
    rows = [u for u in range(1 << n) if not i <= weight(u) <= j]
    if not rows:
        return 1
    for size in range(1, (1 << n) + 1):
        for supp in combinations(range(1 << n), size):
            matrix = [[sign(u, x) for x in supp] for u in rows]
            if fraction_rank(matrix) < size:
                return size
    raise AssertionError("no feasible support found")


def minkowski(a, b) -> frozenset[int]:
    return frozenset(x + y for x in a for y in b)
