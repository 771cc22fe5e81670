"""Brute-force verification engine for band support minima and classification.

Feasibility of a candidate support S for a band is decided with no help
from the construction code: build the matrix whose rows are the characters
at masks with weight outside the band, restricted to the columns x in S,
and test the columns for rational linear dependence by exact integer
elimination.  The smallest dependent support is the band minimum, a kernel
vector is a witness, and canonical forms under the full automorphism group
(coordinate permutations composed with translations, plus scaling) turn
witness lists into equivalence classes that can be matched one-to-one
against enumerated blueprints.

Scans are restricted to supports containing vertex 0, which is harmless:
translating a function multiplies each Fourier coefficient by +-1, so band
membership and support size are translation invariant.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from multiprocessing import Pool

from .constructions import Blueprint, build, enumerate_blueprints
from .functions import VertexFunction, support, support_size
from .spectral import spectrum

EXHAUSTIVE_LIMIT = 5
CLASSIFY_LIMIT = 4
CANONICAL_LIMIT = 8


def _check_band_args(n: int, i: int, j: int) -> None:
    if not 0 <= i <= j <= n:
        raise ValueError(f"invalid band [{i}, {j}] for n={n}")


def _constraint_masks_band(n: int, i: int, j: int) -> list[int]:
    return [u for u in range(1 << n) if not i <= u.bit_count() <= j]


def _constraint_masks_levels(n: int, levels: frozenset[int]) -> list[int]:
    return [u for u in range(1 << n) if u.bit_count() not in levels]


def _columns(n: int, rows: list[int]) -> list[tuple[int, ...]]:
    return [
        tuple(-1 if (u & x).bit_count() & 1 else 1 for u in rows)
        for x in range(1 << n)
    ]


def _reduce_column(col, basis):
    """Fraction-free reduction of an integer column against an echelon basis.

    Returns None when the column is dependent on the basis, otherwise
    (pivot_index, reduced_vector) with the integer content divided out.
    """
    v = list(col)
    for pivot, b in basis:
        c = v[pivot]
        if c:
            bp = b[pivot]
            v = [x * bp - y * c for x, y in zip(v, b)]
    g = 0
    for x in v:
        g = math.gcd(g, x)
        if g == 1:
            break
    if g == 0:
        return None
    if g > 1:
        v = [x // g for x in v]
    for idx, x in enumerate(v):
        if x:
            return idx, tuple(v)
    return None  # unreachable


def _scan_branch(cols, nvert, second, cap):
    """DFS over supports {0, second, ...} extended with increasing codes.

    Returns (found, nodes, best) where found maps size -> supports; the
    collection is complete for every size <= best, and best never exceeds
    the incoming cap.
    """
    found: dict[int, list[tuple[int, ...]]] = {}
    best = cap
    nodes = 0
    basis = [_reduce_column(cols[0], [])]  # the all-ones column, never dependent

    def visit(supp, last):
        nonlocal best, nodes
        child = len(supp) + 1
        for e in range(last + 1, nvert):
            if child > best:
                return
            nodes += 1
            red = _reduce_column(cols[e], basis)
            if red is None:
                if child < best:
                    best = child
                found.setdefault(child, []).append(supp + (e,))
            elif child < best:
                basis.append(red)
                visit(supp + (e,), e)
                basis.pop()

    nodes += 1
    if best >= 2:
        red = _reduce_column(cols[second], basis)
        if red is None:
            best = 2
            found[2] = [(0, second)]
        elif best > 2:
            basis.append(red)
            visit((0, second), second)
    return found, nodes, best


_POOL_STATE: dict = {}


def _pool_init(cols, nvert):
    _POOL_STATE["cols"] = cols
    _POOL_STATE["nvert"] = nvert


def _pool_branch(task):
    second, cap = task
    return _scan_branch(_POOL_STATE["cols"], _POOL_STATE["nvert"], second, cap)


def _colex_key(supp):
    return tuple(sorted(supp, reverse=True))


def _scan_supports(n, rows, jobs=1):
    """Smallest dependent supports through vertex 0, ascending by size.

    Returns (min_size, supports at min_size in colexicographic order,
    nodes_examined).  With jobs > 1 the branches on the second support
    element are scanned by a process pool in fixed batches, so the result
    set is independent of scheduling; only the nodes_examined diagnostic
    depends on the jobs split, because pruning bounds propagate once per
    batch instead of once per branch.
    """
    nvert = 1 << n
    if not rows:
        return 1, [(0,)], 1
    cols = _columns(n, rows)
    best = nvert
    found: dict[int, list[tuple[int, ...]]] = {}
    nodes = 1  # the root support {0}

    def merge(res):
        nonlocal best, nodes
        fnd, nd, b = res
        nodes += nd
        best = min(best, b)
        for size, supps in fnd.items():
            found.setdefault(size, []).extend(supps)

    seconds = list(range(1, nvert))
    if jobs <= 1:
        for second in seconds:
            merge(_scan_branch(cols, nvert, second, best))
    else:
        with Pool(jobs, _pool_init, (cols, nvert)) as pool:
            for at in range(0, len(seconds), jobs):
                batch = seconds[at:at + jobs]
                for res in pool.map(_pool_branch, [(s, best) for s in batch]):
                    merge(res)
    min_size = min(found)
    return min_size, sorted(found[min_size], key=_colex_key), nodes


def _kernel_basis(rows, supp):
    """Kernel of the character constraint matrix over the support columns.

    Exact Fraction elimination; returns one tuple per kernel basis vector,
    entries aligned with the support positions.
    """
    ncols = len(supp)
    m = [
        [Fraction(-1 if (u & x).bit_count() & 1 else 1) for x in supp]
        for u in rows
    ]
    nrows = len(m)
    pivots: list[tuple[int, int]] = []
    row = 0
    for col in range(ncols):
        sel = next((r for r in range(row, nrows) if m[r][col] != 0), None)
        if sel is None:
            continue
        m[row], m[sel] = m[sel], m[row]
        pv = m[row][col]
        m[row] = [x / pv for x in m[row]]
        for r in range(nrows):
            if r != row and m[r][col] != 0:
                c = m[r][col]
                m[r] = [a - c * b for a, b in zip(m[r], m[row])]
        pivots.append((row, col))
        row += 1
        if row == nrows:
            break
    pivot_cols = {c for _, c in pivots}
    basis = []
    for fc in range(ncols):
        if fc in pivot_cols:
            continue
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for r, c in pivots:
            vec[c] = -m[r][fc]
        basis.append(tuple(vec))
    return basis


def _place(n, supp, coeffs) -> VertexFunction:
    vals = [Fraction(0)] * (1 << n)
    for x, c in zip(supp, coeffs):
        vals[x] = Fraction(c)
    return VertexFunction(n, tuple(vals))


def _normalize_witness(n, supp, coeffs) -> VertexFunction:
    """Scale a kernel vector to integers with content 1 and a positive lead."""
    denom_lcm = 1
    for c in coeffs:
        denom_lcm = denom_lcm * c.denominator // math.gcd(denom_lcm, c.denominator)
    ints = [int(c * denom_lcm) for c in coeffs]
    g = 0
    for x in ints:
        g = math.gcd(g, x)
    ints = [x // g for x in ints]
    lead = next(x for x in ints if x)
    if lead < 0:
        ints = [-x for x in ints]
    return _place(n, supp, ints)


@dataclass(frozen=True)
class CanonicalForm:
    """Distinguished value table representing one equivalence class."""

    n: int
    values: tuple[Fraction, ...]

    def to_function(self) -> VertexFunction:
        return VertexFunction(self.n, self.values)


def _candidate_less(pairs, c, best):
    """Lexicographic order on dense value tables, compared sparsely.

    pairs is the sorted support of the candidate with unscaled values, c
    its pinned scale; best is already scaled.  Missing indices are zeros.
    """
    i = j = 0
    while i < len(pairs) and j < len(best):
        xa, va = pairs[i]
        xb, vb = best[j]
        if xa == xb:
            a = c * va
            if a != vb:
                return a < vb
            i += 1
            j += 1
        elif xa < xb:
            return c * va < 0
        else:
            return vb > 0
    if i < len(pairs):
        return c * pairs[i][1] < 0
    if j < len(best):
        return best[j][1] > 0
    return False


def canonical_form(f: VertexFunction) -> CanonicalForm:
    """Class representative under automorphisms of H(n) and scaling.

    Sweeps the whole group of coordinate permutations composed with
    translations; each candidate is scaled so its value at its first
    support vertex is +1, and the lexicographically smallest value table
    (vertex-code order) wins.  Idempotent and constant on classes.
    """
    n = f.n
    if n > CANONICAL_LIMIT:
        raise ValueError(f"canonical_form sweeps the full group only for n <= {CANONICAL_LIMIT}")
    supp_items = [(x, v) for x, v in enumerate(f.values) if v != 0]
    if not supp_items:
        raise ValueError("canonical_form needs a nonzero function")
    nvert = 1 << n
    best = None
    for perm in permutations(range(n)):
        table = [0] * nvert
        for x in range(nvert):
            y = 0
            for cbit in range(n):
                if x >> cbit & 1:
                    y |= 1 << perm[cbit]
            table[x] = y
        for v in range(nvert):
            pairs = sorted((table[s ^ v], val) for s, val in supp_items)
            c = 1 / pairs[0][1]
            if best is None or _candidate_less(pairs, c, best):
                best = [(idx, c * val) for idx, val in pairs]
    vals = [Fraction(0)] * nvert
    for idx, val in best:
        vals[idx] = val
    return CanonicalForm(n, tuple(vals))


def equivalent(f: VertexFunction, g: VertexFunction) -> bool:
    """Whether g equals c * (f o pi) for some automorphism pi and scale c."""
    if f.n != g.n:
        raise ValueError(f"dimension mismatch: {f.n} != {g.n}")
    sf = next((x for x, v in enumerate(f.values) if v != 0), None)
    sg = next((x for x, v in enumerate(g.values) if v != 0), None)
    if sf is None or sg is None:
        raise ValueError("equivalence is defined for nonzero functions")
    if sf == sg:
        # fast path: exact scalar multiple (identity automorphism)
        c = g.values[sf] / f.values[sf]
        if all(b == c * a for a, b in zip(f.values, g.values)):
            return True
    return canonical_form(f).values == canonical_form(g).values


@dataclass
class SearchReport:
    """Everything a search run learned; serialized by cubespec.serialize."""

    n: int
    i: int | None = None
    j: int | None = None
    levels: tuple[int, ...] | None = None
    min_support: int | None = None
    witness: VertexFunction | None = None
    classes_found: tuple[CanonicalForm, ...] = ()
    matched_blueprints: tuple[tuple[Blueprint, int | None], ...] = ()
    ok: bool = True
    notes: tuple[str, ...] = ()
    elapsed: float | None = None
    nodes_examined: int = 0


def min_support(n: int, i: int, j: int, *, unsafe: bool = False, jobs: int = 1) -> SearchReport:
    """Exhaustive minimum support of a nonzero band-[i, j] member of H(n).

    Candidate supports grow by size; the reported witness comes from the
    colexicographically first minimal support.  Refuses n beyond the
    exhaustive limit unless unsafe is set.
    """
    _check_band_args(n, i, j)
    if n > EXHAUSTIVE_LIMIT and not unsafe:
        raise ValueError(f"exhaustive search beyond n={EXHAUSTIVE_LIMIT} needs unsafe=True")
    start = time.perf_counter()
    rows = _constraint_masks_band(n, i, j)
    size, supports, nodes = _scan_supports(n, rows, jobs)
    pick = supports[0]
    kernel = _kernel_basis(rows, pick)
    notes = []
    if len(kernel) != 1:
        notes.append(f"kernel dimension {len(kernel)} at support {pick}")
    witness = _normalize_witness(n, pick, kernel[0])
    return SearchReport(
        n=n, i=i, j=j,
        min_support=size,
        witness=witness,
        notes=tuple(notes),
        elapsed=time.perf_counter() - start,
        nodes_examined=nodes,
    )


def _exact_combination(n, supp, kernel, target):
    """A kernel member whose spectrum is exactly `target`, or None.

    Any kernel member's spectrum is contained in target by construction,
    so exactness is achievable iff every target level is hit by some basis
    vector, and then a generic small-integer combination works: each level
    rules out at most dim-1 multiplier values.
    """
    reach = frozenset()
    for vec in kernel:
        reach |= spectrum(_place(n, supp, vec)).levels
        if reach == target:
            break
    if reach != target:
        return None
    if len(kernel) == 1:
        return _place(n, supp, kernel[0])
    for t in range(1, len(target) * len(kernel) + 2):
        combo = [
            sum((Fraction(t) ** m * vec[c] for m, vec in enumerate(kernel)), Fraction(0))
            for c in range(len(supp))
        ]
        f = _place(n, supp, combo)
        if spectrum(f).levels == target:
            return f
    raise RuntimeError("generic combination search exhausted; this should not happen")


def min_support_exact_spectrum(
    n: int, levels, *, unsafe: bool = False, max_size: int | None = None, jobs: int = 1
) -> SearchReport:
    """Minimum support over functions whose spectrum is exactly `levels`.

    Same dependence scan as min_support with the band replaced by the
    allowed coefficient levels, but a feasible support must additionally
    admit a kernel combination hitting every level.  Exactness is not
    inherited by subsets, so the scan descends through dependent supports
    as well; it runs sequentially (jobs accepted for interface parity).

    With max_size set, reports no witness (min_support None) when nothing
    achieves exactness within the cap.
    """
    target = frozenset(levels)
    if not target:
        raise ValueError("levels must be nonempty")
    if any(not 0 <= a <= n for a in target):
        raise ValueError(f"levels {sorted(target)} out of range 0..{n}")
    if n > EXHAUSTIVE_LIMIT and not unsafe:
        raise ValueError(f"exhaustive search beyond n={EXHAUSTIVE_LIMIT} needs unsafe=True")
    start = time.perf_counter()
    rows = _constraint_masks_levels(n, target)
    nvert = 1 << n
    cap = min(max_size, nvert) if max_size is not None else nvert

    if not rows:
        # every level allowed, and a point mass carries them all
        witness = _place(n, (0,), (1,))
        return SearchReport(
            n=n, levels=tuple(sorted(target)),
            min_support=1, witness=witness,
            elapsed=time.perf_counter() - start, nodes_examined=1,
        )

    cols = _columns(n, rows)
    best = cap
    results: dict[int, list[VertexFunction]] = {}
    nodes = 1  # the root support {0}

    def handle(supp):
        nonlocal best
        w = _exact_combination(n, supp, _kernel_basis(rows, supp), target)
        if w is None:
            return
        wsize = support_size(w)
        if wsize <= best:
            best = wsize
            results.setdefault(wsize, []).append(w)

    def visit(supp, last, basis):
        nonlocal nodes
        child = len(supp) + 1
        for e in range(last + 1, nvert):
            if child > best:
                return
            nodes += 1
            red = _reduce_column(cols[e], basis)
            ns = supp + (e,)
            if red is None:
                handle(ns)
                if child < best:
                    visit(ns, e, basis)
            elif child < best:
                basis.append(red)
                visit(ns, e, basis)
                basis.pop()

    visit((0,), 0, [_reduce_column(cols[0], [])])

    if not results:
        return SearchReport(
            n=n, levels=tuple(sorted(target)),
            min_support=None, witness=None,
            notes=("no witness within the size cap",),
            elapsed=time.perf_counter() - start, nodes_examined=nodes,
        )
    msize = min(results)
    winner = min(
        results[msize],
        key=lambda w: (_colex_key(support(w)), w.values),
    )
    wsupp = tuple(sorted(support(winner)))
    witness = _normalize_witness(n, wsupp, [winner.values[x] for x in wsupp])
    return SearchReport(
        n=n, levels=tuple(sorted(target)),
        min_support=msize, witness=witness,
        elapsed=time.perf_counter() - start, nodes_examined=nodes,
    )


def verify_classification(
    n: int, i: int, j: int, *, extended: bool = False, jobs: int = 1
) -> SearchReport:
    """Cross-check the optimal classes of a band against the blueprints.

    Collects every minimal-size feasible support through vertex 0, extracts
    a kernel witness from each (reporting any kernel of dimension other
    than 1), dedupes witnesses by canonical form, and matches the class set
    against the enumerated blueprints.  ok is True only when the minimum
    equals the sharp bound and the match is a bijection with no extras and
    no misses.
    """
    _check_band_args(n, i, j)
    limit = 5 if extended else CLASSIFY_LIMIT
    if n > limit:
        hint = "" if extended else " (pass extended=True for n=5)"
        raise ValueError(f"classification is exhaustive only for n <= {limit}{hint}")
    start = time.perf_counter()
    rows = _constraint_masks_band(n, i, j)
    size, supports, nodes = _scan_supports(n, rows, jobs)
    expected = max(1 << i, 1 << (n - j))
    ok = True
    notes: list[str] = []
    if size != expected:
        ok = False
        notes.append(f"minimum support {size} differs from the sharp bound {expected}")
    canon_map: dict[tuple, CanonicalForm] = {}
    first_witness = None
    for supp in supports:
        kernel = _kernel_basis(rows, supp)
        if len(kernel) != 1:
            notes.append(f"kernel dimension {len(kernel)} at support {supp}")
        w = _normalize_witness(n, supp, kernel[0])
        if first_witness is None:
            first_witness = w
        cf = canonical_form(w)
        canon_map.setdefault(cf.values, cf)
    classes = tuple(sorted(canon_map.values(), key=lambda c: c.values))
    class_index = {c.values: idx for idx, c in enumerate(classes)}
    bps = enumerate_blueprints(n, i, j)
    matched: list[tuple[Blueprint, int | None]] = []
    bp_values = []
    for bp in bps:
        cf = canonical_form(build(bp))
        bp_values.append(cf.values)
        idx = class_index.get(cf.values)
        if idx is None:
            ok = False
            notes.append(
                f"blueprint {bp.case} odd={bp.odd_parts} even={bp.even_parts} "
                f"r={bp.remainder} matches no search class"
            )
        matched.append((bp, idx))
    if len(set(bp_values)) != len(bp_values):
        ok = False
        notes.append("distinct blueprints collided in canonical form")
    if len(bps) != len(classes):
        ok = False
        notes.append(f"{len(classes)} search classes vs {len(bps)} blueprints")
    return SearchReport(
        n=n, i=i, j=j,
        min_support=size,
        witness=first_witness,
        classes_found=classes,
        matched_blueprints=tuple(matched),
        ok=ok,
        notes=tuple(notes),
        elapsed=time.perf_counter() - start,
        nodes_examined=nodes,
    )
