"""Combinatorics of the ordered Hamming (NRT) space.

The ambient space consists of vectors of n blocks of r symbols over an
alphabet of size q (residues mod q).  Vectors are stored flat, block-major:
position ``i*r + j`` holds symbol ``j`` (0-based) of block ``i``.

The *shape* of a vector is the tuple ``e = (e_1, ..., e_r)`` where ``e_i``
counts blocks whose rightmost nonzero symbol sits at in-block position i
(1-based); all-zero blocks are counted by ``e_0 = n - sum(e)``.  The NRT
weight of a vector of shape e is ``sum(i * e_i)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import factorial, prod

Shape = tuple[int, ...]
Vector = tuple[int, ...]


class BudgetExceeded(Exception):
    """Raised when an exhaustive computation would exceed its stated cap."""


@dataclass(frozen=True)
class SpaceParams:
    """Alphabet size q, block depth r, number of blocks n."""

    q: int
    r: int
    n: int

    def __post_init__(self) -> None:
        if self.q < 2:
            raise ValueError(f"alphabet size q must be >= 2, got {self.q}")
        if self.r < 1:
            raise ValueError(f"block depth r must be >= 1, got {self.r}")
        if self.n < 1:
            raise ValueError(f"block count n must be >= 1, got {self.n}")

    @property
    def ambient_size(self) -> int:
        return self.q ** (self.r * self.n)

    @property
    def dim(self) -> int:
        """Total number of symbol positions, r*n."""
        return self.r * self.n


def validate_vector(params: SpaceParams, v: Vector) -> None:
    if len(v) != params.dim:
        raise ValueError(f"vector length {len(v)} != r*n = {params.dim}")
    if any(not (0 <= s < params.q) for s in v):
        raise ValueError("symbol out of range [0, q)")


def blocks(params: SpaceParams, v: Vector) -> tuple[tuple[int, ...], ...]:
    r = params.r
    return tuple(v[i * r : (i + 1) * r] for i in range(params.n))


def vector_sub(params: SpaceParams, u: Vector, v: Vector) -> Vector:
    if len(u) != len(v):
        raise ValueError("vector length mismatch")
    q = params.q
    return tuple((a - b) % q for a, b in zip(u, v))


def shape_of(params: SpaceParams, v: Vector) -> Shape:
    """Shape read left-to-right: e_i counts blocks with top nonzero at depth i."""
    validate_vector(params, v)
    r = params.r
    e = [0] * r
    for i in range(params.n):
        block = v[i * r : (i + 1) * r]
        for j in range(r - 1, -1, -1):
            if block[j] != 0:
                e[j] += 1
                break
    return tuple(e)


def shape_bar_of(params: SpaceParams, v: Vector) -> Shape:
    """Shape read right-to-left: e_j counts blocks whose first nonzero symbol
    is at position r - j + 1 (all earlier positions zero)."""
    validate_vector(params, v)
    r = params.r
    e = [0] * r
    for i in range(params.n):
        block = v[i * r : (i + 1) * r]
        for j in range(r):
            if block[j] != 0:
                e[r - j - 1] += 1
                break
    return tuple(e)


def shape_length(e: Shape) -> int:
    """|e| = number of nonzero blocks."""
    return sum(e)


def shape_weight(e: Shape) -> int:
    """|e|' = sum of i * e_i, the NRT weight of any vector of shape e."""
    return sum((i + 1) * c for i, c in enumerate(e))


def validate_shape(params: SpaceParams, e: Shape) -> None:
    if len(e) != params.r:
        raise ValueError(f"shape has {len(e)} parts, expected r = {params.r}")
    if any(c < 0 for c in e):
        raise ValueError("shape parts must be nonnegative")
    if sum(e) > params.n:
        raise ValueError(f"shape length {sum(e)} exceeds n = {params.n}")


def ordered_weight(params: SpaceParams, v: Vector) -> int:
    return shape_weight(shape_of(params, v))


def ordered_distance(params: SpaceParams, u: Vector, v: Vector) -> int:
    return ordered_weight(params, vector_sub(params, u, v))


def shape_count(params: SpaceParams, e: Shape) -> int:
    """Number of vectors of shape e:

        multinomial(n; e_0, ..., e_r) * (q-1)^|e| * q^(|e|' - |e|)
    """
    validate_shape(params, e)
    e0 = params.n - sum(e)
    multinom = factorial(params.n) // (factorial(e0) * prod(factorial(c) for c in e))
    return multinom * (params.q - 1) ** shape_length(e) * params.q ** (
        shape_weight(e) - shape_length(e)
    )


def enumerate_shapes(params: SpaceParams):
    """All shapes of the space in lexicographic order, starting with zero."""
    for e in itertools.product(range(params.n + 1), repeat=params.r):
        if sum(e) <= params.n:
            yield e


def shapes_of_length(params: SpaceParams, k: int) -> list[Shape]:
    """Shapes with exactly k nonzero blocks, lexicographically ordered."""
    if k > params.n:
        return []
    return [e for e in enumerate_shapes(params) if sum(e) == k]


def sphere_size(params: SpaceParams, d: int) -> int:
    """Number of vectors at NRT weight exactly d."""
    if not 0 <= d <= params.dim:
        raise ValueError(f"weight {d} out of range [0, {params.dim}]")
    return sum(
        shape_count(params, e) for e in enumerate_shapes(params) if shape_weight(e) == d
    )


def ball_size(params: SpaceParams, d: int) -> int:
    """Number of vectors at NRT weight at most d."""
    if not 0 <= d <= params.dim:
        raise ValueError(f"weight {d} out of range [0, {params.dim}]")
    return sum(
        shape_count(params, e) for e in enumerate_shapes(params) if shape_weight(e) <= d
    )


def delta_crit(q: int, r: int) -> Fraction:
    """Mean normalized weight of a uniform random vector:

        1 - (1/r) * sum_{i=1..r} q^(-i)
    """
    if q < 2 or r < 1:
        raise ValueError("need q >= 2 and r >= 1")
    return 1 - Fraction(1, r) * sum(Fraction(1, q**i) for i in range(1, r + 1))


def enumerate_vectors(params: SpaceParams):
    yield from itertools.product(range(params.q), repeat=params.dim)


# ---------------------------------------------------------------------------
# Ordered orthogonal arrays


@dataclass(frozen=True)
class ArrayTable:
    """A multiset of rows of the space (duplicates allowed)."""

    params: SpaceParams
    rows: tuple[Vector, ...]

    def __post_init__(self) -> None:
        for row in self.rows:
            validate_vector(self.params, row)


@dataclass(frozen=True)
class StrengthResult:
    strength: int
    index: int | None  # |A| / q^strength when strength >= 1


def left_adjusted_sets(params: SpaceParams, t: int):
    """Compositions (t_1, ..., t_n) with 0 <= t_i <= r and sum t; composition
    i selects the first t_i positions of block i."""

    def rec(i: int, remaining: int, acc: list[int]):
        if i == params.n:
            if remaining == 0:
                yield tuple(acc)
            return
        # cannot place more than r per block nor leave an unfillable remainder
        max_here = min(params.r, remaining)
        min_here = max(0, remaining - params.r * (params.n - i - 1))
        for ti in range(min_here, max_here + 1):
            acc.append(ti)
            yield from rec(i + 1, remaining - ti, acc)
            acc.pop()

    yield from rec(0, t, [])


def _project(params: SpaceParams, row: Vector, comp: tuple[int, ...]) -> tuple[int, ...]:
    r = params.r
    out = []
    for i, ti in enumerate(comp):
        out.extend(row[i * r : i * r + ti])
    return tuple(out)


def _has_strength(table: ArrayTable, t: int) -> bool:
    params = table.params
    m = len(table.rows)
    if m % params.q**t != 0:
        return False
    theta = m // params.q**t
    for comp in left_adjusted_sets(params, t):
        counts: dict[tuple[int, ...], int] = {}
        for row in table.rows:
            key = _project(params, row, comp)
            counts[key] = counts.get(key, 0) + 1
            if counts[key] > theta:
                return False
        if len(counts) != params.q**t:
            return False
    return True


def ooa_strength(table: ArrayTable) -> StrengthResult:
    """Largest t such that every left-adjusted t-set projection is balanced.

    Returns strength 0 (index None) when even single positions are unbalanced.
    """
    if not table.rows:
        raise ValueError("empty table has no strength")
    params = table.params
    best = 0
    for t in range(1, params.dim + 1):
        if _has_strength(table, t):
            best = t
        else:
            break
    index = len(table.rows) // params.q**best if best >= 1 else None
    return StrengthResult(strength=best, index=index)


# ---------------------------------------------------------------------------
# Nets <-> OOAs


@dataclass(frozen=True)
class NetParams:
    t: int
    m: int
    s: int
    q: int


@dataclass(frozen=True)
class OoaParams:
    strength: int
    n: int
    r: int
    q: int
    index: int
    size: int


def net_to_ooa(t: int, m: int, s: int, q: int) -> OoaParams:
    """Parameters of the orthogonal array equivalent to a (t, m, s)-net in
    base q: strength m - t, s blocks of depth m - t, index q^t, size q^m."""
    if not 0 <= t <= m:
        raise ValueError(f"need 0 <= t <= m, got t={t}, m={m}")
    if s < 1:
        raise ValueError("need s >= 1")
    return OoaParams(strength=m - t, n=s, r=m - t, q=q, index=q**t, size=q**m)


def ooa_to_net(ooa: OoaParams) -> NetParams:
    if ooa.strength != ooa.r:
        raise ValueError("net-equivalent arrays have strength equal to block depth")
    m = ooa.strength + _ilog(ooa.index, ooa.q)
    return NetParams(t=m - ooa.strength, m=m, s=ooa.n, q=ooa.q)


def _ilog(value: int, base: int) -> int:
    k = 0
    while base**k < value:
        k += 1
    if base**k != value:
        raise ValueError(f"{value} is not a power of {base}")
    return k


# ---------------------------------------------------------------------------
# Linear codes over prime fields


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


def row_reduce_mod(rows: list[list[int]], q: int) -> list[list[int]]:
    """Row echelon form mod prime q; returns the nonzero rows."""
    mat = [list(row) for row in rows]
    pivots = []
    pivot_row = 0
    ncols = len(mat[0]) if mat else 0
    for col in range(ncols):
        pivot = None
        for i in range(pivot_row, len(mat)):
            if mat[i][col] % q != 0:
                pivot = i
                break
        if pivot is None:
            continue
        mat[pivot_row], mat[pivot] = mat[pivot], mat[pivot_row]
        inv = pow(mat[pivot_row][col], -1, q)
        mat[pivot_row] = [(x * inv) % q for x in mat[pivot_row]]
        for i in range(len(mat)):
            if i != pivot_row and mat[i][col] % q != 0:
                factor = mat[i][col]
                mat[i] = [(a - factor * b) % q for a, b in zip(mat[i], mat[pivot_row])]
        pivots.append(col)
        pivot_row += 1
        if pivot_row == len(mat):
            break
    return [row for row in mat[:pivot_row]]


@dataclass(frozen=True)
class LinearCode:
    """A linear code given by k independent generator rows; q must be prime."""

    params: SpaceParams
    generators: tuple[Vector, ...]

    def __post_init__(self) -> None:
        if not is_prime(self.params.q):
            raise ValueError("linear codes are supported for prime q only")
        for g in self.generators:
            validate_vector(self.params, g)
        reduced = row_reduce_mod([list(g) for g in self.generators], self.params.q)
        if len(reduced) != len(self.generators):
            raise ValueError("generator rows are linearly dependent")

    @property
    def k(self) -> int:
        return len(self.generators)

    @property
    def size(self) -> int:
        return self.params.q**self.k


def enumerate_code(code: LinearCode, cap: int = 1 << 16) -> ArrayTable:
    """All q^k codewords (exhaustive; refuses above the cap)."""
    if code.size > cap:
        raise BudgetExceeded(f"code size {code.size} exceeds cap {cap}")
    q = code.params.q
    dim = code.params.dim
    words = []
    for coeffs in itertools.product(range(q), repeat=code.k):
        word = [0] * dim
        for c, g in zip(coeffs, code.generators):
            if c:
                for j in range(dim):
                    word[j] = (word[j] + c * g[j]) % q
        words.append(tuple(word))
    return ArrayTable(params=code.params, rows=tuple(words))


def dual_code(code: LinearCode, cap: int = 1 << 16) -> ArrayTable:
    """All vectors orthogonal to every generator under the dot product mod q,
    found by exhaustive scan of the ambient space."""
    params = code.params
    if params.ambient_size > cap:
        raise BudgetExceeded(f"ambient size {params.ambient_size} exceeds cap {cap}")
    rows = []
    for y in enumerate_vectors(params):
        if all(sum(a * b for a, b in zip(g, y)) % params.q == 0 for g in code.generators):
            rows.append(y)
    return ArrayTable(params=params, rows=tuple(rows))


# ---------------------------------------------------------------------------
# Plain-text array files: line 1 is "q r n", then one row of r*n symbols per
# line, block-major.  Lines starting with '#' are comments.


def parse_array_text(text: str) -> ArrayTable:
    lines = [
        line.strip()
        for line in text.splitlines()
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not lines:
        raise ValueError("empty array file")
    header = lines[0].split()
    if len(header) != 3:
        raise ValueError("header must be 'q r n'")
    q, r, n = (int(x) for x in header)
    params = SpaceParams(q=q, r=r, n=n)
    rows = []
    for line in lines[1:]:
        symbols = tuple(int(x) for x in line.split())
        if len(symbols) != params.dim:
            raise ValueError(f"row has {len(symbols)} symbols, expected {params.dim}")
        rows.append(symbols)
    return ArrayTable(params=params, rows=tuple(rows))


def format_array_text(table: ArrayTable) -> str:
    p = table.params
    out = [f"{p.q} {p.r} {p.n}"]
    out.extend(" ".join(str(s) for s in row) for row in table.rows)
    return "\n".join(out) + "\n"


def read_array_file(path) -> ArrayTable:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_array_text(fh.read())
