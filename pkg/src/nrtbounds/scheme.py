"""Association-scheme operators for the ordered Hamming space.

Multiplication by the affine function P(e) = delta_crit * r * n - |e|' acts
block-tridiagonally on the Krawtchouk basis, grouped by shape length.  This
module builds the raw (exact rational) and orthonormally rescaled (float)
coefficient blocks, assembles the symmetric operator truncated at a given
degree, and encloses its largest eigenvalue with Collatz-Wielandt bounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .krawtchouk import krawtchouk_table
from .space import (
    BudgetExceeded,
    Shape,
    SpaceParams,
    delta_crit,
    enumerate_vectors,
    shape_count,
    shape_length,
    shape_of,
    shape_weight,
    shapes_of_length,
    vector_sub,
)


def L_coeff(params: SpaceParams, i: int) -> Fraction:
    """L_i = (q^(r-i+1) - 1) / (q^r (q-1))."""
    q, r = params.q, params.r
    if not 1 <= i <= r:
        raise ValueError(f"depth {i} out of range [1, {r}]")
    return Fraction(q ** (r - i + 1) - 1, q**r * (q - 1))


def P_eval(params: SpaceParams, e: Shape) -> Fraction:
    """P(e) = delta_crit * r * n - |e|'."""
    return delta_crit(params.q, params.r) * params.r * params.n - shape_weight(e)


# ---------------------------------------------------------------------------
# Intersection numbers


def intersection_Fi(params: SpaceParams, f: Shape, i: int, h: Shape) -> int:
    """Intersection number with a single-part first index at depth i.

    Adding a depth-i perturbation to a vector of shape h can: create a new
    depth-i block, annihilate one, move a block between depths k < i and i,
    keep a depth-i block at depth i, or vanish inside a block whose top
    symbol sits deeper than i.  Nonzero only for (k < i):

      h = f + delta_i              -> f_i + 1
      h = f                        -> q^(i-1) (f_i (q-2) + (q-1) sum_{j>i} f_j)
      h = f + delta_k - delta_i    -> (f_k + 1)(q-1) q^(i-1)
      h = f - delta_k + delta_i    -> (f_i + 1)(q-1) q^(k-1)
      h = f - delta_i              -> (n - |f| + 1) q^(i-1) (q-1)
    """
    q, r, n = params.q, params.r, params.n
    if not 1 <= i <= r:
        raise ValueError(f"depth {i} out of range [1, {r}]")
    diff = [hj - fj for hj, fj in zip(h, f)]
    nonzero = {j: d for j, d in enumerate(diff) if d != 0}
    ii = i - 1  # 0-based slot of depth i
    if not nonzero:
        deeper = sum(f[ii + 1 :])
        return q ** (i - 1) * (f[ii] * (q - 2) + (q - 1) * deeper)
    if set(nonzero.values()) == {1} and list(nonzero) == [ii]:
        return f[ii] + 1
    if set(nonzero.values()) == {-1} and list(nonzero) == [ii]:
        return (n - shape_length(f) + 1) * q ** (i - 1) * (q - 1)
    if len(nonzero) == 2 and sorted(nonzero.values()) == [-1, 1]:
        kk = next(j for j, d in nonzero.items() if d == 1)
        jj = next(j for j, d in nonzero.items() if d == -1)
        if jj == ii and kk < ii:  # one more at depth k < i, one fewer at i
            return (f[kk] + 1) * (q - 1) * q ** (i - 1)
        if kk == ii and jj < ii:  # one fewer at depth k < i, one more at i
            return (f[ii] + 1) * (q - 1) * q ** (jj + 1 - 1)
    return 0


def intersection_general(
    params: SpaceParams, f: Shape, g: Shape, h: Shape, cap: int = 1 << 12
) -> int:
    """Brute-force intersection number: the count of z with shape(z) = g and
    shape(z - x) = f, for a fixed x of shape h."""
    if params.ambient_size > cap:
        raise BudgetExceeded(
            f"ambient size {params.ambient_size} exceeds oracle cap {cap}"
        )
    x = _representative_of_shape(params, h)
    count = 0
    for z in enumerate_vectors(params):
        if shape_of(params, z) == g and shape_of(params, vector_sub(params, z, x)) == f:
            count += 1
    return count


def _representative_of_shape(params: SpaceParams, h: Shape):
    r = params.r
    vec = []
    for depth in range(1, r + 1):
        block = [0] * r
        block[depth - 1] = 1
        vec.extend(block * h[depth - 1])
    vec.extend([0] * (r * (params.n - sum(h))))
    return tuple(vec)


# ---------------------------------------------------------------------------
# Three-term blocks


@dataclass(frozen=True)
class ThreeTermBlocks:
    """Coefficient blocks of multiplication by P at degree kappa.

    Raw blocks (a, b, c) are exact rationals in the K_f basis; the rescaled
    blocks (A, B, C) are floats in the orthonormal basis.  Rows are indexed
    by shapes of length kappa, columns by length kappa+1 / kappa / kappa-1,
    all in lexicographic order.
    """

    params: SpaceParams
    kappa: int
    rows: tuple[Shape, ...]
    cols_up: tuple[Shape, ...]
    cols_down: tuple[Shape, ...]
    a: tuple[tuple[Fraction, ...], ...]
    b: tuple[tuple[Fraction, ...], ...]
    c: tuple[tuple[Fraction, ...], ...]
    A: np.ndarray
    B: np.ndarray
    C: np.ndarray


def _bump(f: Shape, j: int, delta: int) -> Shape:
    out = list(f)
    out[j] += delta
    return tuple(out)


def build_blocks(params: SpaceParams, kappa: int) -> ThreeTermBlocks:
    if kappa > params.n:
        raise ValueError(f"degree {kappa} exceeds n = {params.n}")
    q, r, n = params.q, params.r, params.n
    L = [None] + [L_coeff(params, i) for i in range(1, r + 1)]
    rows = tuple(shapes_of_length(params, kappa))
    cols_up = tuple(shapes_of_length(params, kappa + 1))
    cols_down = tuple(shapes_of_length(params, kappa - 1)) if kappa >= 1 else ()
    up_index = {h: j for j, h in enumerate(cols_up)}
    same_index = {h: j for j, h in enumerate(rows)}
    down_index = {h: j for j, h in enumerate(cols_down)}

    a = [[Fraction(0)] * len(cols_up) for _ in rows]
    b = [[Fraction(0)] * len(rows) for _ in rows]
    c = [[Fraction(0)] * len(cols_down) for _ in rows]
    A = np.zeros((len(rows), len(cols_up)))
    B = np.zeros((len(rows), len(rows)))
    C = np.zeros((len(rows), len(cols_down)))

    for fi_row, f in enumerate(rows):
        # diagonal of the same-degree block: depth-i kicks that keep a block
        # at depth i, plus those absorbed by blocks deeper than i
        diag = sum(
            L[i] * q ** (i - 1) * (f[i - 1] * (q - 2) + (q - 1) * sum(f[i:]))
            for i in range(1, r + 1)
        )
        b[fi_row][fi_row] = diag
        B[fi_row, fi_row] = float(diag)
        for i in range(1, r + 1):
            j = i - 1
            h = _bump(f, j, 1)
            if h in up_index:
                val = L[i] * (f[j] + 1)
                a[fi_row][up_index[h]] = val
                A[fi_row, up_index[h]] = float(L[i]) * (
                    (f[j] + 1) * (n - kappa) * q ** (i - 1) * (q - 1)
                ) ** 0.5
            if f[j] >= 1:
                h = _bump(f, j, -1)
                if h in down_index:
                    val = L[i] * (n - kappa + 1) * q ** (i - 1) * (q - 1)
                    c[fi_row][down_index[h]] = val
                    C[fi_row, down_index[h]] = float(L[i]) * (
                        (n - kappa + 1) * f[j] * q ** (i - 1) * (q - 1)
                    ) ** 0.5
            for k in range(1, i):
                kk = k - 1
                if f[j] >= 1:  # one more at depth k, one fewer at depth i
                    h = _bump(_bump(f, kk, 1), j, -1)
                    if h in same_index:
                        val = L[i] * (f[kk] + 1) * q ** (i - 1) * (q - 1)
                        b[fi_row][same_index[h]] = val
                        B[fi_row, same_index[h]] = (
                            float(L[i])
                            * (q - 1)
                            / q
                            * ((f[kk] + 1) * f[j] * q ** (i + k)) ** 0.5
                        )
                if f[kk] >= 1:  # one fewer at depth k, one more at depth i
                    h = _bump(_bump(f, kk, -1), j, 1)
                    if h in same_index:
                        val = L[i] * (f[j] + 1) * q ** (k - 1) * (q - 1)
                        b[fi_row][same_index[h]] = val
                        B[fi_row, same_index[h]] = (
                            float(L[i])
                            * (q - 1)
                            / q
                            * (f[kk] * (f[j] + 1) * q ** (i + k)) ** 0.5
                        )
    return ThreeTermBlocks(
        params=params,
        kappa=kappa,
        rows=rows,
        cols_up=cols_up,
        cols_down=cols_down,
        a=tuple(tuple(row) for row in a),
        b=tuple(tuple(row) for row in b),
        c=tuple(tuple(row) for row in c),
        A=A,
        B=B,
        C=C,
    )


# ---------------------------------------------------------------------------
# The truncated multiplication operator and its spectral radius


@dataclass(frozen=True)
class OperatorS:
    """Symmetric block-tridiagonal matrix of P-multiplication projected onto
    polynomials of degree <= kappa, in the orthonormal basis."""

    params: SpaceParams
    kappa: int
    shapes: tuple[Shape, ...]  # row/column index, grouped by length
    matrix: np.ndarray


def build_operator(params: SpaceParams, kappa: int) -> OperatorS:
    if kappa > params.n:
        raise ValueError(f"degree {kappa} exceeds n = {params.n}")
    groups = [shapes_of_length(params, mu) for mu in range(kappa + 1)]
    offsets = []
    total = 0
    for g in groups:
        offsets.append(total)
        total += len(g)
    mat = np.zeros((total, total))
    blocks = [build_blocks(params, mu) for mu in range(kappa + 1)]
    for mu in range(kappa + 1):
        o = offsets[mu]
        sz = len(groups[mu])
        mat[o : o + sz, o : o + sz] = blocks[mu].B
        if mu < kappa:
            o2 = offsets[mu + 1]
            sz2 = len(groups[mu + 1])
            mat[o : o + sz, o2 : o2 + sz2] = blocks[mu].A
            mat[o2 : o2 + sz2, o : o + sz] = blocks[mu].A.T
    shapes = tuple(s for g in groups for s in g)
    return OperatorS(params=params, kappa=kappa, shapes=shapes, matrix=mat)


class SpectralConvergenceError(Exception):
    """Power iteration failed to certify the requested enclosure width."""


def spectral_radius(
    op: OperatorS, rel_tol: float = 1e-10, max_iter: int = 10**6
) -> tuple[float, float]:
    """Certified enclosure (lower, upper) of the largest eigenvalue.

    Power iteration from the all-ones vector on the shifted matrix M + mI
    (m = max row sum + 1, so the iterate stays strictly positive), with
    Collatz-Wielandt ratio bounds min_i (Mx)_i/x_i <= rho <= max_i (Mx)_i/x_i
    at every step.  When plain iteration converges too slowly the same
    iteration is accelerated by repeated squaring of the shifted matrix,
    which preserves nonnegativity and hence the validity of the bounds.
    """
    M = op.matrix
    dim = M.shape[0]
    if dim == 1:
        return (float(M[0, 0]), float(M[0, 0]))
    m = float(M.sum(axis=1).max()) + 1.0
    shifted = M + m * np.eye(dim)
    x = np.ones(dim)

    def bounds_at(vec: np.ndarray) -> tuple[float, float]:
        y = shifted @ vec
        ratios = y / vec
        return float(ratios.min() - m), float(ratios.max() - m)

    plain_budget = min(max_iter, 4000)
    it = 0
    while it < plain_budget:
        y = shifted @ x
        ratios = y / x
        lower, upper = float(ratios.min() - m), float(ratios.max() - m)
        if upper - lower <= rel_tol * max(1.0, abs(upper)):
            return (lower, upper)
        x = y / y.max()
        it += 1

    # squaring acceleration: x <- (M + mI)^(2^k) * ones, renormalized
    power = shifted.copy()
    x = np.ones(dim)
    squarings = 0
    while it < max_iter:
        x = power @ np.ones(dim)
        x = x / x.max()
        if (x <= 0).any():
            raise SpectralConvergenceError("iterate lost positivity")
        lower, upper = bounds_at(x)
        if upper - lower <= rel_tol * max(1.0, abs(upper)):
            return (lower, upper)
        power = power @ power
        power = power / power.max()
        squarings += 1
        it += 1
        if squarings > 120:
            break
    raise SpectralConvergenceError(
        f"no enclosure of width {rel_tol} after {it} iterations"
    )


# ---------------------------------------------------------------------------
# Christoffel-Darboux


def cd_kernel(params: SpaceParams, L, a: Shape, e: Shape) -> Fraction:
    """U_L(a, e) = sum_{f in L} K_f(a) K_f(e) / v_f, exact."""
    table = krawtchouk_table(params)
    total = Fraction(0)
    for f in L:
        total += Fraction(table[(f, a)] * table[(f, e)], shape_count(params, f))
    return total


def cd_check(params: SpaceParams, kappa: int, a: Shape, e: Shape) -> bool:
    """Exact two-sided check of the Christoffel-Darboux identity at degree
    kappa:

        (P(e) - P(a)) U_kappa(a, e)
            = sum_{|f|=kappa, |h|=kappa+1} (a_kappa[f,h]/v_f)
                  (K_h(e) K_f(a) - K_f(e) K_h(a))
    """
    table = krawtchouk_table(params)
    L = [f for mu in range(kappa + 1) for f in shapes_of_length(params, mu)]
    lhs = (P_eval(params, e) - P_eval(params, a)) * cd_kernel(params, L, a, e)
    blocks = build_blocks(params, kappa)
    rhs = Fraction(0)
    for fi, f in enumerate(blocks.rows):
        vf = shape_count(params, f)
        for hi, h in enumerate(blocks.cols_up):
            coeff = blocks.a[fi][hi]
            if coeff == 0:
                continue
            rhs += (
                coeff
                * (table[(h, e)] * table[(f, a)] - table[(f, e)] * table[(h, a)])
                / vf
            )
    return lhs == rhs
