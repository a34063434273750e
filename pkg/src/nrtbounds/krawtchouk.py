"""Univariate and multivariate Krawtchouk polynomials for the NRT space.

The univariate polynomial of degree s in x, with "dimension" argument nu
(which may be any real number, not just an integer), is

    k_s(nu, x) = sum_{l=0}^{s} (-1)^l (q-1)^(s-l) C(x, l) C(nu - x, s - l)

with C(a, m) = a (a-1) ... (a-m+1) / m! the falling-factorial binomial.
All arithmetic stays exact (fractions.Fraction) when the inputs are exact.

The multivariate family K_f, indexed by shapes f, gives the eigenvalues of
the ordered Hamming association scheme.  It factors into univariate
polynomials:

    K_f(x) = q^(|f|' - |f|) * prod_{i=1..r} k_{f_i}(n_i, x_{r-i+1}),
    n_i = x_0 + x_1 + ... + x_{r-i+1} - (f_{i+1} + ... + f_r),  x_0 = n - |x|.

An independent cross-check evaluates K_f(e) as a character sum over all
vectors of shape f against a fixed representative with right-to-left shape e.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache

from .space import (
    BudgetExceeded,
    Shape,
    SpaceParams,
    enumerate_shapes,
    enumerate_vectors,
    shape_count,
    shape_length,
    shape_of,
    shape_weight,
    validate_shape,
)


def binom_general(a, m: int):
    """C(a, m) = a(a-1)...(a-m+1)/m! for any real/rational a and integer m >= 0."""
    if m < 0:
        raise ValueError("lower index must be nonnegative")
    num = 1
    for j in range(m):
        num = num * (a - j)
    if isinstance(num, (int, Fraction)):
        return Fraction(num, _factorial(m))
    return num / _factorial(m)


@lru_cache(maxsize=None)
def _factorial(m: int) -> int:
    out = 1
    for j in range(2, m + 1):
        out *= j
    return out


def k_uni(q: int, nu, s: int, x):
    """Univariate Krawtchouk value k_s(nu, x); exact for exact inputs."""
    if s < 0:
        raise ValueError("degree must be nonnegative")
    total = 0
    for l in range(s + 1):
        term = (-1) ** l * (q - 1) ** (s - l) * binom_general(x, l) * binom_general(
            nu - x, s - l
        )
        total = total + term
    return total


def uni_recurrence_check(q: int, nu, s: int, x) -> bool:
    """k_s(nu, x) == k_s(nu-1, x) + (q-1) k_{s-1}(nu-1, x), exact."""
    if s < 1:
        raise ValueError("degree must be >= 1")
    lhs = k_uni(q, nu, s, x)
    rhs = k_uni(q, nu - 1, s, x) + (q - 1) * k_uni(q, nu - 1, s - 1, x)
    return lhs == rhs


def K_multi(params: SpaceParams, f: Shape, x) -> int | float:
    """Multivariate Krawtchouk K_f evaluated at x.

    x is a shape (integer tuple) for exact integer results, or a tuple of
    reals for the analytic continuation used by the depth-2 bound machinery.
    """
    validate_shape(params, f)
    if len(x) != params.r:
        raise ValueError("evaluation point must have r coordinates")
    r, n = params.r, params.n
    exact = all(isinstance(c, (int, Fraction)) for c in x)
    integral = all(isinstance(c, int) for c in x)
    x0 = n - sum(x)
    xs = (x0,) + tuple(x)  # xs[j] = x_j for j = 0..r
    value = Fraction(params.q ** (shape_weight(f) - shape_length(f)))
    if not exact:
        value = float(value)
    for i in range(1, r + 1):
        nu = sum(xs[j] for j in range(0, r - i + 2)) - sum(f[j - 1] for j in range(i + 1, r + 1))
        value = value * k_uni(params.q, nu, f[i - 1], x[r - i])
    if integral:
        frac = Fraction(value)
        if frac.denominator != 1:
            raise AssertionError(f"non-integer eigenvalue K_{f}({x}) = {frac}")
        return int(frac)
    return value


@lru_cache(maxsize=None)
def krawtchouk_table(params: SpaceParams) -> dict[tuple[Shape, Shape], int]:
    """All eigenvalues K_f(e) for f, e over the shapes of the space."""
    shapes = list(enumerate_shapes(params))
    return {(f, e): K_multi(params, f, e) for f in shapes for e in shapes}


# ---------------------------------------------------------------------------
# Character-sum cross-check


def canonical_bar_representative(params: SpaceParams, e: Shape):
    """A fixed vector whose right-to-left shape equals e: for each j, e_j
    blocks carry a single 1 at position r - j + 1."""
    validate_shape(params, e)
    r = params.r
    vec = []
    for j in range(1, r + 1):
        block = [0] * r
        block[r - j] = 1
        vec.extend(block * e[j - 1])
    vec.extend([0] * (r * (params.n - sum(e))))
    return tuple(vec)


def K_fourier_oracle(
    params: SpaceParams, f: Shape, e: Shape, cap: int = 1 << 16
) -> int:
    """K_f(e) as the character sum over vectors z of shape f of omega^(x.z),
    where x is a representative of right-to-left shape e.

    Exact integers for q = 2 (omega = -1); for q > 2, complex double
    arithmetic with the imaginary part required to vanish to 1e-6.
    """
    validate_shape(params, f)
    validate_shape(params, e)
    if params.ambient_size > cap:
        raise BudgetExceeded(
            f"character sum over {params.ambient_size} vectors exceeds cap {cap}"
        )
    x = canonical_bar_representative(params, e)
    groups = _vectors_by_shape(params)
    zs = groups.get(f, ())
    q = params.q
    if q == 2:
        total = 0
        for z in zs:
            dot = sum(a * b for a, b in zip(x, z)) % 2
            total += 1 if dot == 0 else -1
        return total
    omega = cmath.exp(2j * cmath.pi / q)
    acc = 0 + 0j
    for z in zs:
        dot = sum(a * b for a, b in zip(x, z)) % q
        acc += omega**dot
    if abs(acc.imag) >= 1e-6:
        raise AssertionError(f"character sum has imaginary part {acc.imag}")
    return round(acc.real)


@lru_cache(maxsize=None)
def _vectors_by_shape(params: SpaceParams) -> dict[Shape, tuple]:
    groups: dict[Shape, list] = {}
    for z in enumerate_vectors(params):
        groups.setdefault(shape_of(params, z), []).append(z)
    return {k: tuple(v) for k, v in groups.items()}


# ---------------------------------------------------------------------------
# Linear polynomials and the inner product


def linear_K(params: SpaceParams, i: int) -> tuple:
    """Affine coefficients (c_0, c_1, ..., c_r) of the degree-1 polynomial
    indexed by the single-part shape with its part at depth i:

        q^(i-1) (q-1) (n - x_r - ... - x_{r-i+2}) - q^i x_{r-i+1}
    """
    if not 1 <= i <= params.r:
        raise ValueError(f"depth {i} out of range [1, {params.r}]")
    q, r, n = params.q, params.r, params.n
    coeffs = [0] * (r + 1)
    coeffs[0] = q ** (i - 1) * (q - 1) * n
    for j in range(r - i + 2, r + 1):
        coeffs[j] = -(q ** (i - 1)) * (q - 1)
    coeffs[r - i + 1] = -(q**i)
    return tuple(coeffs)


def eval_linear(coeffs: tuple, x) -> Fraction:
    return coeffs[0] + sum(c * xi for c, xi in zip(coeffs[1:], x))


def weight_w(params: SpaceParams, e: Shape) -> Fraction:
    """Normalized valency w(e) = q^(-n r) v_e; a probability on shapes."""
    return Fraction(shape_count(params, e), params.ambient_size)


def inner_product(params: SpaceParams, u1, u2) -> Fraction:
    """<u1, u2> = sum_e u1(e) u2(e) w(e) over all shapes, exact.

    u1, u2 map shapes to rationals (dict or callable).
    """
    get1 = u1.__getitem__ if hasattr(u1, "__getitem__") else u1
    get2 = u2.__getitem__ if hasattr(u2, "__getitem__") else u2
    total = Fraction(0)
    for e in enumerate_shapes(params):
        total += Fraction(get1(e)) * Fraction(get2(e)) * weight_w(params, e)
    return total


# ---------------------------------------------------------------------------
# Roots and the limiting root-position function


class BracketingError(Exception):
    """Raised when no sign change is found while localizing a root."""


def k_root_min(q: int, nu: float, s: int) -> float:
    """Smallest root of k_s(nu, .), located by grid scan plus bisection.

    Requires nu > s so that all s roots are real and lie inside (0, nu).
    """
    if s < 1:
        raise ValueError("degree must be >= 1")
    if not nu > s:
        raise ValueError(f"need nu > s for real roots inside (0, nu); got nu={nu}, s={s}")
    poly = lambda x: float(k_uni(q, float(nu), s, x))
    cells = max(1, int(-(-nu // 1))) * 8  # ceil(nu) * 8
    step = float(nu) / cells
    prev_x = 0.0
    prev_val = poly(0.0)
    if prev_val == 0.0:
        return 0.0
    for j in range(1, cells + 1):
        x = j * step
        val = poly(x)
        if val == 0.0:
            return x
        if (prev_val > 0) != (val > 0):
            lo, hi = prev_x, x
            for _ in range(60):
                mid = 0.5 * (lo + hi)
                vm = poly(mid)
                if vm == 0.0:
                    return mid
                if (poly(lo) > 0) != (vm > 0):
                    hi = mid
                else:
                    lo = mid
            return 0.5 * (lo + hi)
        prev_x, prev_val = x, val
    raise BracketingError(f"no sign change of k_{s}({nu}, x) on [0, {nu}]")


def gamma(q: int, y: float) -> float:
    """Limit of the scaled smallest Krawtchouk root:

        (q-1)/q - ((q-2)/q) y - (2/q) sqrt((q-1) y (1-y))
    """
    if not 0 <= y <= (q - 1) / q:
        raise ValueError(f"y={y} outside [0, (q-1)/q]")
    return (q - 1) / q - (q - 2) / q * y - 2 / q * ((q - 1) * y * (1 - y)) ** 0.5
