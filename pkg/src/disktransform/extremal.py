"""Endpoint norms of the conjugating solution operator.

Covers the closed form for the Lp -> Linf norm (p > 2) and its extremal
density, the monotone auxiliary function built from Gauss hypergeometric
values, the interpolation upper bound on Lp -> Lp, the L1 -> L1 integrals
(an elliptic-integral radial form plus direct 2-D quadrature, with the
argmax of the scan reported but never asserted), and the density showing the
operator does not map L2 into bounded functions.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .oracle import (DEFAULT_BUDGET, _adaptive_1d, _adaptive_2d, cauchy_eval,
                     quad_disk, thread_cap)
from .specfun import elliptic_e, gamma, hyp2f1
from .spectral import solve_alpha

__all__ = [
    "ExponentPair",
    "phi_fn",
    "norm_p_to_inf",
    "monotonicity_scan",
    "extremal_ratio_pinf",
    "riesz_thorin_bound",
    "l1_at_zero",
    "l1_at_zero_direct",
    "l1_integrand_scan",
    "counterexample_p2",
]


@dataclass(frozen=True)
class ExponentPair:
    """p in (2, inf] with its conjugate q = p/(p-1) in [1, 2)."""
    p: float
    q: float = None  # type: ignore[assignment]

    def __post_init__(self):
        if not (self.p > 2):
            raise ValueError("p must exceed 2 (p = inf allowed)")
        q = 1.0 if math.isinf(self.p) else self.p / (self.p - 1)
        if self.q is None:
            object.__setattr__(self, "q", q)
        elif abs(self.q - q) > 1e-12:
            raise ValueError("q is not the conjugate exponent of p")
        if not (1 <= self.q < 2):
            raise ValueError("conjugate exponent must lie in [1, 2)")


def phi_fn(q: float, t: float) -> float:
    """The radial comparison function

        (2/(2-q)) 2F1(q/2, q/2-1; 1; t) + 2F1(q/2, q/2; 2; t) t^{q/2}

    for q in [1, 2), t in [0, 1].  At t = 1 both series go through the
    Gauss closed form (their parameter margin 2 - q is positive)."""
    if not (1 <= q < 2):
        raise ValueError("q must lie in [1, 2)")
    if not (0 <= t <= 1):
        raise ValueError("t must lie in [0, 1]")
    first = (2.0 / (2.0 - q)) * hyp2f1(q / 2, q / 2 - 1, 1.0, t)
    second = hyp2f1(q / 2, q / 2, 2.0, t) * t ** (q / 2)
    return first + second


def norm_p_to_inf(p: float) -> float:
    """Closed-form Lp -> Linf operator norm, p > 2:
    2 (Gamma(2-q) / Gamma(2-q/2)^2)^{1/q}.  Rejects p <= 2, where the
    operator does not map into bounded functions."""
    pair = ExponentPair(p)
    q = pair.q
    return 2.0 * (gamma(2 - q) / gamma(2 - q / 2) ** 2) ** (1.0 / q)


def monotonicity_scan(q: float, grid_size: int) -> bool:
    """True iff the comparison function is nondecreasing across an evenly
    spaced grid on [0, 1] (slack 1e-10 for float noise)."""
    if grid_size < 2:
        raise ValueError("grid_size must be at least 2")
    prev = phi_fn(q, 0.0)
    for i in range(1, grid_size):
        cur = phi_fn(q, i / (grid_size - 1))
        if cur < prev - 1e-10:
            return False
        prev = cur
    return True


def _phi0_boundary(qp: float):
    """The extremal density i (1-w) / |1-w|^{1+qp}, vectorized."""

    def f(w):
        return 1j * (1 - w) / np.abs(1 - w) ** (1 + qp)

    return f


def extremal_ratio_pinf(p: float, z: complex, tol: float,
                        budget: int = 4 * DEFAULT_BUDGET) -> float:
    """|P[phi0](z)| / ||phi0||_p for the extremal density of the Lp -> Linf
    problem; approaches the closed-form norm as z -> 1 along the real axis.

    The numerator integrals are evaluated by quadrature only: the Cauchy
    kernel part in polar coordinates centered at z, the conjugated analytic
    kernel part as a smooth disk integral.  The denominator uses the closed
    form (Gamma(2-q)/Gamma(2-q/2)^2)^{1/p} (equal to 1 when p = inf)."""
    pair = ExponentPair(p)
    if abs(z) >= 1:
        raise ValueError("z must be interior")
    q = pair.q
    qp = 0.0 if math.isinf(p) else q / p
    phi0 = _phi0_boundary(qp)
    part_cauchy = cauchy_eval(phi0, z, tol, budget)

    def conj_kernel(w):
        return z * np.conj(phi0(w)) / (1 - np.conj(w) * z)

    part_analytic = quad_disk(conj_kernel, tol, budget)
    value = -part_cauchy.value - part_analytic.value
    denom = 1.0 if math.isinf(p) else (gamma(2 - q) / gamma(2 - q / 2) ** 2) ** (1.0 / p)
    return abs(value) / denom


def riesz_thorin_bound(p: float) -> float:
    """Interpolation upper bound alpha^{2/p} (8/pi)^{1-2/p} for p >= 2
    (endpoints: the L2 norm root at p = 2, 8/pi at p = inf)."""
    if not (p >= 2):
        raise ValueError("p must be >= 2")
    alpha = solve_alpha()
    w = 0.0 if math.isinf(p) else 2.0 / p
    return alpha**w * (8.0 / math.pi) ** (1.0 - w)


_R_CLAMP = 1.0 - 1e-8


def _l1_radial_integrand(r: float) -> float:
    """(1-r^2) E(-4r^2/(1-r^2)^2) + (1+r^2) E(4r^2/(1+r^2)^2), clamped at
    r = 1 - 1e-8: the first factor tends to a finite limit as r -> 1 and the
    clamp extends the integrand by its last value across the final sliver
    (constant endpoint extrapolation, error O(1e-8))."""
    r = min(r, _R_CLAMP)
    um = 1.0 - r * r
    up = 1.0 + r * r
    first = um * elliptic_e(-4 * r * r / (um * um))
    second = up * elliptic_e(4 * r * r / (up * up))
    return first + second


def l1_at_zero(tol: float, budget: int = DEFAULT_BUDGET) -> float:
    """The L1 -> L1 kernel integral at the origin via the radial
    elliptic-integral form: (2/pi) times the integral over r in [0, 1]."""

    def f(arr):
        return np.array([_l1_radial_integrand(float(x)) for x in arr])

    v, _, _ = _adaptive_1d(f, 0.0, 1.0, tol, budget)
    return (2.0 / math.pi) * float(v)


def l1_at_zero_direct(tol: float, budget: int = DEFAULT_BUDGET) -> float:
    """Independent 2-D route: the kernel modulus at the origin is
    |z - 1/z|, integrated directly (the polar Jacobian absorbs the 1/|z|
    blow-up at the origin)."""
    res = quad_disk(lambda z: np.abs(z - 1.0 / z), tol, budget)
    return res.value.real


def _l1_point(w: complex, tol: float, budget: int):
    if abs(w) >= 1:
        raise ValueError("grid points must be interior")

    def F(B, U):
        c = (np.exp(1j * B) * w.conjugate()).real
        S = -c + np.sqrt(c * c + 1.0 - abs(w) ** 2)
        s = U * S
        zz = w + s * np.exp(1j * B)
        return np.abs(-np.exp(-1j * B) + s * zz / (1 - w.conjugate() * zz)) * S / math.pi

    v, e, _ = _adaptive_2d(F, (0.0, 2 * math.pi, 0.0, 1.0), tol, budget)
    return (w, float(np.real(v)), float(e))


def l1_integrand_scan(grid, tol: float, budget: int = 2 * DEFAULT_BUDGET):
    """F(w) = int |1/(w-z) + z/(1 - conj(w) z)| dA(z) for each grid point w.

    The 1/|w-z| singularity is removed by polar coordinates centered at w.
    Returns rows (w, F(w), err_estimate) in grid order.  Points are
    independent and are evaluated on up to DISKT_THREADS workers; results
    are collected in grid order, so output does not depend on the worker
    count.  The caller may report the argmax; nothing about the supremum
    location is asserted here (the maximality of w = 0 is conjectural and is
    labelled as such by the CLI)."""
    pts = [complex(w) for w in grid]
    cap = min(thread_cap(), max(1, len(pts)))
    if cap == 1 or len(pts) == 1:
        return [_l1_point(w, tol, budget) for w in pts]
    from concurrent.futures import ThreadPoolExecutor

    with ThreadPoolExecutor(max_workers=cap) as pool:
        return list(pool.map(lambda w: _l1_point(w, tol, budget), pts))


def counterexample_p2(budget: int = DEFAULT_BUDGET) -> dict:
    """Evidence that the operator cannot act on L2 densities into bounded
    functions: the density w / (|w|^2 log(2/|w|)).

    Its squared L2 norm, 2 int_0^1 dr / (r log^2(2/r)), is evaluated in the
    variable t = log(2/r) (integrand 2/t^2 on [log 2, log(2/eps)]) plus the
    exact antiderivative tail 2/log(2/eps); the reference value is 2/log 2.
    The kernel integral at the origin diverges: the annulus integrals
    2 int_eps^1 dr / (r log(2/r)) grow without bound as eps decreases, shown
    across eps = 10^{-1} .. 10^{-8}."""
    eps_norm = 1e-8
    t_hi = math.log(2.0 / eps_norm)

    def f_sq(t):
        return 2.0 / (t * t)

    v, _, _ = _adaptive_1d(f_sq, math.log(2.0), t_hi, 1e-10, budget)
    norm_sq_numeric = float(v) + 2.0 / t_hi
    reference = 2.0 / math.log(2.0)

    annuli = []
    for k in range(1, 9):
        eps = 10.0 ** (-k)

        def f_ann(t):
            return 2.0 / t

        av, _, _ = _adaptive_1d(f_ann, math.log(2.0), math.log(2.0 / eps), 1e-10, budget)
        annuli.append((eps, float(av)))

    values = [a for _, a in annuli]
    diffs = [values[i + 1] - values[i] for i in range(len(values) - 1)]
    return {
        "norm_sq": norm_sq_numeric,
        "norm_sq_reference": reference,
        "norm_sq_abs_err": abs(norm_sq_numeric - reference),
        "annulus_integrals": annuli,
        "strictly_increasing": all(d > 0 for d in diffs),
        "growth_differences": diffs,
    }
