"""Special-function kernel: gamma, Bessel J, Bessel zeros, Pochhammer,
Gauss hypergeometric 2F1 on [0, 1], complete elliptic integral E.

Everything here is scalar real arithmetic.  The Bessel and 2F1 evaluators
sum the defining series directly; no asymptotic expansions or analytic
continuation are involved.  For large argument the Bessel series loses
accuracy to cancellation in float64, so integer orders switch to exact
rational summation of the same series (see bessel_j).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

__all__ = [
    "SeriesConfig",
    "DomainError",
    "SeriesError",
    "gamma",
    "pochhammer",
    "bessel_j",
    "bessel_zero",
    "hyp2f1",
    "elliptic_e",
]


class DomainError(ValueError):
    """Argument outside the supported domain (poles included)."""


class SeriesError(RuntimeError):
    """Series did not meet the tolerance within max_terms."""


@dataclass(frozen=True)
class SeriesConfig:
    """Truncation control for series evaluation.

    abs_tol is a bound on the truncation tail, not on single terms.
    """

    abs_tol: float = 1e-14
    max_terms: int = 50_000_000

    def __post_init__(self):
        if not (self.abs_tol > 0):
            raise DomainError(f"abs_tol must be positive, got {self.abs_tol}")
        if self.max_terms < 1:
            raise DomainError(f"max_terms must be >= 1, got {self.max_terms}")


_DEFAULT = SeriesConfig()


def gamma(x: float) -> float:
    """Gamma function on the real line, poles at 0, -1, -2, ... rejected."""
    if x <= 0 and x == math.floor(x):
        raise DomainError(f"gamma pole at x = {x}")
    try:
        return math.gamma(x)
    except (ValueError, OverflowError) as exc:
        raise DomainError(f"gamma({x}): {exc}") from exc


def _rgamma(x: float) -> float:
    # reciprocal gamma; zero at the poles, used for Gauss limit edge cases
    if x <= 0 and x == math.floor(x):
        return 0.0
    return 1.0 / math.gamma(x)


def pochhammer(a: float, n: int) -> float:
    """Rising factorial (a)_n = a (a+1) ... (a+n-1), with (a)_0 = 1."""
    if n < 0:
        raise DomainError(f"pochhammer needs n >= 0, got {n}")
    out = 1.0
    for k in range(n):
        out *= a + k
    return out


def bessel_j(alpha: float, x: float, config: SeriesConfig | None = None) -> float:
    """Bessel function of the first kind via the defining power series

        J_alpha(x) = sum_k (-1)^k / (Gamma(k+alpha+1) k!) (x/2)^(2k+alpha).

    alpha >= 0.  Integer alpha with x > 8 is summed in exact rational
    arithmetic: the alternating terms near x ~ 25 exceed the result by ~1e7,
    which float64 cannot absorb at the 1e-10 accuracy the zero finder needs.
    """
    cfg = config or _DEFAULT
    if alpha < 0:
        raise DomainError(f"bessel_j needs alpha >= 0, got {alpha}")
    if x < 0:
        raise DomainError(f"bessel_j needs x >= 0, got {x}")
    if x == 0:
        return 1.0 if alpha == 0 else 0.0
    if alpha == int(alpha) and x > 8:
        return _bessel_j_exact(int(alpha), x, cfg)
    half = 0.5 * x
    term = half**alpha / gamma(alpha + 1.0)
    total = term
    ratio_base = half * half
    for k in range(1, cfg.max_terms):
        term *= -ratio_base / (k * (k + alpha))
        total += term
        # past k ~ x/2 the term ratio is below ~0.6, so the tail is < 2|term|
        if k > half + 1 and abs(term) < 0.25 * cfg.abs_tol:
            return total
    raise SeriesError(f"bessel_j({alpha}, {x}) did not converge")


def _bessel_j_exact(d: int, x: float, cfg: SeriesConfig) -> float:
    xr = Fraction(x) / 2  # exact binary-rational conversion
    q = xr * xr
    term = xr**d / math.factorial(d)
    total = term
    bound = Fraction(cfg.abs_tol) / 100
    for k in range(1, cfg.max_terms):
        term *= -q / (k * (k + d))
        total += term
        if k > float(xr) and abs(term) < bound:
            return float(total)
    raise SeriesError(f"bessel_j({d}, {x}) exact series did not converge")


def _bessel_j_prime(d: int, x: float) -> float:
    if d == 0:
        return -bessel_j(1, x)
    return 0.5 * (bessel_j(d - 1, x) - bessel_j(d + 1, x))


def bessel_zero(d: int, tol: float = 1e-12) -> float:
    """Smallest positive root of J_d, for integer 0 <= d <= 20.

    Sign-change bracket scan (first zero sits above x = d), bisection to a
    safe interval, then Newton polish with J_d' = (J_{d-1} - J_{d+1}) / 2.
    """
    if not (0 <= d <= 20):
        raise DomainError(f"bessel_zero supports 0 <= d <= 20, got {d}")
    if not (tol > 0):
        raise DomainError("tol must be positive")
    a = d + 0.1
    fa = bessel_j(d, a)
    step = 0.5
    while True:
        b = a + step
        fb = bessel_j(d, b)
        if fa * fb <= 0:
            break
        a, fa = b, fb
    for _ in range(40):
        m = 0.5 * (a + b)
        fm = bessel_j(d, m)
        if fa * fm <= 0:
            b = m
        else:
            a, fa = m, fm
    x = 0.5 * (a + b)
    for _ in range(60):
        dx = bessel_j(d, x) / _bessel_j_prime(d, x)
        x -= dx
        if abs(dx) < tol:
            break
    return x


def hyp2f1(a: float, b: float, c: float, x: float, config: SeriesConfig | None = None) -> float:
    """Gauss hypergeometric series sum_n (a)_n (b)_n / ((c)_n n!) x^n on [0, 1].

    At x = 1 the Gauss limit Gamma(c) Gamma(c-a-b) / (Gamma(c-a) Gamma(c-b))
    is returned; it requires c - a - b > 0.  For x in [0, 1) the series is
    summed in numpy chunks with the geometric tail bound |term| x / (1 - x),
    so the stopping rule controls the tail, not just the last term.
    """
    cfg = config or _DEFAULT
    if c <= 0 and c == math.floor(c):
        raise DomainError(f"hyp2f1 pole: c = {c} is a non-positive integer")
    if not (0.0 <= x <= 1.0):
        raise DomainError(f"hyp2f1 restricted to x in [0, 1], got {x}")
    if x == 1.0:
        if not (c - a - b > 0):
            raise DomainError(
                f"hyp2f1 at x = 1 needs c - a - b > 0, got {c - a - b}"
            )
        return gamma(c) * gamma(c - a - b) * _rgamma(c - a) * _rgamma(c - b)
    if x == 0.0:
        return 1.0
    # terminating cases (a or b a non-positive integer) fall out naturally:
    # a ratio factor hits zero and the tail bound is exact from then on.
    total = 0.0
    term = 1.0  # term_0
    n0 = 0
    chunk = 4096
    tail_factor = x / (1.0 - x)
    # the geometric tail bound needs the term ratio at or below x, which
    # holds once n clears the parameter scale
    n_safe = 8 + 4 * (abs(a) + abs(b) + abs(c))
    while n0 < cfg.max_terms:
        n = np.arange(n0, n0 + chunk, dtype=float)
        ratios = x * (a + n) * (b + n) / ((c + n) * (n + 1.0))
        terms = term * np.cumprod(ratios)
        total += term + float(np.sum(terms[:-1]))
        term = float(terms[-1])
        n0 += chunk
        if n0 > n_safe and abs(term) * max(tail_factor, 1.0) < cfg.abs_tol:
            return total + term
        if chunk < 1_048_576:
            chunk *= 2
    raise SeriesError(f"hyp2f1({a},{b};{c};{x}) did not converge in {cfg.max_terms} terms")


def _gl_nodes(n: int):
    return np.polynomial.legendre.leggauss(n)


def _adaptive_interval(f, a: float, b: float, tol: float, max_depth: int = 60) -> float:
    """Adaptive Gauss-Legendre on [a, b]; f maps ndarray -> ndarray."""
    x8, w8 = _gl_nodes(8)
    x16, w16 = _gl_nodes(16)

    def sample(lo, hi):
        mid, rad = 0.5 * (hi + lo), 0.5 * (hi - lo)
        v1 = rad * float(np.dot(w8, f(mid + rad * x8)))
        v2 = rad * float(np.dot(w16, f(mid + rad * x16)))
        return v2, abs(v2 - v1)

    total = 0.0
    stack = [(a, b, 0)]
    while stack:
        lo, hi, depth = stack.pop()
        v, e = sample(lo, hi)
        # proportional tolerance allocation keeps the summed error below tol
        if e <= tol * (hi - lo) / (b - a) or depth >= max_depth:
            total += v
        else:
            m = 0.5 * (lo + hi)
            stack.append((m, hi, depth + 1))
            stack.append((lo, m, depth + 1))
    return total


def elliptic_e(m: float, tol: float = 1e-11) -> float:
    """Complete elliptic integral E(m) = int_0^{pi/2} sqrt(1 - m sin^2 t) dt.

    Evaluated by adaptive quadrature of the defining integral, which is
    robust for every m <= 1 including large negative parameters (the
    integrand develops an |sin|-type kink near t = 0 at scale 1/sqrt(-m);
    the adaptive refinement resolves it).
    """
    if m > 1.0:
        raise DomainError(f"elliptic_e needs m <= 1, got {m}")
    if m == 0.0:
        return 0.5 * math.pi
    if m == 1.0:
        return 1.0

    def f(t):
        return np.sqrt(1.0 - m * np.sin(t) ** 2)

    scale = max(1.0, math.sqrt(abs(m)))
    return _adaptive_interval(f, 0.0, 0.5 * math.pi, tol * scale)


def elliptic_e_series(m: float, config: SeriesConfig | None = None) -> float:
    """Series form E(m) = (pi/2) sum_k [ ((1/2)_k / k!)^2 m^k / (1 - 2k) ].

    Converges for |m| < 1; kept as an independent cross-check of the
    quadrature route.
    """
    cfg = config or _DEFAULT
    if not (-1.0 < m < 1.0):
        raise DomainError(f"elliptic_e_series needs |m| < 1, got {m}")
    total = 1.0
    coef = 1.0  # ((1/2)_k / k!)^2 at k = 0
    for k in range(1, cfg.max_terms):
        coef *= ((k - 0.5) / k) ** 2
        term = coef * m**k / (1 - 2 * k)
        total += term
        if abs(term) < cfg.abs_tol * (1.0 - abs(m)):
            return 0.5 * math.pi * total
    raise SeriesError(f"elliptic_e_series({m}) did not converge")
