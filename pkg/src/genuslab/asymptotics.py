"""Limit functions for the genus of sparse random graphs.

component_fraction is the limiting number of tree components per vertex of a
random graph with average degree c,

    u(c) = (1/c) * sum_{r >= 1} r^(r-2) / r! * (c e^(-c))^r,

with u(0) = 1 and u(c) = 1 - c/2 on [0, 1].  component_fraction_derivative
is its derivative, genus_per_edge the limiting genus per edge at edge density
lambda, and cycle_count_limit the limiting expected number of cycles in the
slightly supercritical regime, defined by a double integral that is evaluated
both by nested quadrature and, independently, by stratified Monte Carlo.

All series and quadrature routines take an absolute tolerance and either meet
it or raise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import integrate

_CHUNK = 1 << 15
_INV_SQRT_2PI = 1.0 / math.sqrt(2.0 * math.pi)


def _series_sum(w: float, shift: int, tol: float, max_terms: int) -> float:
    """sum_{r >= 1} r^(r + shift) / r! * w^r for shift in {-1, -2}, 0 <= w <= 1/e.

    Terms are generated by the exact ratio recurrence

        t_{r+1} / t_r = w * (1 + 1/r)^(r + shift),

    accumulated in extended precision so that millions of terms stay well
    below tol in rounding error.  The stopping rule uses two rigorous tail
    bounds: the geometric bound t_R * q / (1 - q) with q = w e (the ratios
    increase towards q), and the Stirling bound t_r <= r^(shift - 1/2) q^r /
    sqrt(2 pi), which still works at the critical point q = 1 where the
    series converges only polynomially.
    """
    if shift not in (-1, -2):
        raise ValueError("shift must be -1 or -2")
    if w == 0.0:
        return 0.0
    one = np.longdouble(1.0)
    wl = np.longdouble(w)
    q = float(wl * np.exp(one))
    if q > 1.0 + 1e-12:
        raise ValueError("series argument must satisfy w <= 1/e")
    q = min(q, 1.0)
    total = np.longdouble(0.0)
    t_last = wl  # t_1 = w
    total += t_last
    r = 1
    while r < max_terms:
        count = min(_CHUNK, max_terms - r)
        rs = np.arange(r, r + count, dtype=np.longdouble)
        ratios = wl * np.exp((rs + shift) * np.log1p(one / rs))
        terms = t_last * np.cumprod(ratios)
        total += terms.sum()
        t_last = terms[-1]
        r += count
        # tail after term r
        if q < 1.0:
            geom = float(t_last) * q / (1.0 - q)
            stirling = _INV_SQRT_2PI * (r + 1) ** (shift - 0.5) * q ** (r + 1) / (1.0 - q)
            tail = min(geom, stirling)
        elif shift == -2:
            tail = _INV_SQRT_2PI * (2.0 / 3.0) * r ** (-1.5)
        else:
            tail = _INV_SQRT_2PI * 2.0 * r ** (-0.5)
        if tail <= tol:
            return float(total)
    raise RuntimeError(
        f"series needs more than {max_terms} terms for tolerance {tol} "
        f"(argument is too close to the critical point w = 1/e)"
    )


def component_fraction(c: float, tol: float = 1e-10, max_terms: int = 100_000_000) -> float:
    """Limiting tree components per vertex u(c) at average degree c >= 0.

    Computed from the defining series; equals 1 - c/2 on [0, 1] and decays
    like e^(-c) for large c.  tol is an absolute tolerance on the result.
    """
    if c < 0:
        raise ValueError("average degree must be nonnegative")
    if c == 0.0:
        return 1.0
    w = c * math.exp(-c)
    return _series_sum(w, -2, tol * c, max_terms) / c


def component_fraction_derivative(
    c: float, tol: float = 1e-10, max_terms: int = 100_000_000
) -> float:
    """Derivative of component_fraction at c > 0.

    Differentiating the series in c gives

        u'(c) = ((1 - c) / c^2) * S1 - (1 / c^2) * S2,

    with S1 = sum r^(r-1)/r! w^r and S2 = sum r^(r-2)/r! w^r at w = c e^(-c).
    Equals -1/2 on (0, 1].  At c = 1 the S1 coefficient vanishes, which
    conveniently removes the one series that converges too slowly to sum
    there.
    """
    if c <= 0:
        raise ValueError("average degree must be positive")
    w = c * math.exp(-c)
    if c == 1.0:
        return -_series_sum(w, -2, tol, max_terms)
    s1 = _series_sum(w, -1, tol * c * c / (2.0 * abs(1.0 - c)), max_terms)
    s2 = _series_sum(w, -2, tol * c * c / 2.0, max_terms)
    return (1.0 - c) / (c * c) * s1 - s2 / (c * c)


def genus_per_edge(lam: float, tol: float = 1e-10, max_terms: int = 100_000_000) -> float:
    """Limiting genus per edge mu(lambda) of a random graph with m ~ lambda n.

    mu(lambda) = (u(2 lambda) + lambda - 1) / (2 lambda); it is 0 for
    lambda <= 1/2 and increases to 1/2.  The cancellation in the numerator on
    the flat part is handled by tightening the series tolerance accordingly.
    """
    if lam <= 0:
        raise ValueError("edge density must be positive")
    c = 2.0 * lam
    u = component_fraction(c, tol=tol * c, max_terms=max_terms) if c > 0 else 1.0
    return (u + lam - 1.0) / c


def _cycle_integral_inner(x: float, t_max: float, epsrel: float) -> float:
    # integral over y of y^(-3/2) exp(-x^2/(2y) - 2y), via y = t^2
    peak = math.sqrt(x / 2.0) if x > 0 else 0.0
    pts = [peak] if 0.0 < peak < t_max else None
    val, _ = integrate.quad(
        lambda t: 2.0 * math.exp(-x * x / (2.0 * t * t) - 2.0 * t * t) / (t * t),
        0.0,
        t_max,
        points=pts,
        epsabs=0.0,
        epsrel=epsrel,
        limit=300,
    )
    return val


def cycle_count_limit(i: float, tol: float = 1e-9) -> float:
    """Limiting cycle-count integral of the slightly supercritical regime.

    lambda(i) = (1/sqrt(8 pi)) * int_0^i int_0^inf (e^(4x) - 1) y^(-3/2)
                * exp(-x^2 / (2y) - 2y) dy dx,

    evaluated by nested adaptive quadrature with the inner integral truncated
    at a point where its tail is provably below tol.  tol is absolute.
    """
    if i < 0:
        raise ValueError("upper limit must be nonnegative")
    if i == 0.0:
        return 0.0
    if tol <= 0:
        raise ValueError("tol must be positive")
    # exp(-2 t^2) tail beyond t_max stays below tol/100 even after the
    # e^(4x) <= e^(4i) factor
    t_max = math.sqrt((math.log(100.0 / min(tol, 1e-2)) + 4.0 * i) / 2.0)
    epsrel_inner = min(1e-11, tol * 1e-3)

    def outer(x: float) -> float:
        if x <= 0.0:
            return 0.0
        return math.expm1(4.0 * x) * _cycle_integral_inner(x, t_max, epsrel_inner)

    val, _ = integrate.quad(outer, 0.0, i, epsabs=0.5 * tol * math.sqrt(8.0 * math.pi),
                            epsrel=1e-12, limit=300)
    return val / math.sqrt(8.0 * math.pi)


@dataclass(frozen=True)
class MCEstimate:
    """Monte Carlo estimate with a standard error from independent rounds."""

    value: float
    stderr: float
    samples: int


def mc_cycle_count_limit(i: float, samples: int = 1_000_000, seed=0) -> MCEstimate:
    """Stratified Monte Carlo check of cycle_count_limit.

    Substituting t = sqrt(y) and then w = x/t turns the integrand into the
    bounded function (1/t)(e^(4wt) - 1) exp(-w^2/2 - 2t^2) on the region
    w t <= i, which is integrated over a truncated box (truncation error is
    below 1e-8 of the result, far under any attainable stochastic error) by
    averaging one uniform point per grid cell, repeated over independent
    rounds that provide the standard error.
    """
    if i <= 0:
        raise ValueError("upper limit must be positive")
    if samples < 32:
        raise ValueError("too few samples")
    rng = np.random.default_rng(seed)
    w_max = math.sqrt(8.0 * i + 42.0)
    t_max = math.sqrt((4.0 * i + 21.0) / 2.0)
    grid = int(math.sqrt(samples / 8.0))
    grid = max(4, min(grid, 1024))
    rounds = max(2, int(round(samples / (grid * grid))))
    cell_w = w_max / grid
    cell_t = t_max / grid
    wi, ti = np.meshgrid(np.arange(grid), np.arange(grid), indexing="ij")
    wi = wi.ravel().astype(np.float64)
    ti = ti.ravel().astype(np.float64)
    area = w_max * t_max
    means = np.empty(rounds)
    for r in range(rounds):
        w = (wi + rng.random(wi.size)) * cell_w
        t = (ti + rng.random(ti.size)) * cell_t
        inside = w * t <= i
        g = np.zeros(wi.size)
        tw = t[inside]
        g[inside] = np.expm1(4.0 * w[inside] * tw) / tw * np.exp(
            -0.5 * w[inside] ** 2 - 2.0 * tw * tw
        )
        means[r] = g.mean() * area
    scale = 1.0 / math.sqrt(2.0 * math.pi)
    value = float(means.mean() * scale)
    stderr = float(means.std(ddof=1) / math.sqrt(rounds) * scale)
    return MCEstimate(value=value, stderr=stderr, samples=rounds * grid * grid)
