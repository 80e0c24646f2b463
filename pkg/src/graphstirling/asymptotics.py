"""Lambert-W estimates and normal-approximation diagnostics.

The block-count distribution of a large forest or cycle concentrates
around n/W(n) with spread n/(W(n)(W(n)+1)).  This module quantifies how
fast the exact distributions approach those estimates and the normal
curve.  Exact rationals are formed first; floats enter only at the
reporting boundary.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .combinatorics import bell, ratio_to_float
from .families import (
    Cycle,
    Forest,
    GraphFamily,
    bell_moment_sum,
    stirling_vector,
)

__all__ = [
    "EstimateReport",
    "NormalityReport",
    "bell_ratio_deviation",
    "estimate_report",
    "harper_variance_deviation",
    "lambert_w",
    "normal_cdf",
    "normal_pdf",
    "normality_report",
]


def lambert_w(x: float) -> float:
    """Principal branch W(x) for x > 0, so W e^W = x.

    Halley iteration; the usual log-log seed works from x >= e, below
    that a short bisection supplies the starting point.
    """
    if not x > 0:
        raise ValueError("lambert_w needs x > 0")
    if x >= math.e:
        w = max(math.log(x) - math.log(math.log(x)), 0.5)
    else:
        lo, hi = 0.0, 1.0
        for _ in range(20):
            mid = 0.5 * (lo + hi)
            if mid * math.exp(mid) < x:
                lo = mid
            else:
                hi = mid
        w = 0.5 * (lo + hi)
    for _ in range(100):
        ew = math.exp(w)
        resid = w * ew - x
        if abs(resid) <= 1e-13 * x:
            break
        step = resid / (ew * (w + 1.0) - (w + 2.0) * resid / (2.0 * w + 2.0))
        w -= step
        if abs(step) <= 1e-16 * max(1.0, abs(w)):
            break
    return w


def normal_cdf(z: float) -> float:
    return 0.5 * math.erfc(-z / math.sqrt(2.0))


def normal_pdf(z: float) -> float:
    return math.exp(-0.5 * z * z) / math.sqrt(2.0 * math.pi)


@dataclass(frozen=True)
class EstimateReport:
    """Exact moments next to their n/W(n) estimates.

    The scaled error fields multiply the absolute errors by log n (and
    divide the variance one by c^2 for forests); staying bounded as n
    grows is the advertised convergence rate.
    """

    graph: GraphFamily
    n: int
    w: float
    mean_exact_float: float
    var_exact_float: float
    mean_estimate: float
    var_estimate: float
    mean_abs_error_times_logn: float
    var_abs_error_times_logn_over_c2: float


def estimate_report(g: GraphFamily) -> EstimateReport:
    """Moment estimates for any size, without materializing the counts.

    The exact side uses the Bell closed forms, so this stays cheap for
    n in the thousands where the count vectors would be enormous.
    """
    n = g.n
    if n < 1:
        raise ValueError("estimate_report needs n >= 1")
    denom = bell_moment_sum(g, 0)
    mean = Fraction(bell_moment_sum(g, 1), denom)
    variance = Fraction(bell_moment_sum(g, 2), denom) - mean * mean - 1
    mean_f = ratio_to_float(mean.numerator, mean.denominator)
    var_f = ratio_to_float(variance.numerator, variance.denominator)
    w = lambert_w(float(n))
    mean_est = n / w
    var_est = n / (w * (w + 1.0))
    logn = math.log(n) if n > 1 else 1.0
    comp = g.c if isinstance(g, Forest) else 1
    return EstimateReport(
        graph=g,
        n=n,
        w=w,
        mean_exact_float=mean_f,
        var_exact_float=var_f,
        mean_estimate=mean_est,
        var_estimate=var_est,
        mean_abs_error_times_logn=abs(mean_f - mean_est) * logn,
        var_abs_error_times_logn_over_c2=abs(var_f - var_est) * logn / (comp * comp),
    )


def bell_ratio_deviation(n: int) -> float:
    """(B_{n-1}/B_n - W(n)/n) * n^2 / log n, exactly-formed ratio first."""
    if n < 2:
        raise ValueError("need n >= 2")
    ratio = ratio_to_float(bell(n - 1), bell(n))
    w = lambert_w(float(n))
    return (ratio - w / n) * n * n / math.log(n)


def harper_variance_deviation(n: int) -> float:
    """(B_{n+1}/B_{n-1} - (B_n/B_{n-1})^2 - n/(W(W+1))) * log^2 n."""
    if n < 2:
        raise ValueError("need n >= 2")
    b_prev, b_n, b_next = bell(n - 1), bell(n), bell(n + 1)
    # the subtraction cancels almost everything; do it exactly
    exact = Fraction(b_next, b_prev) - Fraction(b_n, b_prev) ** 2
    w = lambert_w(float(n))
    est = n / (w * (w + 1.0))
    logn = math.log(n)
    return (ratio_to_float(exact.numerator, exact.denominator) - est) * logn * logn


@dataclass(frozen=True)
class NormalityReport:
    """How close the exact block-count law is to the fitted normal.

    kolmogorov_distance checks both one-sided CDF gaps at every jump of
    the standardized distribution; local_limit_sup is the largest gap
    between sigma * P(X = k) and the normal density at k's z-score;
    berry_esseen_product is the Kolmogorov distance times sigma, the
    dimensionless combination that should stay bounded.
    """

    graph: GraphFamily
    mean: float
    std_dev: float
    kolmogorov_distance: float
    local_limit_sup: float
    berry_esseen_product: float


def normality_report(g: GraphFamily) -> NormalityReport:
    counts = stirling_vector(g).counts
    total = sum(counts)
    s1 = sum(k * a for k, a in enumerate(counts))
    s2 = sum(k * k * a for k, a in enumerate(counts))
    mean_fr = Fraction(s1, total)
    var_fr = Fraction(s2, total) - mean_fr * mean_fr
    if var_fr <= 0:
        raise ValueError("distribution is degenerate, nothing to diagnose")
    mean = ratio_to_float(mean_fr.numerator, mean_fr.denominator)
    sd = math.sqrt(ratio_to_float(var_fr.numerator, var_fr.denominator))

    ks = 0.0
    local = 0.0
    prefix = 0
    for k, a in enumerate(counts):
        if a == 0:
            continue
        z = (k - mean) / sd
        below = ratio_to_float(prefix, total)
        prefix += a
        at = ratio_to_float(prefix, total)
        gauss = normal_cdf(z)
        ks = max(ks, abs(below - gauss), abs(at - gauss))
        pk = ratio_to_float(a, total)
        local = max(local, abs(sd * pk - normal_pdf(z)))

    return NormalityReport(
        graph=g,
        mean=mean,
        std_dev=sd,
        kolmogorov_distance=ks,
        local_limit_sup=local,
        berry_esseen_product=ks * sd,
    )
