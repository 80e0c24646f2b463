"""Exact real-root certificates for integer polynomials.

Sturm chains are built as primitive pseudo-remainder sequences, so every
entry stays an integer polynomial: each remainder is divided by its
coefficient gcd, and the pseudo-division multiplier is kept positive so
the classical sign rules survive the scaling.  Sign variations ignore
zero entries, which makes interval counts exact even when a query point
lands on a root: V(a) - V(b) counts distinct roots in the half-open
interval (a, b].

Roots at the origin never go through a chain.  They are read off the
trailing zero coefficients, and every chain runs on the polynomial with
x^multiplicity divided out.  Isolation splits intervals only at dyadic
points that are not roots (stepping one dyadic notch inward until
clear), so interval endpoints are never roots and open/half-open
bookkeeping cannot drift.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .combinatorics import ratio_to_float
from .errors import VerificationError
from .polynomials import IntPolynomial

__all__ = [
    "BernoulliDecomposition",
    "PrecedesVerdict",
    "RootIsolation",
    "SturmChain",
    "UlcReport",
    "bernoulli_decomposition",
    "count_real_roots",
    "count_roots_in",
    "isolate_negative_roots",
    "squarefree_part",
    "sturm_chain",
    "ultra_log_concave",
    "verify_interlacing_relations",
    "verify_precedes",
]


# ---------------------------------------------------------------------------
# integer polynomial plumbing (ascending coefficient lists)


def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _primitive(c: list[int]) -> list[int]:
    """Divide out the positive content, preserving signs."""
    if not c:
        return c
    g = math.gcd(*c)
    return c if g == 1 else [x // g for x in c]


def _pseudo_rem(f: list[int], g: list[int]) -> list[int]:
    """A positive integer multiple of the remainder of f by g.

    Each reduction step rescales by |lc(g)|, never by anything negative,
    so the result sits on the same side of zero as the true rational
    remainder.
    """
    dg = len(g) - 1
    lc = g[-1]
    alc = abs(lc)
    sgn = 1 if lc > 0 else -1
    r = list(f)
    while r and len(r) - 1 >= dg:
        shift = len(r) - 1 - dg
        lead = r[-1]
        r = [alc * x for x in r]
        for i, gi in enumerate(g):
            r[shift + i] -= sgn * lead * gi
        _trim(r)
    return r


def _exact_div(f: list[int], g: list[int]) -> list[int]:
    """f // g when g divides f exactly; anything else is an error."""
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(f)
    dg = len(g) - 1
    lc = g[-1]
    q = [0] * max(len(f) - dg, 0)
    while r and len(r) - 1 >= dg:
        shift = len(r) - 1 - dg
        head, rem = divmod(r[-1], lc)
        if rem:
            raise VerificationError("inexact polynomial division")
        q[shift] = head
        for i, gi in enumerate(g):
            r[shift + i] -= head * gi
        _trim(r)
    if r:
        raise VerificationError("inexact polynomial division")
    return q


def _poly_gcd(f: list[int], g: list[int]) -> list[int]:
    """Primitive gcd with positive leading coefficient."""
    a, b = _primitive(list(f)), _primitive(list(g))
    if len(a) < len(b):
        a, b = b, a
    while b:
        a, b = b, _primitive(_pseudo_rem(a, b))
    if a and a[-1] < 0:
        a = [-x for x in a]
    return a


def _sign_at(coeffs: tuple[int, ...], num: int, den: int) -> int:
    """Sign of p(num/den) for den > 0, via den^degree-scaled Horner."""
    res = 0
    dp = 1
    for c in reversed(coeffs):
        res = res * num + c * dp
        dp *= den
    return (res > 0) - (res < 0)


def _sign(p: IntPolynomial, x: Fraction) -> int:
    return _sign_at(p.coeffs, x.numerator, x.denominator)


def _variations(signs: list[int]) -> int:
    count = 0
    prev = 0
    for s in signs:
        if s == 0:
            continue
        if prev and s != prev:
            count += 1
        prev = s
    return count


# ---------------------------------------------------------------------------
# squarefree part and chains


@lru_cache(maxsize=None)
def squarefree_part(p: IntPolynomial) -> IntPolynomial:
    """The primitive polynomial with the same distinct roots as p.

    Leading coefficient normalized positive; multiplicities collapse to
    one, including at the origin.
    """
    if p.is_zero():
        raise ValueError("zero polynomial has no squarefree part")
    coeffs = list(p.coeffs)
    if len(coeffs) == 1:
        return IntPolynomial([1])
    deriv = _trim([i * c for i, c in enumerate(coeffs)][1:])
    g = _poly_gcd(coeffs, deriv)
    q = _primitive(_exact_div(coeffs, g))
    if q[-1] < 0:
        q = [-x for x in q]
    return IntPolynomial(q)


def _squarefree_layers(q: IntPolynomial) -> list[IntPolynomial]:
    """Successive squarefree quotients of q (no root at the origin).

    layers[0] carries every distinct root, layers[1] those of
    multiplicity at least two, and so on; a root of multiplicity m shows
    up in exactly m layers.  Ends after one layer for squarefree input.
    """
    layers = []
    cur = q
    while cur.degree > 0:
        sf = squarefree_part(cur)
        layers.append(sf)
        quo = _primitive(_exact_div(list(cur.coeffs), list(sf.coeffs)))
        if quo[-1] < 0:
            quo = [-x for x in quo]
        cur = IntPolynomial(quo)
    return layers


@dataclass(frozen=True, eq=False)
class SturmChain:
    """Signed remainder chain of the squarefree part of a polynomial."""

    polys: tuple[IntPolynomial, ...]

    def __post_init__(self) -> None:
        # memoized (variations, sign of first entry) per query point
        object.__setattr__(self, "_points", {})

    def _lookup(self, x: Fraction | int) -> tuple[int, int]:
        fx = Fraction(x)
        key = (fx.numerator, fx.denominator)
        points: dict = self._points  # type: ignore[attr-defined]
        hit = points.get(key)
        if hit is None:
            signs = [
                _sign_at(q.coeffs, fx.numerator, fx.denominator) for q in self.polys
            ]
            hit = (_variations(signs), signs[0])
            points[key] = hit
        return hit

    def variations_at(self, x: Fraction | int) -> int:
        """Sign variations at x; zero entries are skipped."""
        return self._lookup(x)[0]

    def vanishes_at(self, x: Fraction | int) -> bool:
        """Does the squarefree part have a root exactly at x?"""
        return self._lookup(x)[1] == 0

    def variations_at_minus_inf(self) -> int:
        return _variations(
            [(1 if q.leading > 0 else -1) * (-1) ** q.degree for q in self.polys]
        )

    def variations_at_plus_inf(self) -> int:
        return _variations([1 if q.leading > 0 else -1 for q in self.polys])

    def count_in(self, lo: Fraction | int, hi: Fraction | int) -> int:
        """Distinct roots of the squarefree part in the half-open (lo, hi]."""
        return self.variations_at(lo) - self.variations_at(hi)


@lru_cache(maxsize=None)
def sturm_chain(p: IntPolynomial) -> SturmChain:
    """Chain whose first entry is squarefree_part(p), second its derivative."""
    first = squarefree_part(p)
    chain = [first]
    if first.degree >= 1:
        chain.append(IntPolynomial(_primitive(list(first.derivative().coeffs))))
        while chain[-1].degree > 0:
            rem = _pseudo_rem(list(chain[-2].coeffs), list(chain[-1].coeffs))
            if not rem:
                raise VerificationError("nonconstant gcd inside a squarefree chain")
            chain.append(IntPolynomial([-x for x in _primitive(rem)]))
    return SturmChain(tuple(chain))


# ---------------------------------------------------------------------------
# counting and isolation


def _split_off_origin(p: IntPolynomial) -> tuple[int, IntPolynomial]:
    if p.is_zero():
        raise ValueError("zero polynomial")
    mult = p.trailing_zero_count()
    return mult, p.divide_by_x_power(mult)


def count_real_roots(p: IntPolynomial) -> int:
    """Real roots of p counted with multiplicity.

    Equals the degree exactly when every root is real, which is the
    certificate the interlacing and factorization code relies on.  The
    origin is read off the trailing zeros; nonzero roots are tallied one
    squarefree layer at a time so an m-fold root contributes m.
    """
    mult, q = _split_off_origin(p)
    total = mult
    for layer in _squarefree_layers(q):
        ch = sturm_chain(layer)
        total += ch.variations_at_minus_inf() - ch.variations_at_plus_inf()
    return total


def count_roots_in(p: IntPolynomial, lo: Fraction | int, hi: Fraction | int) -> int:
    """Distinct real roots of p strictly between lo and hi.

    Roots sitting exactly on either endpoint are excluded; the
    zero-skipping variation convention makes that exact, no nudging.
    """
    lo, hi = Fraction(lo), Fraction(hi)
    if not lo < hi:
        raise ValueError("need lo < hi")
    ch = sturm_chain(p)
    n = ch.count_in(lo, hi)
    if ch.vanishes_at(hi):
        n -= 1
    return n


def _cauchy_power_of_two(sf: IntPolynomial) -> int:
    """A power of two at least 1 + max|c_i| / |lead|, so beyond every root."""
    lead = abs(sf.leading)
    m = max((abs(c) for c in sf.coeffs[:-1]), default=0)
    q = m // lead + 2
    return 1 << (q - 1).bit_length()


def _inward_split(ch: SturmChain, lo: Fraction, hi: Fraction) -> Fraction:
    """A dyadic split point in (lo, hi) that is not a root.

    Starts at the midpoint and steps one dyadic notch toward lo each
    time the candidate lands on a root; a polynomial has only finitely
    many, so this stops.
    """
    step = hi - lo
    while True:
        step = step / 2
        mid = lo + step
        if not ch.vanishes_at(mid):
            return mid


@dataclass(frozen=True)
class RootIsolation:
    """Certified picture of the real roots of one polynomial.

    Each interval is open with dyadic endpoints, contains exactly one
    negative root of the squarefree part, no endpoint is a root, and the
    intervals are pairwise disjoint in increasing order.
    """

    zero_multiplicity: int
    intervals: tuple[tuple[Fraction, Fraction], ...]
    positive_root_count: int

    @property
    def negative_root_count(self) -> int:
        return len(self.intervals)


def isolate_negative_roots(p: IntPolynomial) -> RootIsolation:
    """Certified isolation of the negative roots of p.

    The origin is handled by coefficient inspection and positive roots
    are only counted, not isolated; on these polynomials everything of
    interest happens on the negative axis.
    """
    mult, q = _split_off_origin(p)
    if q.degree == 0:
        return RootIsolation(mult, (), 0)
    ch = sturm_chain(q)
    bound = _cauchy_power_of_two(ch.polys[0])
    v_low = ch.variations_at(-bound)
    v_zero = ch.variations_at(0)
    v_high = ch.variations_at(bound)
    negatives = v_low - v_zero
    positives = v_zero - v_high

    done: list[tuple[Fraction, Fraction]] = []
    work = [(Fraction(-bound), Fraction(0), negatives)]
    while work:
        lo, hi, cnt = work.pop()
        if cnt == 0:
            continue
        if cnt == 1:
            done.append((lo, hi))
            continue
        mid = _inward_split(ch, lo, hi)
        left = ch.count_in(lo, mid)
        work.append((lo, mid, left))
        work.append((mid, hi, cnt - left))
    done.sort()
    return RootIsolation(mult, tuple(done), positives)


# refinement below works on (lo, hi, sign_lo, sign_hi) spans: a single
# simple root strictly inside, both endpoint signs nonzero and opposite
Span = tuple[Fraction, Fraction, int, int]


def _signed_span(sf: IntPolynomial, lo: Fraction, hi: Fraction) -> Span:
    return lo, hi, _sign(sf, lo), _sign(sf, hi)


def _shrink(sf: IntPolynomial, span: Span) -> Span:
    """One bisection step by sign change alone; no chain evaluation."""
    lo, hi, slo, shi = span
    mid = (lo + hi) / 2
    sm = _sign(sf, mid)
    if sm == 0:
        # the root is exactly the dyadic midpoint: pin it in a narrow
        # window whose endpoints flank it with clean signs
        w = (hi - lo) / 8
        while True:
            a, b = mid - w, mid + w
            sa, sb = _sign(sf, a), _sign(sf, b)
            if sa and sb and sa != sb:
                return a, b, sa, sb
            w = w / 2
    if sm == slo:
        return mid, hi, sm, shi
    return lo, mid, slo, sm


def _width_below(sf: IntPolynomial, span: Span, target: Fraction) -> Span:
    while span[1] - span[0] >= target:
        span = _shrink(sf, span)
    return span


# ---------------------------------------------------------------------------
# the interlacing order


@dataclass(frozen=True)
class PrecedesVerdict:
    """Outcome of one f-precedes-g comparison, evidence included.

    failure_reason is None when the relation holds, otherwise one of
    positive_root, not_real_rooted, multiple_negative_root,
    count_mismatch, order_violation.  f_intervals and g_intervals are
    the refined, pairwise disjoint windows the alternation was read
    from; f_roots and g_roots keep the raw isolation certificates.
    """

    holds: bool
    failure_reason: str | None
    f_intervals: tuple[tuple[Fraction, Fraction], ...]
    g_intervals: tuple[tuple[Fraction, Fraction], ...]
    f_roots: RootIsolation
    g_roots: RootIsolation


def _real_rooted_failure(p: IntPolynomial, iso: RootIsolation) -> str | None:
    if iso.positive_root_count > 0:
        return "positive_root"
    if count_real_roots(p) != p.degree:
        return "not_real_rooted"
    _, q = _split_off_origin(p)
    if squarefree_part(q).degree != q.degree:
        # every root is real and none is positive, so a repeat is negative
        return "multiple_negative_root"
    return None


def verify_precedes(f: IntPolynomial, g: IntPolynomial) -> PrecedesVerdict:
    """Certify that the negative roots of g interlace those of f from above.

    Both polynomials must have all roots real, none positive, and simple
    negative roots.  g must have as many negative roots as f or one
    more, and sorted downward from zero the roots must strictly
    alternate g, f, g, f, ...
    """
    if f.is_zero() or g.is_zero():
        raise ValueError("zero polynomials cannot be compared")
    iso_f = isolate_negative_roots(f)
    iso_g = isolate_negative_roots(g)

    for p, iso in ((f, iso_f), (g, iso_g)):
        reason = _real_rooted_failure(p, iso)
        if reason:
            return PrecedesVerdict(
                False, reason, iso_f.intervals, iso_g.intervals, iso_f, iso_g
            )

    nf, ng = len(iso_f.intervals), len(iso_g.intervals)
    if ng not in (nf, nf + 1):
        return PrecedesVerdict(
            False, "count_mismatch", iso_f.intervals, iso_g.intervals, iso_f, iso_g
        )

    # a shared negative root breaks strict alternation outright, and
    # would keep the disjointness refinement below running forever
    _, qf = _split_off_origin(f)
    _, qg = _split_off_origin(g)
    sf_f, sf_g = squarefree_part(qf), squarefree_part(qg)
    common = _poly_gcd(list(sf_f.coeffs), list(sf_g.coeffs))
    if len(common) > 1 and isolate_negative_roots(IntPolynomial(common)).intervals:
        return PrecedesVerdict(
            False, "order_violation", iso_f.intervals, iso_g.intervals, iso_f, iso_g
        )

    fs = [_signed_span(sf_f, lo, hi) for lo, hi in iso_f.intervals]
    gs = [_signed_span(sf_g, lo, hi) for lo, hi in iso_g.intervals]
    while True:
        clash = None
        for i, a in enumerate(fs):
            for j, b in enumerate(gs):
                if a[0] < b[1] and b[0] < a[1]:
                    clash = (i, j)
                    break
            if clash:
                break
        if clash is None:
            break
        i, j = clash
        fs[i] = _shrink(sf_f, fs[i])
        gs[j] = _shrink(sf_g, gs[j])

    f_spans = tuple((lo, hi) for lo, hi, _, _ in fs)
    g_spans = tuple((lo, hi) for lo, hi, _, _ in gs)
    merged = sorted(
        [(span, "f") for span in f_spans] + [(span, "g") for span in g_spans],
        key=lambda item: item[0],
        reverse=True,
    )
    expected = ["g", "f"] * ng
    if [tag for _, tag in merged] != expected[: nf + ng]:
        return PrecedesVerdict(
            False, "order_violation", f_spans, g_spans, iso_f, iso_g
        )
    return PrecedesVerdict(True, None, f_spans, g_spans, iso_f, iso_g)


def verify_interlacing_relations(c: int, n: int) -> list[PrecedesVerdict | None]:
    """The five forest interlacing relations at shape (c, n).

    Slot i holds the verdict for relation i+1.  Relations 2 and 5 only
    exist for n > c; their slots hold None below that.
    """
    from .families import Forest, stirling_polynomial

    if not 1 <= c <= n:
        raise ValueError("need 1 <= c <= n")

    def sig(nn: int, cc: int) -> IntPolynomial:
        return stirling_polynomial(Forest(nn, cc))

    return [
        verify_precedes(sig(c + 1, c), sig(c, c)),
        verify_precedes(sig(n, c), sig(n + 1, c)) if n > c else None,
        verify_precedes(sig(n, c), sig(n + 1, c + 1)),
        verify_precedes(sig(c + 1, c), sig(c + 1, c + 1)),
        verify_precedes(sig(n + 1, c + 1), sig(n + 1, c)) if n > c else None,
    ]


# ---------------------------------------------------------------------------
# ultra log-concavity


@dataclass(frozen=True)
class UlcReport:
    """Cross-multiplied ultra log-concavity check over one sequence."""

    length: int
    strict_from: int
    holds: bool
    first_violation: int | None


def ultra_log_concave(counts, strict_from: int) -> UlcReport:
    """Is a_k / C(n,k) log-concave, strictly so from index strict_from?

    Compared purely by cross-multiplication of
    a_k^2 C(n,k-1) C(n,k+1) against a_{k-1} a_{k+1} C(n,k)^2,
    so no division and no floats anywhere.
    """
    seq = list(counts)
    n = len(seq) - 1
    if n < 0:
        raise ValueError("empty sequence")
    for k in range(1, n):
        lhs = seq[k] * seq[k] * math.comb(n, k - 1) * math.comb(n, k + 1)
        rhs = seq[k - 1] * seq[k + 1] * math.comb(n, k) ** 2
        if lhs < rhs or (k >= strict_from and lhs == rhs):
            return UlcReport(len(seq), strict_from, False, k)
    return UlcReport(len(seq), strict_from, True, None)


# ---------------------------------------------------------------------------
# factorization into independent Bernoulli factors


@dataclass(frozen=True)
class BernoulliDecomposition:
    """p(x)/p(1) as a product of (lambda_i + x) / (1 + lambda_i).

    lambdas holds one entry per root counted with multiplicity: zero
    roots first (lambda = 0, tallied again in zero_count), then the
    negated negative roots in increasing order.  reconstruction_error
    is the largest relative
    deviation between the re-expanded product and the exact normalized
    coefficients (absolute deviation where the exact coefficient is 0).
    """

    lambdas: tuple[float, ...]
    zero_count: int
    reconstruction_error: float


def bernoulli_decomposition(
    p: IntPolynomial, tolerance: float = 1e-12
) -> BernoulliDecomposition:
    """Factor a certified real-rooted polynomial with non-negative coefficients.

    Every negative root gets bisected to an interval narrower than
    ``tolerance``, and narrower still in proportion to its magnitude for
    roots near the origin, which is what the reconstruction accuracy of
    the small coefficients hinges on.
    """
    if p.is_zero():
        raise ValueError("zero polynomial")
    if any(c < 0 for c in p.coeffs):
        raise ValueError("coefficients must be non-negative")
    if not tolerance > 0:
        raise ValueError("tolerance must be positive")
    degree = p.degree
    if count_real_roots(p) != degree:
        raise ValueError("polynomial is not certified real-rooted")

    # non-negative coefficients leave no room for positive roots, so every
    # nonzero root sits on the negative axis; repeated roots come back as
    # one entry per squarefree layer
    mult, q = _split_off_origin(p)
    tol = Fraction(tolerance)
    lambdas = [0.0] * mult
    for layer in _squarefree_layers(q):
        iso = isolate_negative_roots(layer)
        if iso.positive_root_count:
            raise VerificationError(
                "positive root in a polynomial with no sign changes"
            )
        for lo, hi in iso.intervals:
            span = _signed_span(layer, lo, hi)
            while True:
                midscale = abs(span[0] + span[1]) / 2
                target = tol * min(Fraction(1), midscale)
                if span[1] - span[0] < target:
                    break
                span = _shrink(layer, span)
            lambdas.append(float(-(span[0] + span[1]) / 2))
    lambdas[mult:] = sorted(lambdas[mult:])

    total = p.evaluate(1)
    recon = [1.0]
    for lam in lambdas:
        scale = 1.0 / (1.0 + lam)
        low = [c * (lam * scale) for c in recon]
        recon = [0.0] + [c * scale for c in recon]
        for i, c in enumerate(low):
            recon[i] += c
    err = 0.0
    for k in range(degree + 1):
        target = ratio_to_float(p.coefficient(k), total)
        got = recon[k] if k < len(recon) else 0.0
        if target:
            err = max(err, abs(got - target) / abs(target))
        else:
            err = max(err, abs(got))
    return BernoulliDecomposition(tuple(lambdas), mult, err)
