"""Sturm chains, isolation, interlacing, ULC, and the Bernoulli factoring."""

import math
import random
from fractions import Fraction

import pytest

from graphstirling.combinatorics import ratio_to_float
from graphstirling.families import (
    Cycle,
    Forest,
    empty_graph,
    path,
    stirling_polynomial,
    stirling_vector,
)
from graphstirling.polynomials import IntPolynomial
from graphstirling.realroots import (
    bernoulli_decomposition,
    count_real_roots,
    count_roots_in,
    isolate_negative_roots,
    squarefree_part,
    sturm_chain,
    ultra_log_concave,
    verify_interlacing_relations,
    verify_precedes,
)

P = IntPolynomial


def poly_from_roots(zero_mult, int_roots, lead=1, complex_pairs=0):
    """lead * x^zero_mult * prod (x - r) * optional (x^2 + x + 1) factors."""
    p = P([lead]).shifted_up(zero_mult)
    for r in int_roots:
        p = p * P([-r, 1])
    for _ in range(complex_pairs):
        p = p * P([1, 1, 1])
    return p


def test_squarefree_part_spot():
    assert squarefree_part(P([0, 0, 1])) == P([0, 1])
    assert squarefree_part(P([-1, 0, 1])) == P([-1, 0, 1])
    assert squarefree_part(P([0, 1, 2, 1])) == P([0, 1, 1])  # x(x+1)^2
    assert squarefree_part(P([7])) == P([1])
    assert squarefree_part(P([-3, 3])) == P([-1, 1])
    with pytest.raises(ValueError):
        squarefree_part(P([]))


def test_sturm_chain_shape():
    ch = sturm_chain(P([-1, 0, 1]))
    assert ch.polys[0] == P([-1, 0, 1])
    assert ch.polys[1] == P([0, 1])  # derivative 2x, content removed
    assert ch.polys[2].degree == 0
    assert ch.polys[2].leading > 0
    with pytest.raises(ValueError):
        sturm_chain(P([]))


def test_sturm_chain_no_real_roots():
    ch = sturm_chain(P([1, 0, 1]))
    assert ch.variations_at_minus_inf() == ch.variations_at_plus_inf()


def test_count_real_roots_spot():
    assert count_real_roots(P([1, 0, 1])) == 0
    assert count_real_roots(P([-1, 0, 1])) == 2
    assert count_real_roots(P([0, 1, 3, 1])) == 3  # x(x^2 + 3x + 1)
    assert count_real_roots(P([5])) == 0
    # multiplicities count: x^2, (x+1)^2, x^2(x+1)^2
    assert count_real_roots(P([0, 0, 1])) == 2
    assert count_real_roots(P([1, 2, 1])) == 2
    assert count_real_roots(P([0, 0, 1, 2, 1])) == 4
    with pytest.raises(ValueError):
        count_real_roots(P([]))


def test_count_roots_in_excludes_endpoints():
    p = P([-1, 0, 1])  # roots -1 and 1
    assert count_roots_in(p, -1, 1) == 0
    assert count_roots_in(p, -2, 1) == 1
    assert count_roots_in(p, -2, 2) == 2
    assert count_roots_in(p, Fraction(-3, 2), Fraction(1, 2)) == 1
    with pytest.raises(ValueError):
        count_roots_in(p, 1, 1)


def test_count_real_roots_random_constructions():
    rng = random.Random(4022)
    for _ in range(120):
        zero_mult = rng.randrange(0, 3)
        negs = rng.sample(range(-30, 0), rng.randrange(0, 4))
        poss = rng.sample(range(1, 20), rng.randrange(0, 3))
        pairs = rng.randrange(0, 2)
        p = poly_from_roots(zero_mult, negs + poss, rng.randrange(1, 4), pairs)
        assert count_real_roots(p) == zero_mult + len(negs) + len(poss), p
        # squaring one linear factor adds one more counted root
        if negs:
            q = p * P([-negs[0], 1])
            assert count_real_roots(q) == zero_mult + len(negs) + len(poss) + 1


def test_isolation_certificate_random():
    rng = random.Random(90125)
    for _ in range(120):
        zero_mult = rng.randrange(0, 3)
        negs = sorted(rng.sample(range(-25, 0), rng.randrange(0, 5)))
        poss = rng.sample(range(1, 12), rng.randrange(0, 3))
        p = poly_from_roots(zero_mult, negs + poss, 1, rng.randrange(0, 2))
        iso = isolate_negative_roots(p)
        assert iso.zero_multiplicity == zero_mult
        assert iso.positive_root_count == len(poss)
        assert iso.negative_root_count == len(negs)
        assert (
            iso.zero_multiplicity + len(iso.intervals) + iso.positive_root_count
            == count_real_roots(p)
        )
        # each interval pins exactly its own root, intervals stay ordered
        for (lo, hi), root in zip(iso.intervals, negs):
            assert lo < root < hi, (p, root)
            assert count_roots_in(p, lo, hi) == 1
        for (_, b), (c, _) in zip(iso.intervals, iso.intervals[1:]):
            assert b <= c


def test_isolation_spot():
    iso = isolate_negative_roots(P([0, 0, 2, 1]))  # x^2 (x + 2)
    assert iso.zero_multiplicity == 2
    assert iso.positive_root_count == 0
    assert len(iso.intervals) == 1
    lo, hi = iso.intervals[0]
    assert lo < -2 < hi
    iso = isolate_negative_roots(P([1, 0, 1]))
    assert iso == isolate_negative_roots(P([1, 0, 1]))
    assert iso.zero_multiplicity == 0 and not iso.intervals
    assert iso.positive_root_count == 0


def test_verify_precedes_spot():
    # x^3 + 2x^2 against x^2 + x: the single roots -2 and -1 alternate
    v = verify_precedes(P([0, 0, 2, 1]), P([0, 1, 1]))
    assert v.holds and v.failure_reason is None
    assert len(v.f_intervals) == 1 and len(v.g_intervals) == 1
    assert v.f_roots.zero_multiplicity == 2
    assert v.g_roots.negative_root_count == 1
    # vacuous: no negative roots on either side
    assert verify_precedes(P([0, 0, 1]), P([0, 1])).holds
    # equal-degree pair with equal counts
    assert verify_precedes(P([0, 0, 1]), P([0, 0, 1, 1])).holds


def test_verify_precedes_failures():
    assert verify_precedes(P([-1, 1]), P([0, 1])).failure_reason == "positive_root"
    assert verify_precedes(P([1, 1, 1]), P([0, 1])).failure_reason == "not_real_rooted"
    assert (
        verify_precedes(P([1, 2, 1]), P([0, 1, 1])).failure_reason
        == "multiple_negative_root"
    )
    assert verify_precedes(P([2, 3, 1]), P([0, 1])).failure_reason == "count_mismatch"
    # shared root at -1
    assert verify_precedes(P([1, 1]), P([0, 1, 1])).failure_reason == "order_violation"
    # roots present but on the wrong sides: f = (x+1), g = x(x+2)
    assert verify_precedes(P([1, 1]), P([0, 2, 1])).failure_reason == "order_violation"
    with pytest.raises(ValueError):
        verify_precedes(P([]), P([0, 1]))


def test_verify_precedes_random_interlaced():
    rng = random.Random(777)
    for _ in range(60):
        k = rng.randrange(1, 5)
        # 2k+1 strictly decreasing negatives; g takes the odd positions
        points = sorted(rng.sample(range(-60, 0), 2 * k + 1), reverse=True)
        g_roots = points[0::2]
        f_roots = points[1::2]
        zm = rng.randrange(0, 3)
        f = poly_from_roots(zm, f_roots)
        g = poly_from_roots(zm, g_roots)
        v = verify_precedes(f, g)
        assert v.holds, (f_roots, g_roots, v.failure_reason)
        # swapping the roles breaks the order
        assert verify_precedes(g, f).failure_reason in (
            "count_mismatch",
            "order_violation",
        )


def test_interlacing_relations_shapes():
    out = verify_interlacing_relations(1, 1)
    assert out[1] is None and out[4] is None
    assert out[0].holds and out[2].holds and out[3].holds
    out = verify_interlacing_relations(1, 2)
    assert out[1] is not None and out[1].holds
    out = verify_interlacing_relations(2, 3)
    assert all(v.holds for v in out if v is not None)
    with pytest.raises(ValueError):
        verify_interlacing_relations(3, 2)
    with pytest.raises(ValueError):
        verify_interlacing_relations(0, 1)


def test_ultra_log_concave_spot():
    r = ultra_log_concave([1, 2, 1], 3)
    assert r.holds and r.first_violation is None
    r = ultra_log_concave([1, 1, 1], 3)
    assert not r.holds and r.first_violation == 1
    r = ultra_log_concave(stirling_vector(Cycle(5)).counts, 3)
    assert r.holds
    with pytest.raises(ValueError):
        ultra_log_concave([], 0)


def test_ultra_log_concave_strictness_boundary():
    # binomial rows sit exactly on the equality case everywhere
    row = [math.comb(6, k) for k in range(7)]
    assert ultra_log_concave(row, 7).holds
    r = ultra_log_concave(row, 3)
    assert not r.holds and r.first_violation == 3


def test_ultra_log_concave_products_of_bernoulli_factors():
    rng = random.Random(2468)
    for _ in range(60):
        p = P([1])
        for _ in range(rng.randrange(1, 7)):
            p = p * P([rng.randrange(0, 5), 1])
        counts = [p.coefficient(k) for k in range(p.degree + 1)]
        # real-rooted with non-negative coefficients: never a violation
        assert ultra_log_concave(counts, len(counts)).holds, counts


def test_bernoulli_decomposition_spot():
    b = bernoulli_decomposition(P([0, 0, 1]))
    assert b.lambdas == (0.0, 0.0)
    assert b.zero_count == 2
    assert b.reconstruction_error == 0.0
    b = bernoulli_decomposition(P([0, 1, 1]))
    assert b.zero_count == 1
    assert b.lambdas[0] == 0.0 and abs(b.lambdas[1] - 1.0) < 1e-12
    assert b.reconstruction_error < 1e-12
    b = bernoulli_decomposition(P([42]))
    assert b.lambdas == () and b.reconstruction_error == 0.0


def test_bernoulli_decomposition_recovers_integer_roots():
    rng = random.Random(60901)
    for _ in range(40):
        zero_mult = rng.randrange(0, 3)
        negs = sorted(rng.sample(range(-40, 0), rng.randrange(1, 5)), reverse=True)
        p = poly_from_roots(zero_mult, negs)
        b = bernoulli_decomposition(p)
        assert b.zero_count == zero_mult
        got = b.lambdas[zero_mult:]
        want = [-r for r in negs]
        assert len(got) == len(want)
        for lam, w in zip(got, want):
            assert abs(lam - w) <= 1e-11 * w, (negs, got)
        assert b.reconstruction_error < 1e-9


def test_bernoulli_decomposition_repeated_roots():
    # x^2 (x+1)^2: all four roots real, the -1 appears twice
    b = bernoulli_decomposition(P([0, 0, 1, 2, 1]))
    assert b.zero_count == 2
    assert len(b.lambdas) == 4
    assert abs(b.lambdas[2] - 1.0) < 1e-9 and abs(b.lambdas[3] - 1.0) < 1e-9
    assert b.reconstruction_error < 1e-9


def test_bernoulli_decomposition_mean_identity():
    # sum of factor success probabilities equals the distribution mean
    for g in [empty_graph(12), path(17), Cycle(18), Forest(14, 5)]:
        p = stirling_polynomial(g)
        b = bernoulli_decomposition(p)
        lam_mean = sum(1.0 / (1.0 + lam) for lam in b.lambdas)
        exact = ratio_to_float(p.derivative().evaluate(1), p.evaluate(1))
        assert abs(lam_mean - exact) < 1e-6, g


def test_bernoulli_decomposition_rejections():
    with pytest.raises(ValueError):
        bernoulli_decomposition(P([-1, 1]))  # negative coefficient
    with pytest.raises(ValueError):
        bernoulli_decomposition(P([1, 0, 1]))  # complex roots
    with pytest.raises(ValueError):
        bernoulli_decomposition(P([1, 1, 1]))
    with pytest.raises(ValueError):
        bernoulli_decomposition(P([]))
    with pytest.raises(ValueError):
        bernoulli_decomposition(P([0, 1]), tolerance=0.0)


def test_stirling_polynomial_roots_all_real():
    for g in [empty_graph(9), path(11), Cycle(11), Cycle(12), Forest(9, 4)]:
        p = stirling_polynomial(g)
        assert count_real_roots(p) == g.n, g


def test_known_root_locations_for_small_sigma():
    # sigma of the 3-vertex empty graph: x(x^2 + 3x + 1), roots (-3 +- sqrt5)/2
    iso = isolate_negative_roots(P([0, 1, 3, 1]))
    assert iso.zero_multiplicity == 1
    lo_root = Fraction(-3) / 2 - Fraction(1118034, 1000000)  # approx -2.618
    hi_root = Fraction(-3) / 2 + Fraction(1118034, 1000000)  # approx -0.382
    (a1, b1), (a2, b2) = iso.intervals
    assert a1 < lo_root < b1
    assert a2 < hi_root < b2
