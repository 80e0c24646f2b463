"""Forest and cycle partition counts, polynomials, and moment formulas.

The frozen vectors here were produced by exhaustive enumeration of the
corresponding explicit graphs (see test_oracle.py for the enumerator
itself being exercised against the same values).
"""

from fractions import Fraction

import pytest

from graphstirling.combinatorics import bell, stirling_row
from graphstirling.families import (
    Cycle,
    Forest,
    bell_moment_sum,
    chi,
    chromatic_from_stirling,
    chromatic_polynomial,
    cycle_count_k3,
    cycle_count_k4,
    empty_graph,
    graph_bell,
    label,
    moments,
    pascal_identity_check,
    path,
    stirling_polynomial,
    stirling_polynomial_via_operator,
    stirling_vector,
    stirling_via_chromatic,
)
from graphstirling.polynomials import IntPolynomial


def test_family_validation():
    with pytest.raises(ValueError):
        Forest(3, 4)
    with pytest.raises(ValueError):
        Forest(3, 0)
    with pytest.raises(ValueError):
        Forest(-1, 1)
    with pytest.raises(ValueError):
        Cycle(1)
    Forest(0, 0)
    Cycle(2)


def test_labels():
    assert label(Cycle(7)) == "cycle-7"
    assert label(Forest(5, 1)) == "path-5"
    assert label(Forest(5, 5)) == "empty-5"
    assert label(Forest(5, 2)) == "forest-5-2"
    assert label(empty_graph(0)) == "empty-0"
    assert path(4) == Forest(4, 1)
    assert empty_graph(4) == Forest(4, 4)


def test_chi():
    assert chi(Forest(0, 0)) == 0
    assert chi(empty_graph(5)) == 1
    assert chi(path(5)) == 2
    assert chi(Forest(6, 3)) == 2
    assert chi(Cycle(2)) == 2
    assert chi(Cycle(6)) == 2
    assert chi(Cycle(7)) == 3


FROZEN_VECTORS = {
    # enumerated exhaustively; empty graphs are plain Stirling rows
    Forest(4, 4): (0, 1, 7, 6, 1),
    Forest(3, 2): (0, 0, 2, 1),
    Forest(3, 1): (0, 0, 1, 1),
    Forest(4, 1): (0, 0, 1, 3, 1),
    Cycle(2): (0, 0, 1),
    Cycle(3): (0, 0, 0, 1),
    Cycle(4): (0, 0, 1, 2, 1),
    Cycle(5): (0, 0, 0, 5, 5, 1),
    Cycle(6): (0, 0, 1, 10, 20, 9, 1),
}


def test_frozen_vectors():
    for g, want in FROZEN_VECTORS.items():
        assert stirling_vector(g).counts == want, g


def test_empty_graph_is_stirling_row():
    for n in range(0, 20):
        assert stirling_vector(empty_graph(n)).counts == tuple(stirling_row(n))


def test_vector_shape():
    for g in [Forest(7, 3), Cycle(9), path(6)]:
        counts = stirling_vector(g).counts
        assert len(counts) == g.n + 1
        assert counts[g.n] == 1  # all-singletons partition
        assert all(counts[k] == 0 for k in range(chi(g)))
        assert counts[chi(g)] > 0


def test_graph_bell_spot():
    assert graph_bell(Cycle(4)) == 4
    assert graph_bell(Cycle(3)) == 1
    assert graph_bell(Forest(3, 2)) == 3
    for n in range(0, 15):
        assert graph_bell(empty_graph(n)) == bell(n)


def test_stirling_polynomial_matches_vector():
    g = Cycle(5)
    assert stirling_polynomial(g) == IntPolynomial(list(stirling_vector(g).counts))
    assert stirling_polynomial(Forest(0, 0)) == IntPolynomial([1])


def test_operator_route_agrees():
    for n in range(1, 14):
        for c in range(1, n + 1):
            g = Forest(n, c)
            assert stirling_polynomial_via_operator(g) == stirling_polynomial(g), g
    for n in range(2, 14):
        g = Cycle(n)
        assert stirling_polynomial_via_operator(g) == stirling_polynomial(g), g


def test_pascal_identity():
    for n in range(1, 14):
        for c in range(1, n + 1):
            assert pascal_identity_check(n, c), (n, c)


def test_chromatic_polynomials():
    # x(x-1)^3 for the path, (x-1)^4 + (x-1) for the square
    assert chromatic_polynomial(path(4)) == IntPolynomial([0, -1, 3, -3, 1])
    assert chromatic_polynomial(Cycle(4)) == IntPolynomial([0, -3, 6, -4, 1])
    assert chromatic_polynomial(empty_graph(3)) == IntPolynomial([0, 0, 0, 1])
    assert chromatic_polynomial(Cycle(3)) == IntPolynomial([0, 2, -3, 1])


def test_chromatic_counts_proper_colorings():
    # evaluation at t must count proper colorings, here against k3/k4 logic:
    # a cycle interpreted directly
    for n in range(2, 9):
        p = chromatic_polynomial(Cycle(n))
        assert p.evaluate(2) == (2 if n % 2 == 0 else 0)
        assert p.evaluate(1) == 0
    for n in range(1, 9):
        assert chromatic_polynomial(empty_graph(n)).evaluate(3) == 3**n
        assert chromatic_polynomial(path(n)).evaluate(3) == 3 * 2 ** (n - 1)


def test_stirling_via_chromatic_agrees_with_vector():
    for g in [Forest(6, 2), Forest(5, 5), path(7), Cycle(6), Cycle(7)]:
        counts = stirling_vector(g).counts
        for k in range(0, g.n + 1):
            assert stirling_via_chromatic(g, k) == counts[k], (g, k)


def test_stirling_via_chromatic_path4_spot():
    # the path on 4 vertices: one 2-block partition, three 3-block ones
    assert stirling_via_chromatic(Forest(4, 1), 2) == 1
    assert stirling_via_chromatic(Forest(4, 1), 3) == 3


def test_chromatic_from_stirling_round_trip():
    for g in [Forest(8, 3), path(8), Cycle(8), Cycle(9), empty_graph(6)]:
        assert chromatic_from_stirling(g) == chromatic_polynomial(g), g


def test_cycle_closed_forms():
    for n in range(2, 40):
        counts = stirling_vector(Cycle(n)).counts
        k3 = counts[3] if n >= 3 else 0
        k4 = counts[4] if n >= 4 else 0
        assert cycle_count_k3(n) == k3, n
        assert cycle_count_k4(n) == k4, n
    assert cycle_count_k3(3) == 1
    assert cycle_count_k3(4) == 2
    assert cycle_count_k4(4) == 1
    with pytest.raises(ValueError):
        cycle_count_k3(1)


def test_bell_moment_sum_matches_direct_sums():
    for g in [Forest(7, 2), Forest(6, 6), path(9), Cycle(7), Cycle(10)]:
        counts = stirling_vector(g).counts
        assert bell_moment_sum(g, 0) == sum(counts)
        assert bell_moment_sum(g, 1) == sum(k * a for k, a in enumerate(counts))
        # the twice-shifted sum picks up one extra copy of the total
        assert bell_moment_sum(g, 2) == sum(
            (k * k + 1) * a for k, a in enumerate(counts)
        )


def test_moments_spot_values():
    m = moments(Forest(3, 3))
    assert m.mean_exact == 2
    assert m.variance_exact == Fraction(2, 5)
    m = moments(Cycle(4))
    assert m.mean_exact == 3
    assert m.variance_exact == Fraction(1, 2)
    m = moments(Cycle(3))
    assert m.variance_exact == 0


def test_moment_routes_agree():
    for n in range(1, 25):
        for c in range(1, n + 1):
            m = moments(Forest(n, c))
            assert m.mean_exact == m.mean_formula, (n, c)
            assert m.variance_exact == m.variance_formula, (n, c)
    for n in range(2, 25):
        m = moments(Cycle(n))
        assert m.mean_exact == m.mean_formula, n
        assert m.variance_exact == m.variance_formula, n


def test_empty_graph_mean_is_bell_ratio_minus_one():
    for n in range(1, 20):
        m = moments(empty_graph(n))
        assert m.mean_exact == Fraction(bell(n + 1), bell(n)) - 1, n


def test_variance_positive_for_nondegenerate_sizes():
    for n in range(3, 20):
        for c in range(1, n + 1):
            assert moments(Forest(n, c)).variance_exact > 0, (n, c)
    # the triangle is rigid (single partition shape per k), larger cycles move
    for n in range(4, 20):
        assert moments(Cycle(n)).variance_exact > 0, n


def test_stirling_via_chromatic_rejects_negative_k():
    with pytest.raises(ValueError):
        stirling_via_chromatic(Cycle(4), -1)
