"""Knot expression AST, Alexander polynomials, genus, families, bounds."""

import random
from fractions import Fraction

import pytest

import oracles
from knotobs import laurent
from knotobs.errors import (
    ParseError,
    UnsupportedOrientationError,
    ValidationError,
)
from knotobs.knots import (
    UNKNOT,
    Cable,
    Mirror,
    Sum,
    TorusKnot,
    alexander,
    cable,
    family,
    format_knot,
    genus,
    gsp_bound_of_knot,
    mirror,
    parse_knot,
    sum_of,
    torus,
    wh,
)


class TestAst:
    def test_torus_validation(self):
        with pytest.raises(ValidationError):
            TorusKnot(2, 4)
        with pytest.raises(ValidationError):
            TorusKnot(1, 3)

    def test_cable_validation(self):
        with pytest.raises(ValidationError):
            Cable(UNKNOT, 0, 1)
        with pytest.raises(ValidationError):
            Cable(UNKNOT, 2, 4)

    def test_sum_flattening_and_ordering(self):
        a = sum_of(torus(2, 3), sum_of(torus(2, 5), UNKNOT))
        b = sum_of(torus(2, 5), torus(2, 3))
        assert a == b
        assert isinstance(a, Sum) and len(a.summands) == 2

    def test_mirror_involution_and_distribution(self):
        k = sum_of(torus(2, 3), wh(torus(2, 5)))
        assert mirror(mirror(k)) == k
        m = mirror(k)
        assert isinstance(m, Sum)
        assert all(isinstance(s, Mirror) for s in m.summands)

    def test_unit_cable_collapses(self):
        assert cable(torus(2, 3), 1, 1) == torus(2, 3)
        assert parse_knot("Cable(T(2,3);1,5)") == torus(2, 3)

    def test_unknot_identity(self):
        assert sum_of(UNKNOT, torus(2, 3), UNKNOT) == torus(2, 3)
        assert mirror(UNKNOT) == UNKNOT


class TestGrammar:
    def test_examples(self):
        assert parse_knot("U") == UNKNOT
        assert parse_knot("T(2,3)") == torus(2, 3)
        assert parse_knot("-T(2,3)") == mirror(torus(2, 3))
        assert parse_knot("Wh(T(2,3))") == wh(torus(2, 3))
        assert parse_knot("Cable(Wh(T(2,3));2,3)") == cable(wh(torus(2, 3)), 2, 3)
        assert parse_knot("T(2,3) # -T(2,5)") == sum_of(torus(2, 3), mirror(torus(2, 5)))

    def test_roundtrip_random(self):
        rng = random.Random(4242)
        for _ in range(500):
            k = oracles.random_expression(rng)
            assert parse_knot(format_knot(k)) == k

    def test_rejects_garbage(self):
        for bad in ("", "T(2;3)", "K(2,3)", "T(2,3) #", "Wh()", "T(2,3", "--"):
            with pytest.raises(ParseError):
                parse_knot(bad)


class TestAlexander:
    def test_trefoil(self):
        assert alexander(torus(2, 3)) == laurent.parse_laurent("t^-1 - 1 + t")

    def test_whitehead_double_trivial(self):
        assert alexander(wh(torus(2, 3))) == laurent.ONE

    def test_family_J_is_square(self):
        for n in range(2, 7):
            assert alexander(family("J", n)) == laurent.torus_alexander(n, n + 1) ** 2

    def test_family_Jprime_is_square(self):
        for n in range(2, 6):
            assert alexander(family("Jprime", n)) == laurent.torus_alexander(n, 2 * n - 1) ** 2

    def test_family_L_trivial(self):
        for n in range(2, 7):
            assert alexander(family("L", n)) == laurent.ONE

    def test_cable_formula(self):
        k = cable(torus(2, 3), 2, 5)
        expected = laurent.torus_alexander(2, 3).substitute_power(2) * laurent.torus_alexander(2, 5)
        assert alexander(k) == expected

    def test_unit_pattern_cables(self):
        k = cable(torus(2, 3), 3, 1)
        assert alexander(k) == laurent.torus_alexander(2, 3).substitute_power(3)

    def test_negative_cable_rejected(self):
        with pytest.raises(UnsupportedOrientationError):
            alexander(Cable(torus(2, 3), 2, -3))

    def test_mirror_and_sum_laws_random(self):
        rng = random.Random(77)
        for _ in range(500):
            k1 = oracles.random_expression(rng, depth=2)
            k2 = oracles.random_expression(rng, depth=2)
            assert alexander(mirror(k1)) == alexander(k1)
            assert alexander(sum_of(k1, k2)) == alexander(k1) * alexander(k2)

    def test_symmetric_normalization(self):
        rng = random.Random(78)
        for _ in range(100):
            d = alexander(oracles.random_expression(rng, depth=2))
            assert d.is_palindromic()
            assert d.evaluate(1) in (1, -1)


class TestGenus:
    def test_torus_examples(self):
        assert genus(torus(3, 5)).seifert_genus == 4
        assert genus(torus(2, 3)).seifert_genus == 1

    def test_unknot(self):
        report = genus(UNKNOT)
        assert report.seifert_genus == 0 and report.summand_max_genus == 0

    def test_whitehead(self):
        assert genus(wh(torus(3, 7))).seifert_genus == 1

    def test_family_L(self):
        for n in range(2, 8):
            report = genus(family("L", n))
            assert report.seifert_genus == 2 * n - 1
            assert report.summand_max_genus == n
            assert report.slice_genus_hint == 1
            assert report.slice_genus_source

    def test_cable_needs_positive_q(self):
        with pytest.raises(UnsupportedOrientationError):
            genus(Cable(torus(2, 3), 2, -1))

    def test_breadth_bounded_by_twice_genus(self):
        rng = random.Random(909)
        for _ in range(300):
            k = oracles.random_expression(rng)
            d = alexander(k)
            if d.is_zero:
                continue
            assert d.breadth <= 2 * genus(k).seifert_genus


class TestFamilies:
    def test_J_2_shape(self):
        assert family("J", 2) == parse_knot("Cable(Wh(T(2,3));2,3) # -T(2,3)")

    def test_Jprime_3_shape(self):
        assert family("Jprime", 3) == parse_knot("Cable(Wh(T(2,3));3,5) # -T(3,5)")

    def test_L_2_collapses_inner_cable(self):
        assert family("L", 2) == parse_knot("Cable(Wh(T(2,3));2,1) # -Wh(T(2,3))")

    def test_range_error(self):
        with pytest.raises(ValidationError):
            family("J", 1)
        with pytest.raises(ValidationError):
            family("X", 3)

    def test_fox_milnor_consistent_with_topological_sliceness(self):
        for n in range(2, 7):
            assert laurent.fox_milnor(alexander(family("J", n))).passes


class TestGspBounds:
    def test_torus_3_5_equality(self):
        assert gsp_bound_of_knot(torus(3, 5)) == (Fraction(4), Fraction(4))

    def test_slice_sum(self):
        k = sum_of(torus(2, 3), mirror(torus(2, 3)))
        assert gsp_bound_of_knot(k) == (Fraction(0), Fraction(1))

    def test_unknot(self):
        assert gsp_bound_of_knot(UNKNOT) == (Fraction(0), Fraction(0))

    def test_lower_le_upper_on_families(self):
        for name in ("J", "Jprime", "L"):
            for n in range(2, 13):
                lower, upper = gsp_bound_of_knot(family(name, n))
                assert lower <= upper

    def test_prime_torus_equality(self):
        for p, q in oracles.prime_pairs(35):
            lower, upper = gsp_bound_of_knot(torus(p, q))
            assert lower == upper == Fraction((p - 1) * (q - 1), 2)
