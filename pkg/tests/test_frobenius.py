"""Bracket powers, Frobenius roots, and nu values.

The monomial root rule is floor(a/q) componentwise: that is what "smallest
J with I inside J^[q]" forces (x^(2p-1) = (x^1)^p * x^(p-1) already lies in
(x)^[p]), and it is the rule the adjunction and root-of-bracket laws pin
down.
"""

import random

import pytest

from conftest import gb_text, ideal, ring
from reestau.errors import NonFiniteNuError, ReestauError
from reestau.frobenius import (
    FrobeniusLevel,
    bracket_contains,
    bracket_power,
    frobenius_root,
    nu_value,
)
from reestau.ideals import Ideal
from reestau.rees import rees_presentation
from test_poly import random_poly


class TestBracket:
    def test_generators_power(self, R5):
        assert gb_text(bracket_power(ideal("x, y", R5), 5)) == "x^5, y^5"

    def test_char2_sum(self):
        R = ring(2)
        B = bracket_power(ideal("x + y", R), 2)
        assert gb_text(B) == "x^2 + y^2"

    def test_zero(self, R5):
        assert bracket_power(Ideal(R5, ()), 5).is_zero()

    def test_rejects_non_power(self, R5):
        with pytest.raises(ReestauError):
            bracket_power(ideal("x", R5), 6)
        with pytest.raises(ReestauError):
            bracket_power(ideal("x", R5), 4)

    def test_well_defined_on_other_generators(self, R5):
        # same ideal, different generators -> same bracket (flatness)
        I = ideal("x, y", R5)
        J = ideal("x + y, y, x - y", R5)
        assert I == J
        assert bracket_power(I, 25) == bracket_power(J, 25)


class TestRoot:
    def test_exact_power(self, R5):
        assert gb_text(frobenius_root(ideal("x^5", R5), 5)) == "x"

    def test_floor_rule(self, R5):
        # x^(2p-1) = (x)^p * x^(p-1): the smallest J with x^9 in J^[5] is (x)
        assert gb_text(frobenius_root(ideal("x^9", R5), 5)) == "x"
        assert ideal("x", R5) == frobenius_root(ideal("x^9", R5), 5)

    def test_decomposition_example_char2(self):
        R = ring(2)
        g = ideal("x^3*y^2 + x*y^4", R)
        assert gb_text(frobenius_root(g, 2)) == "x*y + y^2"

    def test_monomial_rule_random(self):
        R = ring(3, ("x", "y", "z"))
        rng = random.Random(17)
        for _ in range(300):
            exps = tuple(rng.randrange(30) for _ in range(3))
            q = 3 ** rng.randrange(1, 4)
            root = frobenius_root(Ideal(R, (R.monomial(exps),)), q)
            assert gb_text(root) == gb_text(
                Ideal(R, (R.monomial(tuple(e // q for e in exps)),))
            )

    def test_adjunction_random(self):
        """I in K^[q] <=> root(I, q) in K, 1000 randomized cases."""
        R = ring(3)
        rng = random.Random(23)
        for _ in range(1000):
            I = Ideal(R, [random_poly(rng, R, 2, 6) for _ in range(2)])
            K = Ideal(R, [random_poly(rng, R, 2, 2) for _ in range(2)])
            q = 3 ** rng.randrange(1, 3)
            lhs = bracket_power(K, q).contains_ideal(I)
            rhs = K.contains_ideal(frobenius_root(I, q))
            assert lhs == rhs

    def test_root_of_bracket_identity(self):
        R = ring(5, ("x", "y"))
        rng = random.Random(29)
        for _ in range(300):
            I = Ideal(R, [random_poly(rng, R, 3, 4) for _ in range(2)])
            q = 5 ** rng.randrange(1, 3)
            assert frobenius_root(bracket_power(I, q), q) == I

    def test_additivity(self, R5):
        rng = random.Random(37)
        for _ in range(200):
            I = Ideal(R5, [random_poly(rng, R5, 2, 6)])
            J = Ideal(R5, [random_poly(rng, R5, 2, 6)])
            assert frobenius_root(I + J, 5) == frobenius_root(I, 5) + frobenius_root(J, 5)

    def test_minimality_contract(self, R5):
        rng = random.Random(41)
        for _ in range(100):
            I = Ideal(R5, [random_poly(rng, R5, 3, 8) for _ in range(2)])
            q = 5
            J = frobenius_root(I, q)
            assert bracket_power(J, q).contains_ideal(I)

    def test_grading_preservation_on_rees_example(self):
        # roots of ideals homogeneous for the Rees grading stay homogeneous
        R = ring(5)
        pres = rees_presentation(ideal("x, y", R), "T")
        J = pres.defining
        for q in (5, 25):
            root = frobenius_root(bracket_power(J, q), q)
            for g in root.gens:
                assert pres.is_homogeneous(g)

    def test_bracket_contains_shortcut(self, R5):
        rng = random.Random(43)
        for _ in range(200):
            K = Ideal(R5, [random_poly(rng, R5, 2, 3) for _ in range(2)])
            f = random_poly(rng, R5, 3, 8)
            assert bracket_contains(K, 5, f) == bracket_power(K, 5).contains(f)


class TestNu:
    def test_principal_power(self, R5):
        assert nu_value(ideal("x", R5), ideal("x", R5), 5) == 4
        assert nu_value(ideal("x", R5), ideal("x", R5), 25) == 24

    def test_cusp_values(self):
        """The criterion values nu(5) = 3 and nu(7) = 5 for x^2 + y^3."""
        for p, expected in ((5, 3), (7, 5)):
            R = ring(p)
            assert nu_value(ideal("x^2 + y^3", R), ideal("x, y", R), p) == expected

    def test_cusp_direct_expansion_oracle(self):
        """Brute force: expand f^r and drop monomials with an exponent >= q."""
        for p, expected in ((5, 3), (7, 5)):
            R = ring(p)
            f = R.parse("x^2 + y^3")
            q = p
            last_surviving = 0
            for r in range(1, 3 * q):
                fr = f**r
                survives = any(
                    all(e < q for e in exps) for exps in fr.monomials()
                )
                if survives:
                    last_surviving = r
            assert last_surviving == expected

    def test_maximal_ideal_pigeonhole(self):
        for p in (2, 3, 5, 7):
            R = ring(p)
            m = ideal("x, y", R)
            assert nu_value(m, m, p) == 2 * (p - 1)

    def test_zero_when_contained(self, R5):
        assert nu_value(ideal("x^5", R5), ideal("x", R5), 5) == 0

    def test_non_finite_error(self, R5):
        with pytest.raises(NonFiniteNuError):
            nu_value(ideal("x + 1", R5), ideal("x, y", R5), 5)

    def test_monotonicity_chain_inequality(self):
        """nu(qp)/(qp) >= nu(q)/q - 1/q for principal ideals."""
        from fractions import Fraction

        for p in (5, 7):
            R = ring(p)
            f = ideal("x^2 + y^3", R)
            m = ideal("x, y", R)
            nu1 = nu_value(f, m, p)
            nu2 = nu_value(f, m, p * p)
            assert Fraction(nu2, p * p) >= Fraction(nu1, p) - Fraction(1, p)


def test_frobenius_level():
    lv = FrobeniusLevel(5, 3)
    assert lv.q == 125
    with pytest.raises(ReestauError):
        FrobeniusLevel(5, 0)
