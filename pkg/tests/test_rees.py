"""Rees presentations, grading bookkeeping, and component extraction."""

import random

import pytest

from conftest import gb_text, ideal, ring
from reestau.errors import InhomogeneousGeneratorError, ReestauError
from reestau.ideals import Ideal
from reestau.rees import (
    graded_component,
    homogenize_check,
    rees_data,
    rees_presentation,
)


class TestPresentation:
    def test_principal(self):
        R = ring(5, ("x",))
        pres = rees_presentation(ideal("x", R), "T")
        assert pres.ring.names == ("x", "y1", "u")
        assert gb_text(pres.defining) == "y1*u + 4*x"
        assert pres.degrees == (0, 1, -1)

    def test_maximal_ideal_T(self, R5):
        pres = rees_presentation(ideal("x, y", R5), "T")
        assert gb_text(pres.defining) == "y*y1 + 4*x*y2, y1*u + 4*x, y2*u + 4*y"

    def test_maximal_ideal_S(self, R5):
        pres = rees_presentation(ideal("x, y", R5), "S")
        assert gb_text(pres.defining) == "y*y1 + 4*x*y2"
        assert pres.degrees == (0, 0, 1, 1)

    def test_substitution_soundness(self, R5):
        rd = rees_data(ideal("x^2, x*y, y^2", R5))
        for variant in ("S", "T"):
            pres = rd.presentation(variant)
            for g in pres.defining.groebner_basis():
                assert rd.psi(g, variant).is_zero()
                assert pres.is_homogeneous(g)

    def test_principal_is_hypersurface(self):
        for p in (2, 5):
            R = ring(p)
            for src in ("x", "x^2 + y^3", "x*y"):
                pres = rees_presentation(ideal(src, R), "T")
                assert len(pres.defining.groebner_basis()) == 1

    def test_rejects_zero_ideal(self, R5):
        with pytest.raises(ReestauError):
            rees_presentation(Ideal(R5, ()), "T")

    def test_generator_cap(self, R5):
        gens = [R5.parse(f"x^{i} + y^{i}") for i in range(1, 8)]
        with pytest.raises(ReestauError):
            rees_presentation(Ideal(R5, gens), "T")

    def test_secondary_grading_recorded(self, R5):
        pres = rees_presentation(ideal("x^2, y^3", R5), "T")
        assert pres.secondary == (1, 1, 2, 3, 0)


class TestGradedComponent:
    def test_u_component_examples(self, R5):
        rd = rees_data(ideal("x, y", R5))
        u = rd.T.ring.var("u")
        assert gb_text(graded_component([u], 0, rd)) == "x, y"
        assert gb_text(graded_component([u], -1, rd)) == "1"
        assert gb_text(graded_component([u], 1, rd)) == "x^2, x*y, y^2"

    def test_component_nesting_u_powers(self, R5):
        rd = rees_data(ideal("x, y", R5))
        u = rd.T.ring.var("u")
        for k in (1, 2):
            comps = [graded_component([u**k], n, rd) for n in range(-2, 3)]
            for big, small in zip(comps, comps[1:]):
                assert big.contains_ideal(small)

    def test_psi_consistency_random(self, R5):
        """psi of a homogeneous element of degree d is its t^d coefficient
        under the independent substitution y_j -> f_j t, u -> s, st = 1."""
        rd = rees_data(ideal("x, y", R5))
        P = rd.T.ring
        rng = random.Random(3)
        E = ring(5, ("x", "y", "t", "s"))
        ex, ey, et, es = E.gens()
        rel = Ideal(E, (es * et - E.one(),))
        for _ in range(200):
            exps = tuple(rng.randrange(3) for _ in range(P.nvars))
            g = P.monomial(exps, rng.randrange(1, 5))
            d = rd.T.degree_of(g)
            img = rd.psi(g).map_to(E)
            full = g.substitute([ex, ey, ex * et, ey * et, es])
            if d >= 0:
                diff = full - img * et**d
            else:
                diff = full - img * es ** (-d)
            assert rel.normal_form(diff).is_zero()

    def test_component_of_S_variant_has_no_negatives(self, R5):
        rd = rees_data(ideal("x, y", R5))
        with pytest.raises(ReestauError):
            graded_component([rd.S.ring.one()], -1, rd, variant="S")


class TestHomogenizeCheck:
    def test_already_homogeneous(self, R5):
        rd = rees_data(ideal("x", R5))
        pres = rd.T
        g = pres.ring.parse("y1*u - x")
        assert homogenize_check([g], pres) == [g]

    def test_split_when_parts_inside(self, R5):
        rd = rees_data(ideal("x", R5))
        pres = rd.T
        P = pres.ring
        y1, u = P.var("y1"), P.var("u")
        # (y1 + u) with both parts present: parts lie in (y1, u) + J
        parts = homogenize_check([y1 + u, y1, u], pres)
        assert y1 in parts and u in parts and len(parts) >= 3

    def test_error_when_unresolvable(self, R5):
        rd = rees_data(ideal("x", R5))
        pres = rd.T
        P = pres.ring
        with pytest.raises(InhomogeneousGeneratorError):
            homogenize_check([P.var("y1") + P.one()], pres)

    def test_monomial_generator_passes(self, R5):
        rd = rees_data(ideal("x", R5))
        P = rd.T.ring
        g = P.parse("x*y1")
        assert homogenize_check([g], rd.T) == [g]
