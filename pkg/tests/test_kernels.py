"""Pure vs compiled kernel parity: results must be bit-identical."""

import random

import pytest

from reestau.kernels import _pure

try:
    from reestau.kernels import _speed
except ImportError:  # pragma: no cover
    _speed = None

from conftest import ring
from test_poly import random_poly

needs_speed = pytest.mark.skipif(_speed is None, reason="compiled kernel not built")


def random_terms(rng, R, max_terms=6, max_exp=5):
    return random_poly(rng, R, max_terms, max_exp).terms


@needs_speed
def test_elementwise_parity():
    R = ring(7, ("x", "y", "z"))
    rng = random.Random(99)
    p = 7
    for _ in range(400):
        A = random_terms(rng, R)
        B = random_terms(rng, R)
        assert _pure.add_terms(A, B, p) == _speed.add_terms(A, B, p)
        assert _pure.mul_terms(A, B, p) == _speed.mul_terms(A, B, p)
        c = rng.randrange(p)
        assert _pure.scale_terms(A, c, p) == _speed.scale_terms(A, c, p)
        if B:
            k, bc = B[0]
            assert _pure.shift_terms(A, k, bc, p) == _speed.shift_terms(A, k, bc, p)


@needs_speed
def test_normal_form_parity():
    from reestau.ideals import prepare_basis

    R = ring(5, ("x", "y", "z"))
    rng = random.Random(7)
    for _ in range(150):
        basis_polys = [random_poly(rng, R, 3, 3) for _ in range(3)]
        basis_polys = [g for g in basis_polys if not g.is_zero()]
        if not basis_polys:
            continue
        prepared = prepare_basis(basis_polys)
        f = random_poly(rng, R, 6, 6)
        out_pure = _pure.nf_terms(f.terms, prepared, 5, 3, {}, None)
        out_fast = _speed.nf_terms(f.terms, prepared, 5, 3, {}, None)
        assert out_pure == out_fast
        # and without cache / with skip
        skip = prepared[0][1]
        assert _pure.nf_terms(f.terms, prepared, 5, 3, None, skip) == _speed.nf_terms(
            f.terms, prepared, 5, 3, None, skip
        )


@needs_speed
def test_groebner_run_parity(monkeypatch):
    """A full Buchberger run produces identical bases under both kernels."""
    import importlib

    import reestau.ideals as ideals_mod
    import reestau.kernels as K
    import reestau.poly as poly_mod

    R = ring(7, ("x", "y", "z"))
    gens = R.parse_ideal_gens("x^2*y - z^2, y^2*z - x, z^2*x - y^2")

    results = {}
    for impl in (_pure, _speed):
        monkeypatch.setattr(poly_mod, "nf_terms", impl.nf_terms)
        monkeypatch.setattr(poly_mod, "add_terms", impl.add_terms)
        monkeypatch.setattr(poly_mod, "mul_terms", impl.mul_terms)
        monkeypatch.setattr(poly_mod, "scale_terms", impl.scale_terms)
        monkeypatch.setattr(poly_mod, "shift_terms", impl.shift_terms)
        gb = ideals_mod.buchberger(gens, R)
        results[impl.IMPL] = tuple(tuple(g.terms) for g in gb)
    assert results["pure"] == results["compiled"]
