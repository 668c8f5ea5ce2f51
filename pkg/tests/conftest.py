import pytest

from reestau.fields import PrimeField
from reestau.ideals import Ideal
from reestau.poly import PolyRing, format_generators


def ring(p, names=("x", "y"), order=None):
    return PolyRing(PrimeField(p), names, order)


def ideal(src, R):
    return Ideal.parse(src, R)


def gb_text(I):
    gb = I.groebner_basis()
    return format_generators(gb) if gb else "0"


@pytest.fixture
def R5():
    return ring(5)


@pytest.fixture
def R7():
    return ring(7)
