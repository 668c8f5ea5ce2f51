import pytest

from reestau.fields import MAX_P, PrimeField, is_prime


@pytest.mark.parametrize("a,p,inv", [(1, 7, 1), (2, 7, 4), (3, 5, 2)])
def test_inverse_examples(a, p, inv):
    assert PrimeField(p).inv(a) == inv


def test_inverse_of_zero_fails():
    with pytest.raises(ZeroDivisionError):
        PrimeField(7).inv(0)
    with pytest.raises(ZeroDivisionError):
        PrimeField(7).inv(14)


def test_inverse_random():
    F = PrimeField(101)
    for a in range(1, 101):
        assert (a * F.inv(a)) % 101 == 1


@pytest.mark.parametrize("bad", [0, 1, 4, 6, 9, 100, MAX_P + 1, 65536])
def test_rejects_non_primes(bad):
    with pytest.raises(ValueError):
        PrimeField(bad)


def test_is_prime_small():
    primes = [n for n in range(60) if is_prime(n)]
    assert primes == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]


def test_largest_allowed_prime():
    assert PrimeField(65521).p == 65521  # largest prime below 2^16
