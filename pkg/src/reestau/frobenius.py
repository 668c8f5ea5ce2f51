"""Characteristic-p primitives: bracket powers, Frobenius roots, nu values.

Frobenius roots are computed generator-wise by decomposing each generator
over the basis of monomials with exponents < q = p^e: writing
g = sum_r (g_r)^q x^r, the root of (g) is generated by the g_r.  Over F_p
every coefficient is its own q-th root, so no field extensions appear.
This is the computational form of the trace map and is exact: the result is
the smallest J with I contained in J^[q].
"""

from .errors import NonFiniteNuError, ReestauError
from .ideals import Ideal
from .poly import Polynomial


class FrobeniusLevel:
    """The pair (e, q = p^e)."""

    __slots__ = ("p", "e", "q")

    def __init__(self, p: int, e: int):
        if e < 1:
            raise ReestauError(f"Frobenius level must be >= 1, got {e}")
        self.p = p
        self.e = e
        self.q = p**e

    def __repr__(self):
        return f"FrobeniusLevel(p={self.p}, e={self.e}, q={self.q})"


def _check_power(ring, q: int) -> None:
    p = ring.field.p
    if q < 2:
        raise ReestauError(f"q must be a positive power of p, got {q}")
    r = q
    while r > 1:
        if r % p:
            raise ReestauError(f"{q} is not a power of the characteristic {p}")
        r //= p


def bracket_polynomial(g: Polynomial, q: int) -> Polynomial:
    """g^q computed term-wise (the Frobenius is additive and fixes F_p)."""
    terms = tuple((tuple(x * q for x in k), c) for k, c in g.terms)
    return Polynomial(g.ring, terms)


def bracket_power(I: Ideal, q: int) -> Ideal:
    """I^[q]: the ideal generated by q-th powers of the generators."""
    _check_power(I.ring, q)
    return Ideal(I.ring, [bracket_polynomial(g, q) for g in I.gens])


def root_polynomial(g: Polynomial, q: int):
    """Coefficients of g over the exponent-< q monomial basis: the list of
    nonzero g_r with g = sum (g_r)^q x^r."""
    ring = g.ring
    buckets: dict = {}
    for k, c in g.terms:
        exps = ring.exponents(k)
        quot = tuple(e // q for e in exps)
        rem = tuple(e % q for e in exps)
        bucket = buckets.setdefault(rem, {})
        bucket[quot] = (bucket.get(quot, 0) + c) % ring.field.p
    out = []
    for rem in sorted(buckets):
        f = ring.from_dict(buckets[rem])
        if not f.is_zero():
            out.append(f)
    return out


def frobenius_root(I: Ideal, q: int) -> Ideal:
    """I^[1/q]: the smallest J with I contained in J^[q]."""
    _check_power(I.ring, q)
    gens = []
    for g in I.gens:
        gens.extend(root_polynomial(g, q))
    return Ideal(I.ring, gens)


def bracket_contains(J: Ideal, q: int, f: Polynomial) -> bool:
    """Decide f in J^[q] without forming a basis of J^[q], via the adjunction
    f in J^[q]  <=>  (f)^[1/q] contained in J."""
    return all(J.contains(g) for g in root_polynomial(f, q))


def _power_products(gens, r: int):
    """All products of r generators with multiplicity (monomial-combination
    enumeration when every generator is a single term)."""
    from itertools import combinations_with_replacement

    if len(gens) == 1:
        yield gens[0] ** r
        return
    ring = gens[0].ring
    if all(g.is_monomial() for g in gens):
        exps = [g.lead_exponents() for g in gens]
        coeffs = [g.lead_coeff() for g in gens]
        for combo in combinations_with_replacement(range(len(gens)), r):
            e = [0] * ring.nvars
            c = 1
            for i in combo:
                for j, x in enumerate(exps[i]):
                    e[j] += x
                c = (c * coeffs[i]) % ring.field.p
            yield ring.monomial(e, c)
        return
    for combo in combinations_with_replacement(range(len(gens)), r):
        f = ring.one()
        for i in combo:
            f = f * gens[i]
        yield f


def nu_value(a: Ideal, J: Ideal, q: int, search_cap: int = 1 << 20) -> int:
    """max{r >= 0 : a^r not contained in J^[q]}, with a^0 = (1).

    Requires a contained in sqrt(J) so that the maximum is finite; returns 0
    when a itself lies in J^[q].
    """
    _check_power(a.ring, q)
    if a.ring != J.ring:
        raise ReestauError("nu across rings")
    if not a.gens:
        raise ReestauError("nu of the zero ideal")
    for g in a.gens:
        if not J.radical_contains(g):
            raise NonFiniteNuError(
                f"generator {g} has no power inside the reference ideal"
            )
    if J.is_unit():
        return 0

    def contained(r: int) -> bool:
        if r == 0:
            return False  # (1) never sits in a proper bracket power
        return all(bracket_contains(J, q, h) for h in _power_products(a.gens, r))

    lo, hi = 0, q
    while not contained(hi):
        lo = hi
        hi *= 2
        if hi > search_cap:
            raise NonFiniteNuError(f"no containment up to r={search_cap}")
    # smallest contained point in (lo, hi]
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if contained(mid):
            hi = mid
        else:
            lo = mid
    return hi - 1
