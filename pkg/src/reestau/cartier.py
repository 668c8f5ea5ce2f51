"""Certified test-ideal computation on a presented quotient T = P/J.

The level-e Cartier maps of T correspond to elements of the Frobenius colon
(J^[p^e] : J); when that colon is principal modulo J^[p^e] (the
Q-Gorenstein index-divides-(p^e - 1) situation) a single generator u_e
drives the ascending fixed-point chain

    N_0 = J + (d f^ceil(lambda)),
    N_{i+1} = N_i + (u_c f^a N_i + J^[p^c])^[1/p^c],

whose stable value is the pair test ideal tau(T, f^lambda) lifted to P.
A principal homogeneous u_e also reveals the grading twist of the canonical
module: on a presentation with variable degrees summing to sigma,

    shift = sigma - deg(u_e) / (p^e - 1),

which is what relates graded components of tau(T, (1/t)^lambda) to test
ideals of the base (see the decomposition module).
"""

import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    NonPrincipalCartierError,
    NoStabilizationError,
    NoTestElementError,
    ReestauError,
)
from .exponents import RationalExponent
from .frobenius import bracket_power, frobenius_root
from .ideals import Ideal
from .poly import Polynomial
from .rees import PresentedGradedRing


@dataclass
class CartierGenerator:
    level: int
    element: Polynomial | None  # principal generator modulo the bracket
    principal: bool
    degree: int | None  # grading degree of the element
    basis: tuple = ()  # residual colon basis when not principal


@dataclass
class TestElement:
    element: Polynomial


@dataclass
class ChainOptions:
    max_iterations: int = 200
    level_cap: int = 8  # try multiples of the minimal level up to this
    q_cap: int = 1 << 16
    trials: int = 20
    seed: int = 0


@dataclass
class CertifiedTau:
    ideal: Ideal  # contains J; the test ideal of T is ideal/J
    certificate: str
    iterations: int
    levels: tuple
    shift: Fraction
    cartier: CartierGenerator
    test_elt: TestElement


def regular_sequence_presentation(pres: PresentedGradedRing):
    """A regular sequence generating J, when one exists among small subsets
    of the reduced basis (codim-many generators of a codim-height ideal in a
    polynomial ring always form a regular sequence)."""
    if pres._ci_cache:
        return pres._ci_cache[0]
    from itertools import combinations

    J = pres.defining
    result = None
    if not J.is_zero():
        gb = J.groebner_basis()
        codim = pres.ring.nvars - (pres.base_nvars + 1)
        if len(gb) == codim:
            result = tuple(gb)
        elif 0 < codim < len(gb):
            from math import comb

            if comb(len(gb), codim) <= 200:
                for subset in combinations(gb, codim):
                    if Ideal(pres.ring, subset).contains_ideal(J):
                        result = subset
                        break
    pres._ci_cache.append(result)
    return result


def cartier_generator(
    pres: PresentedGradedRing, e: int, trials: int = 20, seed: int = 0
) -> CartierGenerator:
    """A generator of (J^[p^e] : J) modulo J^[p^e], with a principality check.

    Complete-intersection presentations take the Fedder route
    (J^[q] : J) = J^[q] + ((g_1 .. g_r)^(q-1)); otherwise the colon is
    computed and each reduced-basis element is tried, then seeded random
    same-degree combinations.  A failure is reported in the flag, not raised.
    """
    cached = pres._cartier_cache.get(e)
    if cached is not None:
        return cached
    ring = pres.ring
    q = ring.field.p**e
    J = pres.defining
    if J.is_zero():
        out = CartierGenerator(e, ring.one(), True, 0)
        pres._cartier_cache[e] = out
        return out
    seq = regular_sequence_presentation(pres)
    if seq is not None:
        prod = ring.one()
        for g in seq:
            prod = prod * g
        u = prod ** (q - 1)
        out = CartierGenerator(e, u, True, pres.degree_of(u))
        pres._cartier_cache[e] = out
        return out
    Jq = bracket_power(J, q)
    C = Jq.colon(J)
    candidates = [g for g in C.groebner_basis() if not Jq.contains(g)]
    candidates.sort(key=lambda g: g.lead_key())

    def accept(g: Polynomial) -> bool:
        return Ideal(ring, Jq.gens + (g,)).contains_ideal(C)

    for g in candidates:
        if accept(g):
            out = CartierGenerator(e, g, True, pres.degree_of(g))
            pres._cartier_cache[e] = out
            return out
    by_degree: dict = {}
    for g in candidates:
        by_degree.setdefault(pres.degree_of(g), []).append(g)
    rng = random.Random(seed)
    degs = sorted(d for d, gs in by_degree.items() if len(gs) > 1)
    p = ring.field.p
    for trial in range(trials):
        if not degs:
            break
        d = degs[trial % len(degs)]
        gs = by_degree[d]
        g = ring.zero()
        for h in gs:
            g = g + h * rng.randrange(1, p)
        if not g.is_zero() and not Jq.contains(g) and accept(g):
            out = CartierGenerator(e, g, True, d)
            pres._cartier_cache[e] = out
            return out
    out = CartierGenerator(e, None, False, None, tuple(candidates))
    pres._cartier_cache[e] = out
    return out


def _det(matrix, ring):
    """Determinant of a small polynomial matrix by Laplace expansion."""
    k = len(matrix)
    if k == 0:
        return ring.one()
    if k == 1:
        return matrix[0][0]
    total = ring.zero()
    rest = matrix[1:]
    for j in range(k):
        entry = matrix[0][j]
        if entry.is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in rest]
        piece = entry * _det(minor, ring)
        total = total + piece if j % 2 == 0 else total - piece
    return total


def test_element(pres: PresentedGradedRing) -> TestElement:
    """A Jacobian-ideal element that is a nonzerodivisor on T.

    Enumerates codim x codim minors of the Jacobian of the reduced basis of
    J and returns the first delta with delta not in J and (J : delta) = J.
    """
    if pres._test_element_cache:
        return pres._test_element_cache[0]
    from itertools import combinations

    ring = pres.ring
    J = pres.defining
    if J.is_zero():
        out = TestElement(ring.one())
        pres._test_element_cache.append(out)
        return out
    gb = J.groebner_basis()
    codim = ring.nvars - (pres.base_nvars + 1)
    if codim <= 0:
        raise ReestauError("presentation has nonpositive codimension")
    jac = [[g.derivative(j) for j in range(ring.nvars)] for g in gb]
    for rows in combinations(range(len(gb)), codim):
        for cols in combinations(range(ring.nvars), codim):
            delta = _det([[jac[i][j] for j in cols] for i in rows], ring)
            if delta.is_zero() or J.contains(delta):
                continue
            if J.colon(Ideal(ring, (delta,))) == J:
                out = TestElement(delta)
                pres._test_element_cache.append(out)
                return out
    raise NoTestElementError(
        "no nonzerodivisor Jacobian minor found; supply a test element manually"
    )


def _principal_cartier_at(pres, c0: int, opts: ChainOptions):
    """Smallest multiple of c0 with a principal Cartier generator."""
    p = pres.ring.field.p
    last = None
    for j in range(1, opts.level_cap + 1):
        c = c0 * j
        if p**c > opts.q_cap:
            break
        cart = cartier_generator(pres, c, opts.trials, opts.seed)
        last = cart
        if cart.principal:
            return cart
    size = len(last.basis) if last is not None else 0
    raise NonPrincipalCartierError(c0, size)


def grading_shift(pres: PresentedGradedRing, cart: CartierGenerator) -> Fraction:
    """sigma - deg(u_e)/(p^e - 1): the degree twist of the canonical module."""
    if not cart.principal:
        raise ReestauError("grading shift needs a principal Cartier generator")
    sigma = sum(pres.degrees)
    denom = pres.ring.field.p**cart.level - 1
    return Fraction(sigma) - Fraction(cart.degree, denom)


def tau_pair_quotient(
    pres: PresentedGradedRing,
    f: Polynomial,
    lam,
    opts: ChainOptions | None = None,
    test_elt: Polynomial | None = None,
) -> CertifiedTau:
    """Certified tau(T, f^lambda) as an ideal of P containing J.

    With lambda = a / (p^b (p^c - 1)) and u_c a principal Cartier generator
    at a working level c (a multiple of the minimal one), the numerator is
    rescaled so the p-power part becomes p^(rc), r = ceil(b/c):

        lambda = a' / (p^(rc) (p^c - 1)),  a' = a p^(rc - b).

    The ascending chain with twist f^(a') computes tau(T, f^(a'/(p^c-1)));
    r outer roots N -> (u_c N + J^[p^c])^[1/p^c] then divide the exponent by
    p^(rc).  Each step stays at the certified level c.  Refuses with a
    NonPrincipalCartierError when no principal level exists in budget.
    """
    opts = opts or ChainOptions()
    ring = pres.ring
    p = ring.field.p
    lam = lam if isinstance(lam, RationalExponent) else RationalExponent(lam)
    a0, b, c0 = lam.decompose(p)
    J = pres.defining
    graded = not J.is_zero()

    cart = _principal_cartier_at(pres, c0, opts)
    c = cart.level
    qc = p**c
    shift = grading_shift(pres, cart)
    rounds = -(-b // c)  # ceil(b / c)
    a = a0 * ((qc - 1) // (p**c0 - 1)) * p ** (rounds * c - b)

    d = test_elt if test_elt is not None else test_element(pres).element
    # seed with the chain's own exponent ceil(a / (p^c - 1)) so the fixed
    # point is exactly tau at that exponent before the outer roots
    chain_ceil = -(-a // (qc - 1))
    seed_poly = d * f**chain_ceil
    N = _gb_ideal(Ideal(ring, J.gens + (seed_poly,)))
    mult = cart.element * f**a
    Jq_gens = bracket_power(J, qc).gens if graded else ()

    def step(M: Ideal, twisted: bool) -> Ideal:
        factor = mult if twisted else cart.element
        gens = [factor * g for g in M.gens]
        gens.extend(Jq_gens)
        return frobenius_root(Ideal(ring, gens), qc)

    check_homog = graded and pres.is_homogeneous(f)
    iterations = 0
    while True:
        iterations += 1
        if iterations > opts.max_iterations:
            raise NoStabilizationError(
                f"no fixed point after {opts.max_iterations} iterations"
            )
        image = step(N, True)
        if check_homog:
            for g in image.gens:
                if not pres.is_homogeneous(g):
                    raise AssertionError("chain iterate lost homogeneity")
        bigger = _gb_ideal(Ideal(ring, N.gens + image.gens))
        if bigger == N:
            break
        if not bigger.contains_ideal(N):
            raise AssertionError("chain ascent violated (internal error)")
        N = bigger

    for _ in range(rounds):
        N = _gb_ideal(Ideal(ring, step(N, False).gens + J.gens))

    # re-verify stability of the final ideal under the twisted Cartier step
    if not N.contains_ideal(step(N, True)):
        raise AssertionError("fixed-point re-verification failed")

    return CertifiedTau(
        ideal=N,
        certificate="fixed-point",
        iterations=iterations,
        levels=(c, b),
        shift=shift,
        cartier=cart,
        test_elt=TestElement(d),
    )


def tau_multi_level(
    pres: PresentedGradedRing, f: Polynomial, lam, levels, opts: ChainOptions | None = None
) -> CertifiedTau:
    """Explicitly uncertified lower bound: sum contributions of every colon
    basis element at each requested level (opt-in via --levels)."""
    opts = opts or ChainOptions()
    ring = pres.ring
    p = ring.field.p
    lam = lam if isinstance(lam, RationalExponent) else RationalExponent(lam)
    J = pres.defining
    d = test_element(pres).element
    N = _gb_ideal(Ideal(ring, J.gens + (d * f ** lam.ceil(),)))
    carts = []
    for e in levels:
        cart = cartier_generator(pres, e, opts.trials, opts.seed)
        elements = (cart.element,) if cart.principal else cart.basis
        carts.append((e, elements))

    iterations = 0
    while True:
        iterations += 1
        if iterations > opts.max_iterations:
            raise NoStabilizationError(
                f"no fixed point after {opts.max_iterations} iterations"
            )
        gens = list(N.gens)
        for e, elements in carts:
            qe = p**e
            twist = -((-lam.value.numerator * (qe - 1)) // lam.value.denominator)
            fq = f**twist
            egens = [uel * fq * g for uel in elements for g in N.gens]
            egens.extend(bracket_power(J, qe).gens)
            gens.extend(frobenius_root(Ideal(ring, egens), qe).gens)
        bigger = _gb_ideal(Ideal(ring, gens))
        if bigger == N:
            break
        N = bigger

    return CertifiedTau(
        ideal=N,
        certificate=f"uncertified-lower-bound(levels={tuple(levels)})",
        iterations=iterations,
        levels=tuple(levels),
        shift=Fraction(0),
        cartier=CartierGenerator(0, None, False, None),
        test_elt=TestElement(d),
    )


def _gb_ideal(I: Ideal) -> Ideal:
    out = Ideal(I.ring, I.groebner_basis())
    out._cache.update(I._cache)
    return out
