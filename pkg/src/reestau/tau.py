"""Test ideals over the regular base F_p[x_1..x_n].

Three routes live here:

* ``tau_bms`` — the ascending chain (a^ceil(lambda p^e))^[1/p^e].  For
  non-principal a this is the classical stabilization heuristic: the chain
  is non-decreasing and eventually equals the test ideal, but the stopping
  rule is not certified.  Results carry a ``stabilized-heuristic``
  certificate.
* ``tau_monomial`` — the Newton-polyhedron formula for monomial ideals
  (exact; used as the independent oracle).
* ``f_jumping_numbers`` — plateau scan of the chain route over the
  candidate grid of admissible rationals.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import gcd

from .errors import NonMonomialInputError, ReestauError
from .exponents import RationalExponent
from .frobenius import frobenius_root
from .ideals import Ideal, minimalize_monomials
from .poly import Polynomial


@dataclass(frozen=True)
class Certificate:
    kind: str  # fixed-point | stabilized-heuristic | monomial-exact
    e_reached: int | None = None
    stabilized: bool = True

    def __str__(self):
        if self.kind == "stabilized-heuristic":
            tag = f"stabilized-heuristic(e={self.e_reached})"
            return tag if self.stabilized else tag + " [no stabilization]"
        return self.kind


@dataclass
class TauResult:
    ideal: Ideal
    certificate: Certificate
    iterations: int
    last_jump_below: Fraction | None = None
    notes: tuple = field(default_factory=tuple)


def _as_fraction(lam) -> Fraction:
    if isinstance(lam, RationalExponent):
        return lam.value
    lam = Fraction(lam)
    if lam < 0:
        raise ReestauError("exponent must be >= 0")
    return lam


def _ceil_mul(lam: Fraction, q: int) -> int:
    return -((-lam.numerator * q) // lam.denominator)


def _reduced(I: Ideal) -> Ideal:
    out = Ideal(I.ring, I.groebner_basis())
    out._cache.update(I._cache)
    return out


def tau_bms(a: Ideal, lam, e_max: int = 6, stabilize: int = 2) -> TauResult:
    """Direct-chain test ideal tau(R, a^lambda) with a stabilization heuristic.

    The chain J_e = (a^ceil(lambda p^e))^[1/p^e] ascends; we stop once
    ``stabilize`` consecutive equalities are seen.  This is the
    uncertified baseline route.
    """
    lam = _as_fraction(lam)
    if a.is_zero():
        raise ReestauError("tau of the zero ideal")
    p = a.ring.field.p
    prev = None
    streak = 0
    e_reached = 0
    notes = []
    for e in range(1, e_max + 1):
        q = p**e
        r = _ceil_mul(lam, q)
        J = _reduced(frobenius_root(a.power(r), q))
        if prev is not None:
            if not J.contains_ideal(prev):
                raise AssertionError("chain monotonicity violated (internal error)")
            streak = streak + 1 if J == prev else 0
        prev = J
        e_reached = e
        if streak >= stabilize:
            break
    stabilized = streak >= stabilize
    if not stabilized:
        notes.append(
            f"warning: chain not stabilized after e={e_reached} "
            f"({stabilize} consecutive equalities required)"
        )
    assert prev is not None
    return TauResult(
        ideal=prev,
        certificate=Certificate("stabilized-heuristic", e_reached, stabilized),
        iterations=e_reached,
        notes=tuple(notes),
    )


# -- Newton polyhedron oracle -------------------------------------------------


def _cross(u, v):
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def _normalize(w):
    g = 0
    for x in w:
        g = gcd(g, abs(x))
    if g == 0:
        return None
    w = tuple(x // g for x in w)
    if all(x <= 0 for x in w):
        w = tuple(-x for x in w)
    if any(x < 0 for x in w) or all(x == 0 for x in w):
        return None  # mixed signs never support the polyhedron from below
    return w


def newton_support(points):
    """Candidate facet normals w >= 0 of conv(points) + orthant with their
    support values min <w, point>.  Complete for n <= 3: every facet is
    spanned by generator points and coordinate ray directions."""
    n = len(points[0])
    if n > 3:
        raise ReestauError("Newton polyhedron support limited to <= 3 variables")
    normals = set()
    for j in range(n):
        e = [0] * n
        e[j] = 1
        normals.add(tuple(e))
    if n == 2:
        for u, v in combinations(points, 2):
            d = (v[0] - u[0], v[1] - u[1])
            w = _normalize((d[1], -d[0]))
            if w:
                normals.add(w)
    elif n == 3:
        axes = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
        for u, v in combinations(points, 2):
            d = tuple(b - a for a, b in zip(u, v))
            for ax in axes:
                w = _normalize(_cross(d, ax))
                if w:
                    normals.add(w)
        for u, v, t in combinations(points, 3):
            d1 = tuple(b - a for a, b in zip(u, v))
            d2 = tuple(b - a for a, b in zip(u, t))
            w = _normalize(_cross(d1, d2))
            if w:
                normals.add(w)
    out = []
    for w in sorted(normals):
        c = min(sum(a * b for a, b in zip(w, pt)) for pt in points)
        out.append((w, c))
    return out


def tau_monomial(a: Ideal, lam) -> TauResult:
    """Exact test ideal of a monomial ideal: monomials x^u with u + (1,..,1)
    interior to lambda * Newt(a)."""
    lam = _as_fraction(lam)
    exps = a.monomial_exponents()
    if exps is None:
        raise NonMonomialInputError("tau_monomial needs monomial generators")
    if not exps:
        raise ReestauError("tau of the zero ideal")
    ring = a.ring
    n = ring.nvars
    if lam == 0:
        return TauResult(Ideal(ring, (ring.one(),)), Certificate("monomial-exact"), 0)
    support = newton_support(exps)
    maxdeg = max(sum(e) for e in exps)
    box = -((-lam.numerator * maxdeg) // lam.denominator) + n  # ceil(lam*maxdeg) + n

    def interior(v) -> bool:
        # v in int(lam * N)  <=>  <w, v> > lam * support(w) for every candidate
        for w, c in support:
            lhs = sum(a_ * b_ for a_, b_ in zip(w, v))
            if lhs * lam.denominator <= lam.numerator * c:
                return False
        return True

    found = []
    for u in _box_iter(n, box):
        if interior(tuple(x + 1 for x in u)):
            found.append(u)
    gens = [ring.monomial(e) for e in minimalize_monomials(found)]
    return TauResult(_reduced(Ideal(ring, gens)), Certificate("monomial-exact"), 0)


def _box_iter(n, bound):
    if n == 1:
        for i in range(bound + 1):
            yield (i,)
    else:
        for rest in _box_iter(n - 1, bound):
            for i in range(bound + 1):
                yield rest + (i,)


# -- principal route and jumping numbers --------------------------------------


def tau_principal(
    f: Polynomial, lam, e_max: int = 6, stabilize: int = 2, report_jump: bool = True
) -> TauResult:
    """Direct chain for a = (f), plus the last jump witnessed below lambda
    among the sampled exponents k / p^e_reached."""
    if f.is_zero():
        raise ReestauError("tau of the zero polynomial")
    lam = _as_fraction(lam)
    a = Ideal(f.ring, (f,))
    base = tau_bms(a, lam, e_max=e_max, stabilize=stabilize)
    witness = None
    if report_jump and lam > 0:
        p = f.ring.field.p
        q = p**base.iterations
        cache: dict = {}

        def tau_at(k: int) -> Ideal:
            got = cache.get(k)
            if got is None:
                got = tau_bms(a, Fraction(k, q), e_max=e_max, stabilize=stabilize).ideal
                cache[k] = got
            return got

        lamq = lam * q
        k_max = lamq.numerator // lamq.denominator
        if lamq.denominator == 1:
            k_max -= 1
        if k_max >= 0 and tau_at(0) != base.ideal:
            lo, hi = 0, k_max  # predicate "tau(k/q) == tau(lam)" is monotone in k
            if tau_at(k_max) != base.ideal:
                witness = Fraction(k_max, q)
            else:
                while hi - lo > 1:
                    mid = (lo + hi) // 2
                    if tau_at(mid) == base.ideal:
                        hi = mid
                    else:
                        lo = mid
                witness = Fraction(lo, q)
    return TauResult(base.ideal, base.certificate, base.iterations, witness, base.notes)


def candidate_exponents(p: int, bound, e_max: int, denom_cap: int):
    """The sampling grid {k / (p^b (p^c - 1))} union {k / p^e}."""
    bound = Fraction(bound)
    dens = set()
    for e in range(1, e_max + 1):
        dens.add(p**e)
    b = 0
    while p**b * (p - 1) <= denom_cap:
        c = 1
        while p**b * (p**c - 1) <= denom_cap:
            dens.add(p**b * (p**c - 1))
            c += 1
        b += 1
    grid = set()
    for d in dens:
        top = (bound.numerator * d) // bound.denominator
        for k in range(1, top + 1):
            grid.add(Fraction(k, d))
    return sorted(grid)


@dataclass
class Jump:
    value: Fraction
    before: Ideal
    after: Ideal


def f_jumping_numbers(
    f: Polynomial,
    bound,
    e_max: int = 2,
    denom_cap: int = 50,
    chain_e_max: int = 6,
) -> list[Jump]:
    """Candidate F-jumping numbers of (f) up to ``bound``: plateau boundaries
    of tau over the candidate grid at resolution (e_max, denom_cap)."""
    if f.is_zero():
        raise ReestauError("jumping numbers of the zero polynomial")
    p = f.ring.field.p
    a = Ideal(f.ring, (f,))
    grid = candidate_exponents(p, bound, e_max, denom_cap)
    jumps = []
    prev = _reduced(Ideal(f.ring, (f.ring.one(),)))  # tau(a^0) = (1)
    for lam in grid:
        cur = tau_bms(a, lam, e_max=chain_e_max).ideal
        if cur != prev:
            jumps.append(Jump(lam, prev, cur))
        prev = cur
    return jumps
