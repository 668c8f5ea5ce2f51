"""Ideals, Buchberger's algorithm, and the ideal-theoretic toolkit.

Reduced Groebner bases are the canonical form: all ideal equality in the
package is reduced-basis equality under the ring's own (default grevlex)
order.  Elimination-based operations build a temporary ring with a block
order and map back.
"""

from bisect import insort
from dataclasses import dataclass
from heapq import heappop, heappush
from itertools import combinations_with_replacement

from .errors import ReestauError, ResourceLimitError, ZeroDivisorIdealError
from .orders import MonomialOrder
from .poly import Polynomial, PolyRing, normal_form_terms


@dataclass
class GBLimits:
    max_pairs: int = 100_000
    max_degree: int = 400


_default_limits = GBLimits()


def default_limits() -> GBLimits:
    return _default_limits


def set_default_limits(limits: GBLimits):
    global _default_limits
    _default_limits = limits


# -- monomial helpers on exponent tuples ------------------------------------


def mon_divides(a, b) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def mon_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def mon_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def minimalize_monomials(exps_list):
    """Minimal elements under componentwise <= (the monomial-ideal staircase)."""
    pts = sorted(set(exps_list))
    if not pts:
        return []
    if pts and len(pts[0]) == 2:
        out = []
        best = None
        for a, b in pts:  # ascending (a, b); keep strictly-decreasing b
            if best is None or b < best:
                out.append((a, b))
                best = b
        return out
    pts.sort(key=lambda e: (sum(e), e))
    out = []
    for e in pts:
        if not any(mon_divides(k, e) for k in out):
            out.append(e)
    return sorted(out)


# -- kernel basis preparation ------------------------------------------------


def prepare_basis(polys):
    """Monic basis in the kernel's format, ascending by leading monomial."""
    ring = polys[0].ring
    n = ring.nvars
    entries = []
    for g in polys:
        if g.is_zero():
            continue
        g = g.monic()
        lk = g.lead_key()
        entries.append((lk[len(lk) - n:], lk, g.terms))
    entries.sort(key=lambda e: e[1])
    return entries


def reduce_polynomial(f: Polynomial, basis_polys) -> Polynomial:
    """Full normal form of f against an arbitrary generator list (made monic)."""
    if f.is_zero() or not basis_polys:
        return f
    return normal_form_terms(f, prepare_basis(basis_polys))


def _tail_reduce_all(minimal):
    """Reduced basis from a minimal one: one full-NF pass per element.

    Leads of a minimal basis are pairwise non-divisible, so tail reduction
    never changes a lead and a single sequential pass is confluent.
    """
    if not minimal:
        return []
    current = [g.monic() for g in minimal]
    prepared = prepare_basis(current)
    out = []
    for i, g in enumerate(current):
        r = normal_form_terms(g, prepared, skip_key=g.lead_key())
        assert not r.is_zero(), "minimal basis element reduced to zero"
        r = r.monic()
        if r != g:
            # refresh the prepared entry with the reduced tail
            lk = r.lead_key()
            entry = (lk[len(lk) - r.ring.nvars:], lk, r.terms)
            for j, e in enumerate(prepared):
                if e[1] == lk:
                    prepared[j] = entry
                    break
        out.append(r)
    return out


def exact_divide(g: Polynomial, f: Polynomial) -> Polynomial:
    """Quotient g/f for g a multiple of f (raises otherwise)."""
    if f.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    ring = g.ring
    p = ring.field.p
    inv_lc = ring.field.inv(f.lead_coeff())
    fl = f.lead_exponents()
    q = ring.zero()
    r = g
    while not r.is_zero():
        rl = r.lead_exponents()
        if not mon_divides(fl, rl):
            raise ReestauError("exact division failed: not a multiple")
        exps = tuple(x - y for x, y in zip(rl, fl))
        c = (r.lead_coeff() * inv_lc) % p
        t = ring.monomial(exps, c)
        q = q + t
        r = r - t * f
    return q


# -- Buchberger ---------------------------------------------------------------


def _spoly(f: Polynomial, g: Polynomial) -> Polynomial:
    ring = f.ring
    lf, lg = f.lead_exponents(), g.lead_exponents()
    lcm = mon_lcm(lf, lg)
    mf = tuple(x - y for x, y in zip(lcm, lf))
    mg = tuple(x - y for x, y in zip(lcm, lg))
    cf = ring.field.inv(f.lead_coeff())
    cg = ring.field.inv(g.lead_coeff())
    return f.shift(mf, cf) - g.shift(mg, cg)


def _gm_update(G, lmG, live, f, ring):
    """Gebauer-Moeller pair update (product + chain criteria).

    Prunes the live pair set in place and returns the new pairs added for f.
    """
    t = len(G)
    lmf = f.lead_exponents()
    for (i, j) in list(live):
        lij = mon_lcm(lmG[i], lmG[j])
        if (
            mon_divides(lmf, lij)
            and lij != mon_lcm(lmG[i], lmf)
            and lij != mon_lcm(lmG[j], lmf)
        ):
            live.discard((i, j))
    groups = {}
    for i in range(t):
        groups.setdefault(mon_lcm(lmG[i], lmf), []).append(i)
    key = ring.key
    minimal = []
    for L in sorted(groups, key=lambda e: (sum(e), key(e))):
        if not any(mon_divides(M, L) for M in minimal):
            minimal.append(L)
    new_pairs = []
    for L in minimal:
        # product criterion: coprime leads never contribute
        if not any(L == mon_mul(lmG[i], lmf) for i in groups[L]):
            pair = (min(groups[L]), t)
            new_pairs.append(pair)
            live.add(pair)
    G.append(f)
    lmG.append(lmf)
    return new_pairs


def buchberger(gens, ring: PolyRing, limits: GBLimits | None = None):
    """The unique reduced Groebner basis of (gens) under the ring's order."""
    limits = limits or _default_limits
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return ()
    if all(g.is_monomial() for g in gens):
        exps = minimalize_monomials([g.lead_exponents() for g in gens])
        basis = [ring.monomial(e) for e in exps]
        basis.sort(key=lambda g: g.lead_key(), reverse=True)
        return tuple(basis)

    G: list[Polynomial] = []
    lmG: list[tuple] = []
    live: set = set()
    heap: list = []
    prepared: list = []
    cache: dict = {}
    key = ring.key

    def push_pairs(pairs):
        for (i, j) in pairs:
            L = mon_lcm(lmG[i], lmG[j])
            heappush(heap, (sum(L), key(L), i, j))

    def add_element(f: Polynomial):
        new_pairs = _gm_update(G, lmG, live, f, ring)
        push_pairs(new_pairs)
        lk = f.lead_key()
        insort(prepared, (lk[len(lk) - ring.nvars:], lk, f.terms), key=lambda e: e[1])
        cache.clear()

    for f in sorted(gens, key=lambda g: g.lead_key()):
        f = normal_form_terms(f.monic(), prepared, cache) if prepared else f.monic()
        if not f.is_zero():
            add_element(f.monic())

    processed = 0
    while heap:
        deg, _, i, j = heappop(heap)
        if (i, j) not in live:
            continue
        live.discard((i, j))
        processed += 1
        if processed > limits.max_pairs:
            raise ResourceLimitError(f"pair budget exceeded ({limits.max_pairs})")
        if deg > limits.max_degree:
            raise ResourceLimitError(
                f"degree cap exceeded ({limits.max_degree}) while pairing"
            )
        r = normal_form_terms(_spoly(G[i], G[j]), prepared, cache)
        if not r.is_zero():
            add_element(r.monic())

    # minimalize: drop members whose lead is divisible by another lead
    minimal = []
    for g in sorted(G, key=lambda h: h.lead_key()):
        if not any(mon_divides(h.lead_exponents(), g.lead_exponents()) for h in minimal):
            minimal.append(g)
    reduced = _tail_reduce_all(minimal)
    reduced.sort(key=lambda g: g.lead_key(), reverse=True)
    return tuple(reduced)


# -- the Ideal type ------------------------------------------------------------


class Ideal:
    __slots__ = ("ring", "gens", "_cache")

    def __init__(self, ring: PolyRing, gens):
        self.ring = ring
        cleaned = []
        for g in gens:
            if isinstance(g, Polynomial):
                if g.ring != ring:
                    raise ReestauError("generator from a different ring")
                if not g.is_zero():
                    cleaned.append(g)
            else:
                raise ReestauError(f"not a polynomial: {g!r}")
        self.gens = tuple(cleaned)
        self._cache = {}

    @classmethod
    def parse(cls, source: str, ring: PolyRing):
        return cls(ring, ring.parse_ideal_gens(source))

    def __repr__(self):
        from .poly import format_generators

        return f"Ideal({format_generators(self.gens) or '0'})"

    # -- canonical form ---------------------------------------------------

    def groebner_basis(self, order: MonomialOrder | None = None, limits=None):
        """Reduced Groebner basis (cached per order)."""
        order = order or self.ring.order
        got = self._cache.get(order)
        if got is not None:
            return got[0]
        if order == self.ring.order:
            gb = buchberger(self.gens, self.ring, limits)
        else:
            other = self.ring.with_order(order)
            gens = [g.map_to(other) for g in self.gens]
            gb = tuple(g.map_to(self.ring) for g in buchberger(gens, other, limits))
        prepared = prepare_basis(gb) if gb else []
        self._cache[order] = (gb, prepared, {})
        return gb

    def _prepared(self):
        self.groebner_basis()
        return self._cache[self.ring.order][1:]

    def set_known_basis(self, gb):
        """Install an externally known reduced basis (e.g. monomial staircases)."""
        gb = tuple(gb)
        self._cache[self.ring.order] = (gb, prepare_basis(gb) if gb else [], {})

    def normal_form(self, f: Polynomial) -> Polynomial:
        if f.ring != self.ring:
            raise ReestauError("polynomial from a different ring")
        prepared, cache = self._prepared()
        if not prepared:
            return f
        return normal_form_terms(f, prepared, cache)

    def contains(self, f: Polynomial) -> bool:
        return self.normal_form(f).is_zero()

    def contains_ideal(self, other: "Ideal") -> bool:
        return all(self.contains(g) for g in other.gens)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        if self.ring != other.ring:
            raise ReestauError("ideal comparison across rings")
        a = self.groebner_basis()
        b = other.groebner_basis()
        return tuple(g.terms for g in a) == tuple(g.terms for g in b)

    def __hash__(self):
        return hash((self.ring, tuple(g.terms for g in self.groebner_basis())))

    def is_zero(self) -> bool:
        return not self.groebner_basis()

    def is_unit(self) -> bool:
        gb = self.groebner_basis()
        return len(gb) == 1 and gb[0].is_constant()

    def monomial_exponents(self):
        """Exponent vectors if every generator is a single term, else None."""
        if not all(g.is_monomial() for g in self.gens):
            return None
        return [g.lead_exponents() for g in self.gens]

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: "Ideal"):
        if self.ring != other.ring:
            raise ReestauError("ideal sum across rings")
        return Ideal(self.ring, self.gens + other.gens)

    def __mul__(self, other: "Ideal"):
        if self.ring != other.ring:
            raise ReestauError("ideal product across rings")
        if not self.gens or not other.gens:
            return Ideal(self.ring, ())
        return Ideal(self.ring, [a * b for a in self.gens for b in other.gens])

    def power(self, r: int) -> "Ideal":
        if r < 0:
            raise ReestauError("negative ideal power")
        if r == 0:
            return Ideal(self.ring, (self.ring.one(),))
        mono = self.monomial_exponents()
        if mono is not None:
            combos = combinations_with_replacement(mono, r)
            sums = [tuple(map(sum, zip(*combo))) for combo in combos]
            exps = minimalize_monomials(sums)
            return Ideal(self.ring, [self.ring.monomial(e) for e in exps])
        if len(self.gens) == 1:
            return Ideal(self.ring, (self.gens[0] ** r,))
        prods = []
        for combo in combinations_with_replacement(range(len(self.gens)), r):
            f = self.ring.one()
            for i in combo:
                f = f * self.gens[i]
            prods.append(f)
        return Ideal(self.ring, prods)

    # -- elimination-based toolkit ------------------------------------------

    def _eliminate_last(self, ring_big: PolyRing, gens_big, k: int):
        """GB in ring_big (elimination order on the last k vars), keep the
        elements free of those variables, returned still in ring_big."""
        gb = buchberger(gens_big, ring_big)
        n = ring_big.nvars
        out = []
        for g in gb:
            if all(all(e == 0 for e in ring_big.exponents(key)[n - k:]) for key, _ in g.terms):
                out.append(g)
        return out

    def intersect(self, other: "Ideal") -> "Ideal":
        if self.ring != other.ring:
            raise ReestauError("intersection across rings")
        if self.is_zero() or other.is_zero():
            return Ideal(self.ring, ())
        if self.is_unit():
            return Ideal(self.ring, other.gens)
        if other.is_unit():
            return Ideal(self.ring, self.gens)
        ring = self.ring
        wname = _fresh_name(ring, "w")
        big = ring.extend((wname,), MonomialOrder.elimination(1))
        pos = list(range(ring.nvars))
        w = big.gen(big.nvars - 1)
        gens_big = [g.map_to(big, pos) * w for g in self.gens]
        one_minus_w = big.one() - w
        gens_big += [g.map_to(big, pos) * one_minus_w for g in other.gens]
        kept = self._eliminate_last(big, gens_big, 1)
        return Ideal(ring, [g.map_to(ring) for g in kept])

    def colon(self, other: "Ideal") -> "Ideal":
        """The ideal quotient (self : other), computed generator-wise."""
        if self.ring != other.ring:
            raise ReestauError("colon across rings")
        if other.is_zero():
            raise ZeroDivisorIdealError("colon by the zero ideal")
        if self.is_zero():
            return Ideal(self.ring, ())
        result = None
        for f in other.gens:
            if f.is_zero():
                continue
            if f.is_constant():
                part = Ideal(self.ring, self.gens)
            else:
                meet = self.intersect(Ideal(self.ring, (f,)))
                part = Ideal(self.ring, [exact_divide(g, f) for g in meet.groebner_basis()])
            result = part if result is None else result.intersect(part)
        assert result is not None
        return result

    def saturate(self, f: Polynomial) -> "Ideal":
        """(self : f^infinity) via Rabinowitsch elimination."""
        if f.is_zero():
            raise ZeroDivisorIdealError("saturation by zero")
        if f.is_constant():
            return Ideal(self.ring, self.gens)
        ring = self.ring
        wname = _fresh_name(ring, "w")
        big = ring.extend((wname,), MonomialOrder.elimination(1))
        pos = list(range(ring.nvars))
        w = big.gen(big.nvars - 1)
        gens_big = [g.map_to(big, pos) for g in self.gens]
        gens_big.append(big.one() - w * f.map_to(big, pos))
        kept = self._eliminate_last(big, gens_big, 1)
        return Ideal(ring, [g.map_to(ring) for g in kept])

    def eliminate(self, var_names) -> "Ideal":
        """self ∩ F_p[vars \\ var_names], as an ideal of the smaller ring."""
        var_names = tuple(var_names)
        for nm in var_names:
            if nm not in self.ring._index:
                raise ReestauError(f"unknown variable {nm!r}")
        keep = [nm for nm in self.ring.names if nm not in var_names]
        if not keep:
            raise ReestauError("cannot eliminate every variable")
        k = len(var_names)
        big = PolyRing(
            self.ring.field, tuple(keep) + var_names, MonomialOrder.elimination(k)
        )
        gens_big = [g.map_to(big) for g in self.gens]
        kept = self._eliminate_last(big, gens_big, k)
        small = self.ring.subring(keep)
        return Ideal(small, [g.map_to(small) for g in kept])

    def radical_contains(self, f: Polynomial) -> bool:
        """f in sqrt(self), via saturation reaching the unit ideal."""
        if f.is_zero():
            return self.is_zero()
        return self.saturate(f).is_unit()


def _fresh_name(ring: PolyRing, stem: str) -> str:
    if stem not in ring._index:
        return stem
    i = 0
    while f"{stem}{i}" in ring._index:
        i += 1
    return f"{stem}{i}"


# -- spec-surface functions -----------------------------------------------


def groebner_basis(ideal: Ideal, order: MonomialOrder | None = None):
    return ideal.groebner_basis(order)


def normal_form(f: Polynomial, ideal: Ideal):
    return ideal.normal_form(f)


def ideal_equals(a: Ideal, b: Ideal) -> bool:
    return a == b


def colon(a: Ideal, b: Ideal) -> Ideal:
    return a.colon(b)


def intersect(a: Ideal, b: Ideal) -> Ideal:
    return a.intersect(b)


def eliminate(a: Ideal, var_names) -> Ideal:
    return a.eliminate(var_names)


def saturate(a: Ideal, f: Polynomial) -> Ideal:
    return a.saturate(f)
