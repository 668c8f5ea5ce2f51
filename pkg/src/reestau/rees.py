"""Presentations of Rees and extended Rees algebras with their Z-grading.

For a = (f_1..f_m) in R = F_p[x_1..x_n]:

  S = R[a t]        ~ P_S / J_S,  P_S = F_p[x.., y1..ym]
  T = R[a t, 1/t]   ~ P_T / J_T,  P_T = F_p[x.., y1..ym, u]

with deg x_i = 0, deg y_j = 1, deg u = -1, and defining ideals obtained by
eliminating t from (y_j - f_j t [, u t - 1]).  The substitution
psi: y_j -> f_j, u -> 1 reads the R-coefficient of t^(deg) off a homogeneous
element, which is how graded components come back as ideals of R.
"""

from dataclasses import dataclass, field

from .errors import InhomogeneousGeneratorError, ReestauError
from .ideals import Ideal, _fresh_name
from .orders import MonomialOrder
from .poly import Polynomial, PolyRing

MAX_REES_GENERATORS = 6  # stars-and-bars enumeration bound


@dataclass
class PresentedGradedRing:
    """Ambient polynomial ring, defining ideal, and integer variable degrees."""

    ring: PolyRing
    defining: Ideal
    degrees: tuple
    base_nvars: int
    variant: str  # "S" | "T" | "ambient"
    secondary: tuple | None = None  # x-degrees when the input ideal is graded
    _cartier_cache: dict = field(default_factory=dict, repr=False)
    _test_element_cache: list = field(default_factory=list, repr=False)
    _ci_cache: list = field(default_factory=list, repr=False)

    def degree_of(self, f: Polynomial) -> int:
        degs = f.weighted_degrees(self.degrees)
        if len(degs) != 1:
            raise InhomogeneousGeneratorError(f"{f} is not degree-homogeneous")
        return next(iter(degs))

    def is_homogeneous(self, f: Polynomial) -> bool:
        return f.is_zero() or len(f.weighted_degrees(self.degrees)) == 1

    def homogeneous_parts(self, f: Polynomial) -> dict:
        parts: dict = {}
        for k, c in f.terms:
            exps = self.ring.exponents(k)
            d = sum(w * e for w, e in zip(self.degrees, exps))
            parts.setdefault(d, {})[exps] = c
        return {d: self.ring.from_dict(coeffs) for d, coeffs in sorted(parts.items())}


@dataclass
class ReesData:
    base: PolyRing
    a_gens: tuple
    S: PresentedGradedRing
    T: PresentedGradedRing

    def presentation(self, variant: str) -> PresentedGradedRing:
        if variant == "S":
            return self.S
        if variant == "T":
            return self.T
        raise ReestauError(f"unknown Rees variant {variant!r}")

    def psi(self, g: Polynomial, variant: str = "T") -> Polynomial:
        """Substitute y_j -> f_j, u -> 1, x_i -> x_i, landing in the base ring."""
        pres = self.presentation(variant)
        if g.ring != pres.ring:
            raise ReestauError("psi applied to a polynomial from the wrong ring")
        n = self.base.nvars
        m = len(self.a_gens)
        images = [self.base.gen(i) for i in range(n)]
        images += list(self.a_gens)
        if variant == "T":
            images.append(1)
        return g.substitute(images)


def _build_presentation(a: Ideal, variant: str, limits=None) -> PresentedGradedRing:
    R = a.ring
    gens = a.gens
    m = len(gens)
    ynames = []
    for j in range(m):
        ynames.append(_fresh_name(R, f"y{j + 1}"))
    uname = _fresh_name(R, "u") if variant == "T" else None
    pnames = R.names + tuple(ynames) + ((uname,) if uname else ())
    P = PolyRing(R.field, pnames)
    tname = _fresh_name(P, "t")
    E = PolyRing(R.field, pnames + (tname,), MonomialOrder.elimination(1))
    t = E.gen(E.nvars - 1)
    pos_base = [E._index[nm] for nm in R.names]
    egens = []
    for j, f in enumerate(gens):
        yj = E.var(ynames[j])
        egens.append(yj - f.map_to(E, pos_base) * t)
    if uname:
        egens.append(E.var(uname) * t - E.one())
    from .ideals import buchberger

    gb = buchberger(egens, E, limits)
    kept = []
    for g in gb:
        if all(E.exponents(k)[-1] == 0 for k, _ in g.terms):
            kept.append(g.map_to(P))
    J = Ideal(P, kept)
    degrees = (0,) * R.nvars + (1,) * m + ((-1,) if uname else ())
    secondary = None
    if all(len(f.weighted_degrees((1,) * R.nvars)) == 1 for f in gens):
        secondary = (1,) * R.nvars + tuple(
            next(iter(f.weighted_degrees((1,) * R.nvars))) for f in gens
        ) + ((0,) if uname else ())
    pres = PresentedGradedRing(P, J, degrees, R.nvars, variant, secondary)
    _validate_presentation(pres, a)
    return pres


def _validate_presentation(pres: PresentedGradedRing, a: Ideal) -> None:
    rees_stub = ReesData(a.ring, a.gens, pres, pres)  # psi only needs names/gens
    for g in pres.defining.groebner_basis():
        if not pres.is_homogeneous(g):
            raise AssertionError(f"defining ideal not graded: {g}")
        if not rees_stub.psi(g, pres.variant).is_zero():
            raise AssertionError(f"substitution check failed on {g}")


def rees_presentation(a: Ideal, variant: str, limits=None) -> PresentedGradedRing:
    """Defining presentation of S = R[a t] or T = R[a t, 1/t]."""
    if variant not in ("S", "T"):
        raise ReestauError(f"variant must be 'S' or 'T', got {variant!r}")
    if a.is_zero():
        raise ReestauError("Rees presentation of the zero ideal")
    if any(g.is_zero() for g in a.gens):
        raise ReestauError("zero generator in the Rees input")
    if len(a.gens) > MAX_REES_GENERATORS:
        raise ReestauError(
            f"at most {MAX_REES_GENERATORS} generators supported, got {len(a.gens)}"
        )
    return _build_presentation(a, variant, limits)


def rees_data(a: Ideal, limits=None) -> ReesData:
    return ReesData(
        a.ring,
        a.gens,
        _build_presentation(a, "S", limits),
        _build_presentation(a, "T", limits),
    )


def homogenize_check(gens, pres: PresentedGradedRing):
    """Split generators into degree-homogeneous parts.

    Valid whenever each part lies back in the ideal spanned by the original
    generators together with the defining ideal; otherwise the input ideal
    was not homogeneous and we refuse.
    """
    refined = []
    needs_membership = []
    for g in gens:
        if g.is_zero():
            continue
        parts = list(pres.homogeneous_parts(g).values())
        if len(parts) == 1:
            refined.append(g)
        else:
            refined.extend(parts)
            needs_membership.append((g, parts))
    if needs_membership:
        full = Ideal(pres.ring, tuple(gens) + pres.defining.gens)
        for g, parts in needs_membership:
            for part in parts:
                if not full.contains(part):
                    raise InhomogeneousGeneratorError(
                        f"part {part} of {g} is not in the ideal: input not homogeneous"
                    )
    return refined


def graded_component(gens, n: int, rees: ReesData, variant: str = "T") -> Ideal:
    """Degree-n component of the ideal (gens) + J of the presented ring,
    realized as an ideal of the base ring via psi.

    For a homogeneous generator g of degree d the contribution is
    psi(g) * a^(n-d) when n >= d (stars-and-bars over the y-monomials) and
    psi(g) alone when n < d (multiplication by u drops degree for free).
    """
    from itertools import combinations_with_replacement

    pres = rees.presentation(variant)
    if variant == "S" and n < 0:
        raise ReestauError("the Rees algebra S has no negative components")
    work = homogenize_check(list(gens) + list(pres.defining.gens), pres)
    base = rees.base
    m = len(rees.a_gens)
    contributions = []
    pow_cache: dict = {}

    def a_monomial(combo) -> Polynomial:
        got = pow_cache.get(combo)
        if got is None:
            got = base.one()
            for i in combo:
                got = got * rees.a_gens[i]
            pow_cache[combo] = got
        return got

    for g in work:
        d = pres.degree_of(g)
        img = rees.psi(g, variant)
        if img.is_zero():
            continue
        if n >= d:
            for combo in combinations_with_replacement(range(m), n - d):
                contributions.append(img * a_monomial(combo))
        else:
            if variant == "S":
                continue  # no u available: g contributes nothing below its degree
            contributions.append(img)
    return Ideal(base, contributions)
