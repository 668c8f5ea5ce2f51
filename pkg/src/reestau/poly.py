"""Sparse multivariate polynomials over prime fields.

A polynomial is an immutable list of ``(key, coeff)`` terms, strictly
descending under the ring's monomial order.  Keys are the order's sort keys;
the raw exponent vector is always the trailing slice of a key (see
``orders``), so monomial arithmetic reduces to componentwise tuple work.
"""

from .errors import ContextMismatchError, ParseError, ReestauError
from .fields import PrimeField
from .kernels import add_terms, mul_terms, nf_terms, scale_terms, shift_terms
from .orders import MonomialOrder


class PolyRing:
    """F_p[x_1..x_n] with a fixed monomial order."""

    __slots__ = ("field", "names", "order", "nvars", "_key", "_index", "_one_key")

    def __init__(self, field: PrimeField, names, order: MonomialOrder | None = None):
        names = tuple(names)
        if not names:
            raise ReestauError("a polynomial ring needs at least one variable")
        if len(set(names)) != len(names):
            raise ReestauError(f"duplicate variable names in {names}")
        self.field = field
        self.names = names
        self.order = order if order is not None else MonomialOrder.grevlex()
        self.nvars = len(names)
        self._key = self.order.key_function(self.nvars)
        self._index = {nm: i for i, nm in enumerate(names)}
        self._one_key = self._key((0,) * self.nvars)

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.field == other.field
            and self.names == other.names
            and self.order == other.order
        )

    def __hash__(self):
        return hash((self.field, self.names, self.order))

    def __repr__(self):
        return f"PolyRing(F_{self.field.p}[{', '.join(self.names)}], {self.order!r})"

    # -- monomial helpers ------------------------------------------------

    def key(self, exps):
        if len(exps) != self.nvars:
            raise ReestauError(f"exponent vector length {len(exps)} != {self.nvars}")
        if any(e < 0 for e in exps):
            raise ReestauError(f"negative exponent in {tuple(exps)}")
        return self._key(exps)

    def exponents(self, key):
        return key[len(key) - self.nvars:]

    # -- element constructors --------------------------------------------

    def zero(self):
        return Polynomial(self, ())

    def one(self):
        return self.constant(1)

    def constant(self, c: int):
        c %= self.field.p
        if c == 0:
            return Polynomial(self, ())
        return Polynomial(self, ((self._one_key, c),))

    def monomial(self, exps, coeff: int = 1):
        coeff %= self.field.p
        if coeff == 0:
            return Polynomial(self, ())
        return Polynomial(self, ((self.key(exps), coeff),))

    def gen(self, i: int):
        exps = [0] * self.nvars
        exps[i] = 1
        return self.monomial(exps)

    def gens(self):
        return tuple(self.gen(i) for i in range(self.nvars))

    def var(self, name: str):
        return self.gen(self._index[name])

    def from_dict(self, coeffs):
        """Build a polynomial from an {exponent tuple: coefficient} mapping."""
        p = self.field.p
        terms = []
        for exps, c in coeffs.items():
            c %= p
            if c:
                terms.append((self.key(exps), c))
        terms.sort(reverse=True)
        return Polynomial(self, tuple(terms))

    # -- ring derivation --------------------------------------------------

    def with_order(self, order: MonomialOrder):
        return PolyRing(self.field, self.names, order)

    def extend(self, extra_names, order: MonomialOrder | None = None):
        """Append variables (used for elimination helpers)."""
        return PolyRing(self.field, self.names + tuple(extra_names), order or self.order)

    def subring(self, keep_names, order: MonomialOrder | None = None):
        return PolyRing(self.field, tuple(keep_names), order)

    def parse(self, source: str):
        return parse_polynomial(source, self)

    def parse_ideal_gens(self, source: str):
        return parse_generators(source, self)


class Polynomial:
    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms):
        self.ring = ring
        self.terms = terms  # tuple of (key, coeff), strictly descending

    # -- predicates and accessors ----------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.terms[0][0] == self.ring._one_key)

    def is_monomial(self) -> bool:
        """Single term (monomial times a scalar)."""
        return len(self.terms) == 1

    def lead_key(self):
        if not self.terms:
            raise ReestauError("the zero polynomial has no leading term")
        return self.terms[0][0]

    def lead_exponents(self):
        return self.ring.exponents(self.lead_key())

    def lead_coeff(self) -> int:
        if not self.terms:
            return 0
        return self.terms[0][1]

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(self.ring.exponents(k)) for k, _ in self.terms)

    def monomials(self):
        """Exponent vectors of the support, descending under the order."""
        return tuple(self.ring.exponents(k) for k, _ in self.terms)

    def coefficient(self, exps) -> int:
        k = self.ring.key(exps)
        for key, c in self.terms:
            if key == k:
                return c
        return 0

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, self.terms))

    # -- arithmetic --------------------------------------------------------

    def _check(self, other):
        if self.ring != other.ring:
            raise ContextMismatchError(f"mixed rings: {self.ring!r} vs {other.ring!r}")

    def __add__(self, other):
        if isinstance(other, int):
            other = self.ring.constant(other)
        self._check(other)
        return Polynomial(self.ring, add_terms(self.terms, other.terms, self.ring.field.p))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, scale_terms(self.terms, -1, self.ring.field.p))

    def __sub__(self, other):
        if isinstance(other, int):
            other = self.ring.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return Polynomial(self.ring, scale_terms(self.terms, other, self.ring.field.p))
        self._check(other)
        return Polynomial(self.ring, mul_terms(self.terms, other.terms, self.ring.field.p))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ReestauError("negative exponent")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base_needed = k > 1
            k >>= 1
            if base_needed and k:
                base = base * base
        return result

    def monic(self):
        lc = self.lead_coeff()
        if lc in (0, 1):
            return self
        return self * self.ring.field.inv(lc)

    def shift(self, exps, coeff: int = 1):
        """Multiply by the single term coeff * x^exps."""
        return Polynomial(
            self.ring, shift_terms(self.terms, self.ring.key(exps), coeff, self.ring.field.p)
        )

    def derivative(self, i: int):
        """Partial derivative with respect to the i-th variable."""
        p = self.ring.field.p
        out = {}
        for k, c in self.terms:
            exps = list(self.ring.exponents(k))
            e = exps[i]
            cc = (c * e) % p
            if e > 0 and cc:
                exps[i] = e - 1
                out[tuple(exps)] = (out.get(tuple(exps), 0) + cc) % p
        return self.ring.from_dict(out)

    def substitute(self, images):
        """Evaluate under variable -> polynomial images (all in a common ring).

        ``images`` is a sequence indexed like the variables; entries may be
        Polynomials of the target ring or integers (constants).
        """
        if len(images) != self.ring.nvars:
            raise ReestauError("need one image per variable")
        target = None
        for im in images:
            if isinstance(im, Polynomial):
                target = im.ring
                break
        if target is None:
            raise ReestauError("at least one image must be a Polynomial")
        imgs = [im if isinstance(im, Polynomial) else target.constant(im) for im in images]
        pow_cache = [dict() for _ in imgs]

        def ipow(j, e):
            cache = pow_cache[j]
            got = cache.get(e)
            if got is None:
                got = imgs[j] ** e
                cache[e] = got
            return got

        total = target.zero()
        for k, c in self.terms:
            exps = self.ring.exponents(k)
            piece = target.constant(c)
            for j, e in enumerate(exps):
                if e:
                    piece = piece * ipow(j, e)
            total = total + piece
        return total

    def map_to(self, other: PolyRing, positions=None):
        """Re-home into ``other`` placing variable i at ``positions[i]``.

        Without ``positions``, variables are matched by name; a nonzero
        exponent on a variable missing from ``other`` is an error.
        """
        if positions is None:
            positions = []
            for nm in self.ring.names:
                positions.append(other._index.get(nm, -1))
        out = {}
        for k, c in self.terms:
            exps = self.ring.exponents(k)
            new = [0] * other.nvars
            for i, e in enumerate(exps):
                if e == 0:
                    continue
                j = positions[i]
                if j < 0:
                    raise ReestauError(
                        f"variable {self.ring.names[i]!r} does not exist in the target ring"
                    )
                new[j] = e
            out[tuple(new)] = (out.get(tuple(new), 0) + c) % other.field.p
        return other.from_dict(out)

    def weighted_degrees(self, weights):
        """Set of weight-gradings of the terms (len == 1 iff homogeneous)."""
        return {
            sum(w * e for w, e in zip(weights, self.ring.exponents(k))) for k, _ in self.terms
        }

    # -- printing ----------------------------------------------------------

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"<{format_polynomial(self)} over F_{self.ring.field.p}>"


def format_polynomial(f: Polynomial) -> str:
    if not f.terms:
        return "0"
    ring = f.ring
    parts = []
    for k, c in f.terms:
        exps = ring.exponents(k)
        factors = []
        for nm, e in zip(ring.names, exps):
            if e == 1:
                factors.append(nm)
            elif e > 1:
                factors.append(f"{nm}^{e}")
        if not factors:
            parts.append(str(c))
        elif c == 1:
            parts.append("*".join(factors))
        else:
            parts.append(f"{c}*" + "*".join(factors))
    return " + ".join(parts)


def format_generators(gens) -> str:
    return ", ".join(format_polynomial(g) for g in gens)


# -- parsing ---------------------------------------------------------------
#
# poly   := term (('+'|'-') term)*
# term   := coeff ('*' factor)* | factor ('*' factor)*
# factor := var ('^' uint)?
# coeff  := uint
#
# Whitespace is insignificant.  A leading '+'/'-' before the first term is
# accepted as a convenience.  Ideals are comma-separated polynomials.


class _Scanner:
    def __init__(self, source: str):
        self.src = source
        self.pos = 0
        self.line = 1
        self.col = 1

    def _advance(self, n=1):
        for _ in range(n):
            if self.pos < len(self.src) and self.src[self.pos] == "\n":
                self.line += 1
                self.col = 1
            else:
                self.col += 1
            self.pos += 1

    def skip_ws(self):
        while self.pos < len(self.src) and self.src[self.pos].isspace():
            self._advance()

    def peek(self):
        self.skip_ws()
        if self.pos >= len(self.src):
            return ""
        return self.src[self.pos]

    def error(self, message):
        raise ParseError(message, self.line, self.col)

    def take_uint(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.src) and self.src[self.pos].isdigit():
            self._advance()
        if self.pos == start:
            self.error("expected an unsigned integer")
        return int(self.src[start:self.pos])

    def take_name(self) -> str:
        self.skip_ws()
        start = self.pos
        ch = self.src[self.pos] if self.pos < len(self.src) else ""
        if not (ch.isalpha() or ch == "_"):
            self.error("expected a variable name")
        while self.pos < len(self.src) and (
            self.src[self.pos].isalnum() or self.src[self.pos] == "_"
        ):
            self._advance()
        return self.src[start:self.pos]

    def expect(self, ch):
        self.skip_ws()
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self._advance()


def _parse_factor(sc: _Scanner, ring: PolyRing):
    name = sc.take_name()
    idx = ring._index.get(name)
    if idx is None:
        sc.error(f"unknown variable {name!r}")
    e = 1
    if sc.peek() == "^":
        sc.expect("^")
        e = sc.take_uint()
    return idx, e


def _parse_term(sc: _Scanner, ring: PolyRing):
    coeff = 1
    exps = [0] * ring.nvars
    ch = sc.peek()
    if ch.isdigit():
        coeff = sc.take_uint()
    else:
        idx, e = _parse_factor(sc, ring)
        exps[idx] += e
    while sc.peek() == "*" or sc.peek().isalpha() or sc.peek() == "_":
        if sc.peek() == "*":
            sc.expect("*")
        idx, e = _parse_factor(sc, ring)
        exps[idx] += e
    return coeff, tuple(exps)


def _parse_poly(sc: _Scanner, ring: PolyRing) -> Polynomial:
    p = ring.field.p
    acc: dict = {}
    sign = 1
    ch = sc.peek()
    if ch in "+-":
        sc.expect(ch)
        if ch == "-":
            sign = -1
    while True:
        coeff, exps = _parse_term(sc, ring)
        acc[exps] = (acc.get(exps, 0) + sign * coeff) % p
        ch = sc.peek()
        if ch == "+":
            sc.expect("+")
            sign = 1
        elif ch == "-":
            sc.expect("-")
            sign = -1
        else:
            break
    return ring.from_dict(acc)


def parse_polynomial(source: str, ring: PolyRing) -> Polynomial:
    sc = _Scanner(source)
    f = _parse_poly(sc, ring)
    sc.skip_ws()
    if sc.pos != len(sc.src):
        sc.error(f"unexpected input {sc.src[sc.pos]!r}")
    return f


def parse_generators(source: str, ring: PolyRing):
    """Parse a comma-separated generator list."""
    sc = _Scanner(source)
    gens = [_parse_poly(sc, ring)]
    while sc.peek() == ",":
        sc.expect(",")
        gens.append(_parse_poly(sc, ring))
    sc.skip_ws()
    if sc.pos != len(sc.src):
        sc.error(f"unexpected input {sc.src[sc.pos]!r}")
    return gens


def normal_form_terms(f: Polynomial, prepared_basis, cache=None, skip_key=None):
    """Kernel normal form against a prepared basis (see ideals.prepare_basis)."""
    return Polynomial(
        f.ring,
        nf_terms(f.terms, prepared_basis, f.ring.field.p, f.ring.nvars, cache, skip_key),
    )
