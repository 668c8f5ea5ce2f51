"""Monomial orders realized as sort keys.

Every order is encoded as an integer-linear, injective key function on
exponent vectors such that

  * tuple comparison of keys realizes the order,
  * keys add componentwise under monomial multiplication,
  * the final ``nvars`` entries of a key are the raw exponents.

The last point keeps divisibility tests uniform across orders (componentwise
comparison of the key tails), which is what the arithmetic kernels use.
"""

from .errors import ReestauError

LEX = "lex"
GREVLEX = "grevlex"
BLOCK = "block"  # elimination-block(k): last k variables dominate
WEIGHTED = "weighted"  # weight vector first, grevlex tie-break


def _grevlex_chunk(exps):
    # (total degree, reversed negated exponents): tuple compare = grevlex
    return (sum(exps),) + tuple(-e for e in reversed(exps))


class MonomialOrder:
    """Specification of a monomial order; bound to a variable count by rings."""

    __slots__ = ("kind", "block_size", "weights")

    def __init__(self, kind, block_size=None, weights=None):
        if kind not in (LEX, GREVLEX, BLOCK, WEIGHTED):
            raise ReestauError(f"unknown order kind {kind!r}")
        if kind == BLOCK:
            if not isinstance(block_size, int) or block_size < 1:
                raise ReestauError("elimination block size must be a positive integer")
        if kind == WEIGHTED:
            weights = tuple(weights)
            if any((not isinstance(w, int)) or w < 0 for w in weights):
                raise ReestauError("weights must be non-negative integers (well-ordering)")
        self.kind = kind
        self.block_size = block_size
        self.weights = weights

    @classmethod
    def lex(cls):
        return cls(LEX)

    @classmethod
    def grevlex(cls):
        return cls(GREVLEX)

    @classmethod
    def elimination(cls, k):
        """Block order ranking any monomial in the last k variables above the rest."""
        return cls(BLOCK, block_size=k)

    @classmethod
    def weighted(cls, weights):
        return cls(WEIGHTED, weights=weights)

    def __eq__(self, other):
        return (
            isinstance(other, MonomialOrder)
            and self.kind == other.kind
            and self.block_size == other.block_size
            and self.weights == other.weights
        )

    def __hash__(self):
        return hash((self.kind, self.block_size, self.weights))

    def __repr__(self):
        if self.kind == BLOCK:
            return f"MonomialOrder.elimination({self.block_size})"
        if self.kind == WEIGHTED:
            return f"MonomialOrder.weighted({self.weights})"
        return f"MonomialOrder.{self.kind}()"

    def key_function(self, nvars):
        """Return key(exps) -> tuple for an ambient of ``nvars`` variables."""
        kind = self.kind
        if kind == LEX:
            return lambda exps: tuple(exps)
        if kind == GREVLEX:
            return lambda exps: _grevlex_chunk(exps) + tuple(exps)
        if kind == BLOCK:
            k = self.block_size
            if k >= nvars:
                raise ReestauError("elimination block must be a proper subset of the variables")

            def key(exps, _k=k):
                t = tuple(exps)
                return _grevlex_chunk(t[-_k:]) + _grevlex_chunk(t[:-_k]) + t

            return key
        if kind == WEIGHTED:
            w = self.weights
            if len(w) != nvars:
                raise ReestauError(f"weight vector length {len(w)} != variable count {nvars}")

            def key(exps, _w=w):
                t = tuple(exps)
                return (sum(a * b for a, b in zip(_w, t)),) + _grevlex_chunk(t) + t

            return key
        raise AssertionError(kind)


def key_exponents(key, nvars):
    """Recover the exponent vector from a key (the trailing ``nvars`` entries)."""
    return key[len(key) - nvars:]
