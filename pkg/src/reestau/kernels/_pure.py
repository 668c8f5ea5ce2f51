"""Pure-Python arithmetic kernel.

Terms are ``(key, coeff)`` pairs with ``key`` an integer tuple (order prefix
followed by the raw exponent vector) and ``coeff`` in [1, p).  Term lists are
strictly descending by key.  The compiled kernel implements the same
contract; results must be bit-identical.
"""

IMPL = "pure"

_MISSING = object()  # divisor-cache sentinel (values are None or a hit pair)


def add_terms(A, B, p):
    """Sum of two descending term lists."""
    out = []
    i = j = 0
    la, lb = len(A), len(B)
    while i < la and j < lb:
        ka, ca = A[i]
        kb, cb = B[j]
        if ka > kb:
            out.append(A[i])
            i += 1
        elif ka < kb:
            out.append(B[j])
            j += 1
        else:
            c = (ca + cb) % p
            if c:
                out.append((ka, c))
            i += 1
            j += 1
    if i < la:
        out.extend(A[i:])
    if j < lb:
        out.extend(B[j:])
    return tuple(out)


def scale_terms(A, c, p):
    """Multiply a term list by the scalar c."""
    c %= p
    if c == 0:
        return ()
    if c == 1:
        return tuple(A)
    return tuple((k, (c * a) % p) for k, a in A)


def shift_terms(A, kshift, c, p):
    """Multiply a term list by the single term c * x^kshift (key arithmetic)."""
    c %= p
    if c == 0:
        return ()
    out = []
    for k, a in A:
        cc = (c * a) % p
        if cc:
            out.append((tuple(x + y for x, y in zip(k, kshift)), cc))
    return tuple(out)


def mul_terms(A, B, p):
    """Full product of two descending term lists."""
    if not A or not B:
        return ()
    if len(A) < len(B):
        A, B = B, A
    if len(B) == 1:
        return shift_terms(A, B[0][0], B[0][1], p)
    acc = {}
    for ka, ca in A:
        for kb, cb in B:
            k = tuple(x + y for x, y in zip(ka, kb))
            v = acc.get(k)
            if v is None:
                acc[k] = ca * cb
            else:
                acc[k] = v + ca * cb
    out = []
    for k in sorted(acc, reverse=True):
        c = acc[k] % p
        if c:
            out.append((k, c))
    return tuple(out)


def _tail_divides(bt, tail):
    for a, b in zip(bt, tail):
        if a > b:
            return False
    return True


def _merge_from(A, i0, B, p):
    """add_terms(A[i0:], B) for list A and list B."""
    out = []
    i, j = i0, 0
    la, lb = len(A), len(B)
    while i < la and j < lb:
        ka, ca = A[i]
        kb, cb = B[j]
        if ka > kb:
            out.append(A[i])
            i += 1
        elif ka < kb:
            out.append(B[j])
            j += 1
        else:
            c = (ca + cb) % p
            if c:
                out.append((ka, c))
            i += 1
            j += 1
    if i < la:
        out.extend(A[i:])
    if j < lb:
        out.extend(B[j:])
    return out


def nf_terms(f, basis, p, nvars, cache=None, skip_key=None):
    """Full normal form of a term list against a prepared monic basis.

    ``basis`` is a list of ``(lead_tail, lead_key, terms)`` sorted ascending
    by lead key; reduction always uses the first (smallest leading monomial)
    element whose lead divides the current lead — the deterministic
    tie-break contract.  ``cache`` memoizes the divisor scan per monomial
    (callers must clear it whenever the basis changes).  ``skip_key``
    excludes one basis element (interreduction); the cache is ignored then.
    """
    rem = []
    work = list(f)
    start = 0
    nw = len(work)
    use_cache = cache is not None and skip_key is None
    while start < nw:
        k, c = work[start]
        hit = _MISSING
        if use_cache:
            hit = cache.get(k, _MISSING)
        if hit is _MISSING:
            tail = k[len(k) - nvars:]
            hit = None
            for bt, bk, bterms in basis:
                if bk == skip_key:
                    continue
                if _tail_divides(bt, tail):
                    hit = (bk, bterms)
                    break
            if use_cache:
                cache[k] = hit
        if hit is None:
            rem.append((k, c))
            start += 1
            continue
        hit_key, hit_terms = hit
        kdiff = tuple(x - y for x, y in zip(k, hit_key))
        mc = p - c
        sub = []
        for kt, ct in hit_terms[1:]:
            cc = (mc * ct) % p
            if cc:
                sub.append((tuple(x + y for x, y in zip(kt, kdiff)), cc))
        work = _merge_from(work, start + 1, sub, p)
        start = 0
        nw = len(work)
    return tuple(rem)
