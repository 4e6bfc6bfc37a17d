"""Pure-Python hot kernels.

Every function here has a twin in ``_kernels.pyx`` with the same signature
and the same semantics; ``kernels.py`` chooses one at import time.
Values are generic field elements (mpq, Fraction, mpf).
"""


def pochhammer(a, q, k):
    r = q**0
    t = a
    for _ in range(k):
        r = r * (1 - t)
        t = t * q
    return r


def pochhammer_ladder(a, q, k):
    """Return [(a;q)_0, ..., (a;q)_k]."""
    r = q**0
    out = [r]
    t = a
    for _ in range(k):
        r = r * (1 - t)
        out.append(r)
        t = t * q
    return out


def first_vanishing(bases, q, n):
    """First (i, j) with 1 - bases[i] q^j == 0 for j < n, scanning j outermost.

    Returns None when no factor vanishes.  (b;q)_k is zero exactly when such
    a j < k exists.
    """
    powers = list(bases)
    for j in range(n):
        for i, t in enumerate(powers):
            if t == 1:
                return (i, j)
        powers = [t * q for t in powers]
    return None


def series_sum(upper, lower, q, z, n, vwp=None):
    """Sum_{k=0}^{n} prod (upper;q)_k / prod (lower;q)_k * z^k.

    ``lower`` must already contain the base q.  When ``vwp`` is given, each
    term also carries (1 - vwp q^{2k}) / (1 - vwp).  Terms are produced by
    multiplying the previous one by its ratio; the loop stops early once a
    numerator factor vanishes.
    """
    ut = list(upper)
    lt = list(lower)
    term = q**0
    total = term
    if vwp is not None:
        a2 = vwp
        base = 1 - vwp
        q2 = q * q
    for k in range(n):
        num = z
        for j, t in enumerate(ut):
            num = num * (1 - t)
            ut[j] = t * q
        if num == 0:
            break
        den = 1
        for j, t in enumerate(lt):
            den = den * (1 - t)
            lt[j] = t * q
        term = term * num / den
        if vwp is not None:
            a2 = a2 * q2
            total = total + term * (1 - a2) / base
        else:
            total = total + term
    return total


def matmul(A, B):
    """Dense product of square list-of-lists matrices, skipping zero entries of A."""
    n = len(A)
    m = len(B[0]) if B else 0
    out = []
    for i in range(n):
        row = [0] * m
        for k, a in enumerate(A[i]):
            if a == 0:
                continue
            bk = B[k]
            for j in range(m):
                b = bk[j]
                if b != 0:
                    row[j] = row[j] + a * b
        out.append(row)
    return out
