"""Pure-Python arithmetic kernels.

Fallback twin of the compiled core in ``_corecy``; both expose the same
functions with identical semantics.  A coefficient vector is a sequence of
ints in ``[0, p)``, little-endian in the power basis; ``mod`` is the monic
modulus of length ``m + 1``.  Every function returns fresh lists and never
mutates its arguments.
"""

BACKEND = "python"


def addmod(a, b, p):
    return [(x + y) % p for x, y in zip(a, b)]


def submod(a, b, p):
    return [(x - y) % p for x, y in zip(a, b)]


def negmod(a, p):
    return [-x % p for x in a]


def mulmod(a, b, mod, p):
    """Product of two length-m vectors, reduced by the monic ``mod``."""
    m = len(mod) - 1
    if m == 1:
        return [a[0] * b[0] % p]
    prod = [0] * (2 * m - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    # fold x^k = -sum(mod[j] x^(k-m+j)) for k from the top down
    for k in range(2 * m - 2, m - 1, -1):
        c = prod[k]
        if c:
            prod[k] = 0
            off = k - m
            for j in range(m):
                mj = mod[j]
                if mj:
                    prod[off + j] = (prod[off + j] - c * mj) % p
    return prod[:m]


def matvec(mat, v, p):
    """Apply the flat row-major m*m matrix ``mat`` to ``v``, entries mod p."""
    m = len(v)
    out = [0] * m
    for i in range(m):
        base = i * m
        acc = 0
        for j in range(m):
            acc += mat[base + j] * v[j]
        out[i] = acc % p
    return out


def eval_all(coeff_rows, frob_mats, mod, p):
    """Evaluate sum_i c_i * F_i(x) at every element of GF(p^m).

    ``coeff_rows[i]`` is the coefficient vector c_i and ``frob_mats[i]`` the
    flat matrix of the Frobenius power attached to term i.  Elements are
    enumerated in encoding order; entry enc(x) of the result is enc(value).
    """
    m = len(mod) - 1
    order = p**m
    out = [0] * order
    x = [0] * m
    terms = list(zip(coeff_rows, frob_mats))
    for idx in range(order):
        acc = [0] * m
        for row, fm in terms:
            y = matvec(fm, x, p)
            t = mulmod(row, y, mod, p)
            for k in range(m):
                s = acc[k] + t[k]
                acc[k] = s - p if s >= p else s
        enc = 0
        for k in range(m - 1, -1, -1):
            enc = enc * p + acc[k]
        out[idx] = enc
        for k in range(m):
            xk = x[k] + 1
            if xk == p:
                x[k] = 0
            else:
                x[k] = xk
                break
    return out
