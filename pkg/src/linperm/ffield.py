"""Exact arithmetic in GF(p^m) on a single polynomial basis.

A :class:`FieldCtx` fixes a prime p, tower parameters e and n (q = p^e, the
ambient field is GF(q^n), total degree m = e*n over GF(p)) and a monic
irreducible modulus of degree m.  Elements are coefficient vectors of length
m over GF(p); the integer encoding enc(x) = sum(coeffs[i] * p**i) is a
bijection onto range(p**m) and is the text form used at every interface.

The q-power Frobenius is the e-fold p-power Frobenius, so one basis carries
the whole tower.  Frobenius maps are applied as cached GF(p)-linear matrices,
and relative norms are products of Frobenius images, so no big-integer
exponent is ever formed on the main arithmetic paths.
"""

from __future__ import annotations

import functools

from . import _kernel
from .errors import ContextMismatchError

# Coefficient products must fit a signed 64-bit word in the compiled core.
MAX_PRIME = 2**31 - 1


def is_prime(v: int) -> bool:
    if v < 2:
        return False
    if v < 4:
        return True
    if v % 2 == 0:
        return False
    f = 3
    while f * f <= v:
        if v % f == 0:
            return False
        f += 2
    return True


def int_to_coeffs(value: int, length: int, p: int) -> tuple[int, ...]:
    """Little-endian base-p digits of ``value``, padded to ``length``."""
    digits = []
    for _ in range(length):
        value, rem = divmod(value, p)
        digits.append(rem)
    if value:
        raise ValueError("encoding out of range for this field")
    return tuple(digits)


def coeffs_to_int(coeffs, p: int) -> int:
    enc = 0
    for c in reversed(coeffs):
        enc = enc * p + c
    return enc


# ---------------------------------------------------------------------------
# polynomial arithmetic over GF(p) on trimmed little-endian lists
# ---------------------------------------------------------------------------

def _ptrim(v):
    i = len(v)
    while i and v[i - 1] == 0:
        i -= 1
    return v[:i]


def _pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _ptrim(out)


def _psub(a, b, p):
    length = max(len(a), len(b))
    out = [0] * length
    for i in range(length):
        ai = a[i] if i < len(a) else 0
        bi = b[i] if i < len(b) else 0
        out[i] = (ai - bi) % p
    return _ptrim(out)


def _pdivmod(a, b, p):
    """Quotient and remainder of trimmed polynomials; ``b`` must be nonzero."""
    a = list(a)
    db = len(b) - 1
    if len(a) - 1 < db:
        return [], _ptrim(a)
    lead_inv = pow(b[-1], p - 2, p)
    q = [0] * (len(a) - db)
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k]
        if c:
            f = c * lead_inv % p
            q[k - db] = f
            for j in range(db + 1):
                a[k - db + j] = (a[k - db + j] - f * b[j]) % p
    return _ptrim(q), _ptrim(a)


def _pgcd(a, b, p):
    a, b = _ptrim(list(a)), _ptrim(list(b))
    while b:
        _, r = _pdivmod(a, b, p)
        a, b = b, r
    return a


def _poly_invmod(a, modulus, p):
    """Inverse of the length-m vector ``a`` modulo the irreducible modulus."""
    m = len(modulus) - 1
    r0, r1 = list(modulus), _ptrim(list(a))
    if not r1:
        raise ZeroDivisionError("inverse of the zero field element")
    t0, t1 = [], [1]
    while r1:
        q, r = _pdivmod(r0, r1, p)
        r0, r1 = r1, r
        t0, t1 = t1, _psub(t0, _pmul(q, t1, p), p)
    if len(r0) != 1:
        raise ArithmeticError("element not invertible; modulus is reducible")
    scale = pow(r0[0], p - 2, p)
    inv = [c * scale % p for c in t0]
    inv.extend([0] * (m - len(inv)))
    return inv


def _pow_vec(vec, exponent, modulus, p):
    """Square-and-multiply power of a residue vector mod ``modulus``."""
    m = len(modulus) - 1
    result = [1] + [0] * (m - 1)
    base = list(vec)
    k = exponent
    while k:
        if k & 1:
            result = _kernel.mulmod(result, base, modulus, p)
        k >>= 1
        if k:
            base = _kernel.mulmod(base, base, modulus, p)
    return result


# ---------------------------------------------------------------------------
# irreducibility and modulus search
# ---------------------------------------------------------------------------

def _is_irreducible(f, p: int) -> bool:
    """Irreducibility of the monic polynomial ``f`` over GF(p).

    Degree <= 8 uses trial division by every monic divisor candidate of
    degree <= m/2; above that, factors of degree j are detected through
    gcd(x^(p^j) - x, f) while iterating the Frobenius power of x.
    """
    m = len(f) - 1
    if m == 1:
        return True
    if f[0] == 0:
        return False
    if m <= 8:
        for dd in range(1, m // 2 + 1):
            for tail in range(p**dd):
                g = list(int_to_coeffs(tail, dd, p)) + [1]
                _, rem = _pdivmod(list(f), g, p)
                if not rem:
                    return False
        return True
    x_vec = [0, 1] + [0] * (m - 2)
    t = list(x_vec)
    for _ in range(m // 2):
        t = _pow_vec(t, p, f, p)
        diff = _psub(t, x_vec, p)
        if len(_pgcd(f, diff, p)) != 1:
            return False
    return True


@functools.lru_cache(maxsize=None)
def find_irreducible(p: int, m: int) -> tuple[int, ...]:
    """Monic irreducible of degree m over GF(p) with the smallest encoding.

    The encoding includes the leading coefficient, so the scan starts at
    p**m (the monic polynomial x^m) and the result is deterministic.
    """
    if not is_prime(p):
        raise ValueError(f"p={p} is not prime")
    if m < 1:
        raise ValueError(f"degree m={m} must be positive")
    for tail in range(p**m):
        f = int_to_coeffs(tail, m, p) + (1,)
        if _is_irreducible(f, p):
            return f
    raise AssertionError("unreachable: an irreducible of every degree exists")


# ---------------------------------------------------------------------------
# field context and elements
# ---------------------------------------------------------------------------

class FieldCtx:
    """Immutable description of GF(p^m) with its tower split m = e*n.

    Two contexts compare equal when (p, e, n, modulus) agree; equal contexts
    are interchangeable.  Frobenius matrices are cached lazily per power, so
    sharing one context across many operations is cheap and thread-safe in
    the memoized-recompute sense.
    """

    __slots__ = ("p", "e", "n", "m", "q", "order", "modulus", "_frob")

    def __init__(self, p: int, e: int, n: int, modulus=None):
        if not isinstance(p, int) or not is_prime(p):
            raise ValueError(f"p={p} is not prime")
        if p > MAX_PRIME:
            raise ValueError(f"p={p} exceeds the word-size bound {MAX_PRIME}")
        if not isinstance(e, int) or e < 1:
            raise ValueError(f"e={e} must be a positive integer")
        if not isinstance(n, int) or n < 1:
            raise ValueError(f"n={n} must be a positive integer")
        m = e * n
        if modulus is None:
            modulus = find_irreducible(p, m)
        else:
            modulus = tuple(int(c) for c in modulus)
            if len(modulus) != m + 1:
                raise ValueError(f"modulus must have degree m={m}")
            if modulus[-1] != 1:
                raise ValueError("modulus must be monic")
            if any(c < 0 or c >= p for c in modulus):
                raise ValueError("modulus coefficients must lie in [0, p)")
            if not _is_irreducible(modulus, p):
                raise ValueError("modulus is reducible over GF(p)")
        self.p = p
        self.e = e
        self.n = n
        self.m = m
        self.q = p**e
        self.order = p**m
        self.modulus = modulus
        self._frob = {}

    def __eq__(self, other):
        if not isinstance(other, FieldCtx):
            return NotImplemented
        return (self.p, self.e, self.n, self.modulus) == (
            other.p, other.e, other.n, other.modulus)

    def __hash__(self):
        return hash((self.p, self.e, self.n, self.modulus))

    def __repr__(self):
        return (f"FieldCtx(p={self.p}, e={self.e}, n={self.n}, "
                f"modulus={self.modulus_int})")

    @property
    def modulus_int(self) -> int:
        return coeffs_to_int(self.modulus, self.p)

    @property
    def zero(self) -> "FieldElem":
        return FieldElem(self, (0,) * self.m)

    @property
    def one(self) -> "FieldElem":
        return FieldElem(self, (1,) + (0,) * (self.m - 1))

    def gen(self) -> "FieldElem":
        """The residue of x, the canonical generator of the power basis."""
        if self.m == 1:
            return FieldElem(self, (-self.modulus[0] % self.p,))
        return FieldElem(self, (0, 1) + (0,) * (self.m - 2))

    def from_int(self, value: int) -> "FieldElem":
        if not 0 <= value < self.order:
            raise ValueError(f"encoding {value} outside [0, {self.order})")
        return FieldElem(self, int_to_coeffs(value, self.m, self.p))

    def from_coeffs(self, coeffs) -> "FieldElem":
        coeffs = tuple(int(c) % self.p for c in coeffs)
        if len(coeffs) != self.m:
            raise ValueError(f"need exactly m={self.m} coordinates")
        return FieldElem(self, coeffs)

    def elements(self):
        """All field elements, in encoding order."""
        for enc in range(self.order):
            yield self.from_int(enc)

    def random_element(self, rng) -> "FieldElem":
        return self.from_int(rng.randrange(self.order))

    def _frob_flat(self, k: int):
        """Flat m*m matrix of x -> x^(p^k) on the power basis, cached."""
        k %= self.m
        cached = self._frob.get(k)
        if cached is not None:
            return cached
        m, p, mod = self.m, self.p, self.modulus
        if k == 0 or m == 1:
            flat = tuple(1 if i == j else 0 for i in range(m) for j in range(m))
        elif k == 1:
            xp = _pow_vec([0, 1] + [0] * (m - 2), p, mod, p)
            img = [1] + [0] * (m - 1)
            cols = [list(img)]
            for _ in range(m - 1):
                img = _kernel.mulmod(img, xp, mod, p)
                cols.append(img)
            flat = tuple(cols[j][i] for i in range(m) for j in range(m))
        else:
            prev = self._frob_flat(k - 1)
            step = self._frob_flat(1)
            cols = []
            for j in range(m):
                col = [prev[i * m + j] for i in range(m)]
                cols.append(_kernel.matvec(step, col, p))
            flat = tuple(cols[j][i] for i in range(m) for j in range(m))
        self._frob[k] = flat
        return flat


@functools.lru_cache(maxsize=None)
def field_ctx(p: int, e: int, n: int) -> FieldCtx:
    """Shared context for GF((p^e)^n) with the canonical minimal modulus."""
    return FieldCtx(p, e, n)


class FieldElem:
    """One element of a field context, as power-basis coordinates."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FieldCtx, coeffs: tuple):
        self.ctx = ctx
        self.coeffs = coeffs

    def _peer(self, other) -> "FieldElem":
        if not isinstance(other, FieldElem):
            raise TypeError(f"expected a field element, got {type(other).__name__}")
        if self.ctx is not other.ctx and self.ctx != other.ctx:
            raise ContextMismatchError(
                f"elements of {self.ctx!r} and {other.ctx!r} cannot be combined")
        return other

    def __add__(self, other):
        other = self._peer(other)
        return FieldElem(self.ctx, tuple(
            _kernel.addmod(self.coeffs, other.coeffs, self.ctx.p)))

    def __sub__(self, other):
        other = self._peer(other)
        return FieldElem(self.ctx, tuple(
            _kernel.submod(self.coeffs, other.coeffs, self.ctx.p)))

    def __neg__(self):
        return FieldElem(self.ctx, tuple(_kernel.negmod(self.coeffs, self.ctx.p)))

    def __mul__(self, other):
        other = self._peer(other)
        return FieldElem(self.ctx, tuple(_kernel.mulmod(
            self.coeffs, other.coeffs, self.ctx.modulus, self.ctx.p)))

    def __truediv__(self, other):
        other = self._peer(other)
        return self * other.inv()

    def __pow__(self, exponent):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inv() ** (-exponent)
        return FieldElem(self.ctx, tuple(_pow_vec(
            self.coeffs, exponent, self.ctx.modulus, self.ctx.p)))

    def inv(self) -> "FieldElem":
        return FieldElem(self.ctx, tuple(_poly_invmod(
            self.coeffs, self.ctx.modulus, self.ctx.p)))

    def frobenius(self, k: int) -> "FieldElem":
        """x -> x^(p^k); the q^j-power map is frobenius(e*j)."""
        if k < 0:
            raise ValueError("Frobenius power must be nonnegative")
        flat = self.ctx._frob_flat(k)
        return FieldElem(self.ctx, tuple(
            _kernel.matvec(flat, self.coeffs, self.ctx.p)))

    def norm_rel(self, d: int) -> "FieldElem":
        """Relative norm onto GF(q^d): the product of the q^d-conjugates.

        Equals x^((q^n-1)/(q^d-1)) for nonzero x, but is computed as a chain
        of n/d - 1 Frobenius-and-multiply steps.
        """
        ctx = self.ctx
        if d < 1 or ctx.n % d:
            raise ValueError(f"d={d} does not divide n={ctx.n}")
        acc = self
        y = self
        for _ in range(ctx.n // d - 1):
            y = y.frobenius(ctx.e * d)
            acc = acc * y
        return acc

    def to_int(self) -> int:
        return coeffs_to_int(self.coeffs, self.ctx.p)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, FieldElem):
            return NotImplemented
        return self.ctx == other.ctx and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ctx, self.coeffs))

    def __repr__(self):
        return f"FieldElem({self.to_int()} in GF({self.ctx.p}^{self.ctx.m}))"


# ---------------------------------------------------------------------------
# subfield embedding
# ---------------------------------------------------------------------------

@functools.lru_cache(maxsize=None)
def _embedding_powers(p, small_mod, big_mod):
    """Images of the small generator's powers inside the big field.

    The small generator maps to the root of ``small_mod`` in the big field
    with the smallest integer encoding, found by a linear scan; the scan is
    intended for desk-scale fields.
    """
    m_big = len(big_mod) - 1
    rev = list(reversed(small_mod))
    for enc in range(p**m_big):
        u = list(int_to_coeffs(enc, m_big, p))
        acc = [rev[0] % p] + [0] * (m_big - 1)
        for c in rev[1:]:
            acc = _kernel.mulmod(acc, u, big_mod, p)
            acc[0] = (acc[0] + c) % p
        if not any(acc):
            powers = [(1,) + (0,) * (m_big - 1)]
            img = powers[0]
            for _ in range(len(small_mod) - 2):
                img = tuple(_kernel.mulmod(img, u, big_mod, p))
                powers.append(img)
            return tuple(powers)
    raise AssertionError("unreachable: the small modulus splits in the big field")


def embed_subfield(x: FieldElem, big: FieldCtx) -> FieldElem:
    """Canonical field homomorphism from x's field into ``big``.

    Fixed per context pair: the small generator goes to the minimal-encoding
    root of the small modulus, so repeated calls agree.
    """
    small = x.ctx
    if small.p != big.p:
        raise ValueError("fields of different characteristic")
    if big.m % small.m:
        raise ValueError(
            f"degree {small.m} does not divide {big.m}; no embedding exists")
    powers = _embedding_powers(small.p, small.modulus, big.modulus)
    p = big.p
    acc = [0] * big.m
    for c, img in zip(x.coeffs, powers):
        if c:
            for i, v in enumerate(img):
                acc[i] = (acc[i] + c * v) % p
    return FieldElem(big, tuple(acc))
