"""Linearized polynomials over GF(q^n) and their Dickson matrices.

A q-linearized polynomial L(x) = sum(a_i x^(q^i), i < n) induces a
GF(q)-linear map of GF(q^n).  Its Dickson matrix has entry
(i, j) = a_((j-i) mod n)^(q^i); L permutes the field exactly when that
matrix is nonsingular, and the coefficient vector of the compositional
inverse of a permutation is the first row of the inverse matrix.
"""

from __future__ import annotations

from .errors import ContextMismatchError, SingularMatrixError
from .ffield import FieldCtx, FieldElem


class LinearizedPoly:
    """Coefficient vector (a_0, ..., a_{n-1}) of sum a_i x^(q^i).

    The length is exactly n; other lengths are rejected rather than padded.
    """

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FieldCtx, coeffs):
        coeffs = tuple(coeffs)
        if len(coeffs) != ctx.n:
            raise ValueError(
                f"need exactly n={ctx.n} coefficients, got {len(coeffs)}")
        for c in coeffs:
            if not isinstance(c, FieldElem):
                raise TypeError("coefficients must be field elements")
            if c.ctx is not ctx and c.ctx != ctx:
                raise ContextMismatchError("coefficient from a different context")
        self.ctx = ctx
        self.coeffs = coeffs

    @classmethod
    def zero(cls, ctx: FieldCtx) -> "LinearizedPoly":
        return cls(ctx, (ctx.zero,) * ctx.n)

    @classmethod
    def identity(cls, ctx: FieldCtx) -> "LinearizedPoly":
        return cls.monomial(ctx, 0)

    @classmethod
    def monomial(cls, ctx: FieldCtx, r: int, coeff: FieldElem | None = None) -> "LinearizedPoly":
        """c * x^(q^r) with c defaulting to 1."""
        if not 0 <= r < ctx.n:
            raise ValueError(f"slot r={r} outside [0, {ctx.n})")
        if coeff is None:
            coeff = ctx.one
        coeffs = [ctx.zero] * ctx.n
        coeffs[r] = coeff
        return cls(ctx, coeffs)

    @classmethod
    def from_encodings(cls, ctx: FieldCtx, encodings) -> "LinearizedPoly":
        return cls(ctx, tuple(ctx.from_int(v) for v in encodings))

    def to_encodings(self) -> tuple[int, ...]:
        return tuple(c.to_int() for c in self.coeffs)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def eval(self, x: FieldElem) -> FieldElem:
        """L(x) as sum a_i * x^(q^i); additive and GF(q)-linear in x."""
        ctx = self.ctx
        if x.ctx is not ctx and x.ctx != ctx:
            raise ContextMismatchError("argument from a different context")
        acc = ctx.zero
        y = x
        for i, a in enumerate(self.coeffs):
            if i:
                y = y.frobenius(ctx.e)
            if a:
                acc = acc + a * y
        return acc

    def compose(self, other: "LinearizedPoly") -> "LinearizedPoly":
        """Coefficients of self(other(x)), reduced modulo x^(q^n) - x.

        c_k = sum over i+j = k (mod n) of a_i * b_j^(q^i).
        """
        ctx = self.ctx
        if other.ctx is not ctx and other.ctx != ctx:
            raise ContextMismatchError("composition across contexts")
        n = ctx.n
        out = [ctx.zero] * n
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if not b:
                    continue
                out[(i + j) % n] = out[(i + j) % n] + a * b.frobenius(ctx.e * i)
        return LinearizedPoly(ctx, out)

    def dickson_matrix(self) -> "DicksonMatrix":
        ctx = self.ctx
        n = ctx.n
        rows = []
        for i in range(n):
            rows.append(tuple(
                self.coeffs[(j - i) % n].frobenius(ctx.e * i) for j in range(n)))
        return DicksonMatrix(ctx, tuple(rows))

    def __eq__(self, other):
        if not isinstance(other, LinearizedPoly):
            return NotImplemented
        return self.ctx == other.ctx and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ctx, self.coeffs))

    def __repr__(self):
        return f"LinearizedPoly({list(self.to_encodings())} over {self.ctx!r})"


class DicksonMatrix:
    """n x n matrix over GF(q^n); rows are tuples of field elements."""

    __slots__ = ("ctx", "entries")

    def __init__(self, ctx: FieldCtx, entries):
        entries = tuple(tuple(row) for row in entries)
        n = ctx.n
        if len(entries) != n or any(len(row) != n for row in entries):
            raise ValueError(f"need an n x n array with n={n}")
        self.ctx = ctx
        self.entries = entries

    def entry(self, i: int, j: int) -> FieldElem:
        return self.entries[i][j]

    def poly(self) -> LinearizedPoly:
        """The linearized polynomial whose coefficients are row 0."""
        return LinearizedPoly(self.ctx, self.entries[0])

    def det(self) -> FieldElem:
        det, _ = _eliminate(self.ctx, [list(r) for r in self.entries], False)
        return det

    def inverse(self) -> "DicksonMatrix":
        det, inv = _eliminate(self.ctx, [list(r) for r in self.entries], True)
        if det.is_zero():
            raise SingularMatrixError("matrix is singular")
        return DicksonMatrix(self.ctx, inv)

    def det_and_inverse(self) -> tuple[FieldElem, "DicksonMatrix"]:
        """One elimination pass; raises on a singular matrix."""
        det, inv = _eliminate(self.ctx, [list(r) for r in self.entries], True)
        if det.is_zero():
            raise SingularMatrixError("matrix is singular")
        return det, DicksonMatrix(self.ctx, inv)

    def cofactor(self, i: int, j: int) -> FieldElem:
        """Signed minor determinant; defined for singular matrices too."""
        ctx = self.ctx
        minor = [
            [self.entries[r][c] for c in range(ctx.n) if c != j]
            for r in range(ctx.n) if r != i
        ]
        if not minor:
            return ctx.one
        det = _minor_det(ctx, minor)
        return det if (i + j) % 2 == 0 else -det

    def __matmul__(self, other: "DicksonMatrix") -> "DicksonMatrix":
        if self.ctx != other.ctx:
            raise ContextMismatchError("product across contexts")
        n = self.ctx.n
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = self.ctx.zero
                for k in range(n):
                    a = self.entries[i][k]
                    b = other.entries[k][j]
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            rows.append(tuple(row))
        return DicksonMatrix(self.ctx, tuple(rows))

    def __eq__(self, other):
        if not isinstance(other, DicksonMatrix):
            return NotImplemented
        return self.ctx == other.ctx and self.entries == other.entries

    def __repr__(self):
        encs = [[c.to_int() for c in row] for row in self.entries]
        return f"DicksonMatrix({encs} over {self.ctx!r})"


def _eliminate(ctx, rows, want_inverse):
    """Gaussian elimination with first-nonzero pivoting.

    Returns (det, inverse_rows); the inverse half is None unless requested
    and the matrix is nonsingular.  Zero multipliers are skipped, which makes
    sparse two-diagonal matrices cheap without special-casing them.
    """
    n = len(rows)
    aug = [list(r) for r in rows]
    inv = None
    if want_inverse:
        inv = [[ctx.one if i == j else ctx.zero for j in range(n)] for i in range(n)]
    det = ctx.one
    for col in range(n):
        pivot_row = None
        for r in range(col, n):
            if aug[r][col]:
                pivot_row = r
                break
        if pivot_row is None:
            return ctx.zero, None
        if pivot_row != col:
            aug[col], aug[pivot_row] = aug[pivot_row], aug[col]
            if inv is not None:
                inv[col], inv[pivot_row] = inv[pivot_row], inv[col]
            det = -det
        pivot = aug[col][col]
        det = det * pivot
        pinv = pivot.inv()
        aug[col] = [x * pinv for x in aug[col]]
        if inv is not None:
            inv[col] = [x * pinv for x in inv[col]]
        lo = 0 if want_inverse else col + 1
        for r in range(lo, n):
            if r == col:
                continue
            factor = aug[r][col]
            if not factor:
                continue
            aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
            if inv is not None:
                inv[r] = [x - factor * y for x, y in zip(inv[r], inv[col])]
    return det, inv


def _minor_det(ctx, rows):
    det, _ = _eliminate(ctx, rows, False)
    return det


def is_permutation_dickson(L: LinearizedPoly) -> bool:
    """Determinant criterion: L permutes GF(q^n) iff det of D_L is nonzero."""
    return bool(L.dickson_matrix().det())


def inverse_dickson(L: LinearizedPoly) -> LinearizedPoly:
    """Compositional inverse through the Dickson matrix inverse.

    The inverse polynomial is row 0 of the inverse matrix.  As a consistency
    check the determinant is recomputed by first-column cofactor expansion
    (cofactor (i,0) equals det times entry (0,i) of the inverse) and must
    match the elimination determinant and be fixed by the q-power Frobenius.
    """
    ctx = L.ctx
    D = L.dickson_matrix()
    try:
        det, Dinv = D.det_and_inverse()
    except SingularMatrixError:
        raise SingularMatrixError("polynomial does not permute the field") from None
    n = ctx.n
    expansion = ctx.zero
    for i in range(n):
        a = L.coeffs[(n - i) % n]
        if a:
            cof = det * Dinv.entries[0][i]
            expansion = expansion + a.frobenius(ctx.e * i) * cof
    if expansion != det or det.frobenius(ctx.e) != det:
        raise AssertionError("cofactor expansion disagrees with elimination")
    return LinearizedPoly(ctx, Dinv.entries[0])
