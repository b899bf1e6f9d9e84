"""Brute-force ground truth for small fields.

Everything here evaluates polynomials at every field element and compares
against the closed forms elsewhere in the package; nothing is derived from
the formulas under test.  The exhaustive routines refuse to run above a
field-order cap, and :func:`sweep` drives the full cross-validation grid
over (p, e, n, r, a), collecting failures as data instead of raising.
"""

from __future__ import annotations

import functools
import math
import time
from dataclasses import dataclass, field

from . import _kernel, binomial, linpoly
from .errors import CapacityError, NotAPermutationError
from .ffield import FieldCtx, embed_subfield, field_ctx
from .linpoly import LinearizedPoly

# Hard safety cap on exhaustive enumeration, in field elements.
MAX_EXHAUSTIVE_ORDER = 1_000_000

CHECK_CRITERION = "criterion"
CHECK_COFACTORS = "cofactors"
CHECK_INVERSE = "inverse"
CHECK_AGREEMENT = "agreement"
CHECK_LIFT = "lift"


def _require_capacity(ctx: FieldCtx, max_order: int | None):
    cap = MAX_EXHAUSTIVE_ORDER if max_order is None else max_order
    if ctx.order > cap:
        raise CapacityError(
            f"field order {ctx.order} exceeds the exhaustive cap {cap}")


def _images(L: LinearizedPoly) -> list[int]:
    """enc(L(x)) for every x, in encoding order."""
    ctx = L.ctx
    rows = []
    mats = []
    for i, c in enumerate(L.coeffs):
        if c:
            rows.append(list(c.coeffs))
            mats.append(ctx._frob_flat((ctx.e * i) % ctx.m))
    return _kernel.eval_all(rows, mats, ctx.modulus, ctx.p)


def brute_is_permutation(L: LinearizedPoly, max_order: int | None = None) -> bool:
    """Exhaustive bijectivity check.

    Computes both the image-set size and the kernel triviality count; the
    two must agree by linearity, and their agreement is asserted.
    """
    _require_capacity(L.ctx, max_order)
    img = _images(L)
    image_full = len(set(img)) == L.ctx.order
    kernel_trivial = img.count(0) == 1
    if image_full != kernel_trivial:
        raise AssertionError("image-size and kernel checks disagree")
    return image_full


def verify_inverse(L: LinearizedPoly, M: LinearizedPoly,
                   max_order: int | None = None) -> bool:
    """True iff L(M(x)) = x = M(L(x)) for every field element x."""
    _require_capacity(L.ctx, max_order)
    img_l = _images(L)
    img_m = _images(M)
    return all(img_m[img_l[i]] == i and img_l[img_m[i]] == i
               for i in range(L.ctx.order))


def brute_inverse_table(L: LinearizedPoly, max_order: int | None = None) -> list[int]:
    """Table T with T[enc(L(x))] = enc(x); requires a permutation."""
    _require_capacity(L.ctx, max_order)
    img = _images(L)
    order = L.ctx.order
    if len(set(img)) != order:
        raise NotAPermutationError("polynomial does not permute the field")
    table = [0] * order
    for x_enc, y_enc in enumerate(img):
        table[y_enc] = x_enc
    return table


@functools.lru_cache(maxsize=None)
def _embedding_table(small: FieldCtx, big: FieldCtx) -> list[int]:
    """enc_big(embed(x)) for every small element x, in encoding order."""
    return [embed_subfield(x, big).to_int() for x in small.elements()]


@dataclass(frozen=True)
class SweepConfig:
    """Bounds for the cross-validation grid.

    ``max_field_order`` caps p^(e*n) for exhaustive checks and may not
    exceed the module safety cap; the structural bounds cut off the (e, n, t)
    enumeration, which the order cap usually bounds first anyway.
    """

    max_field_order: int = 729
    primes: tuple[int, ...] = (2, 3, 5)
    max_n: int = 16
    max_e: int = 8
    max_t: int = 8
    include_lift: bool = True

    def __post_init__(self):
        if not 1 <= self.max_field_order <= MAX_EXHAUSTIVE_ORDER:
            raise ValueError(
                f"max_field_order must lie in [1, {MAX_EXHAUSTIVE_ORDER}]")
        for name in ("max_n", "max_e", "max_t"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be at least 1")
        object.__setattr__(self, "primes", tuple(self.primes))


@dataclass(frozen=True)
class SweepFailure:
    p: int
    e: int
    n: int
    r: int
    a: int
    t: int | None
    check: str
    detail: str

    def line(self) -> str:
        t = "-" if self.t is None else str(self.t)
        return (f"failure: p={self.p} e={self.e} n={self.n} r={self.r} "
                f"a={self.a} t={t} check={self.check} detail={self.detail}")


@dataclass
class SweepReport:
    config: SweepConfig
    cases: int = 0
    permutation_cases: int = 0
    cofactor_checks: int = 0
    lift_checks: int = 0
    failures: list[SweepFailure] = field(default_factory=list)
    timings: dict = field(default_factory=dict, compare=False)

    @property
    def ok(self) -> bool:
        return not self.failures

    def failures_for(self, check: str) -> list[SweepFailure]:
        return [f for f in self.failures if f.check == check]

    def summary_lines(self) -> list[str]:
        return [
            f"cases: {self.cases}",
            f"permutation_cases: {self.permutation_cases}",
            f"cofactor_checks: {self.cofactor_checks}",
            f"lift_checks: {self.lift_checks}",
            f"failures: {len(self.failures)}",
        ]

    def format(self) -> str:
        lines = [f.line() for f in self.failures]
        lines.extend(self.summary_lines())
        return "\n".join(lines)


class _Timer:
    """Accumulates wall time per check family."""

    def __init__(self, sink: dict, key: str):
        self.sink = sink
        self.key = key

    def __enter__(self):
        self.start = time.perf_counter()

    def __exit__(self, *exc):
        self.sink[self.key] = self.sink.get(self.key, 0.0) + (
            time.perf_counter() - self.start)
        return False


def _grid(cfg: SweepConfig):
    """(p, e, n) triples in lexicographic order within the bounds."""
    for p in sorted(set(cfg.primes)):
        for e in range(1, cfg.max_e + 1):
            if p ** (2 * e) > cfg.max_field_order:
                break
            for n in range(2, cfg.max_n + 1):
                if p ** (e * n) > cfg.max_field_order:
                    break
                yield p, e, n


def _check_cofactors(ctx, spec, L, failures):
    """Closed forms of the first-column cofactors of D for r = 1, a != 0.

    cofactor(0,0) = N(a)/a, cofactor(i,0) = (-1)^i N(a) a^-(1+q+...+q^i)
    for middle i, cofactor(n-1,0) = (-1)^(n-1), and the determinant is
    N(a) + (-1)^(n-1); all hold whether or not the binomial permutes.
    """
    n = ctx.n
    a = spec.a
    nor = a.norm_rel(1)
    D = L.dickson_matrix()
    checks = []
    checks.append(("cof0", D.cofactor(0, 0), nor * a.inv()))
    for i in range(1, n - 1):
        expected = nor * binomial.geometric_power(a, 1, i).inv()
        if i % 2:
            expected = -expected
        checks.append((f"cof{i}", D.cofactor(i, 0), expected))
    sign = binomial._sign(ctx, n - 1)
    checks.append((f"cof{n - 1}", D.cofactor(n - 1, 0), sign))
    checks.append(("det", D.det(), nor + sign))
    out = []
    for name, got, expected in checks:
        if got != expected:
            out.append((name, got.to_int(), expected.to_int()))
    if out:
        failures.append(f"cofactor mismatches {out}")
    return len(checks)


def sweep(cfg: SweepConfig) -> SweepReport:
    """Cross-validate every closed form on the full (p, e, n, r, a) grid.

    Per case: the norm criterion, the determinant criterion, and exhaustive
    bijectivity must agree; for permutations, the closed-form inverse must
    compose to the identity both ways and match the matrix-method inverse
    (and the special forms where they apply); for r = 1 the cofactor closed
    forms are checked; and permutations are lifted to every admissible
    bigger field and rechecked exhaustively.  Failures are collected, not
    raised, and the grid order is fixed, so reports are reproducible.
    """
    report = SweepReport(config=cfg)
    timings = report.timings
    for p, e, n in _grid(cfg):
        ctx = field_ctx(p, e, n)
        identity = LinearizedPoly.identity(ctx)
        lift_ts = []
        if cfg.include_lift:
            lift_ts = [
                t for t in range(1, cfg.max_t + 1)
                if math.gcd(t, n) == 1 and p ** (e * n * t) <= cfg.max_field_order
            ]
        for r in range(1, n):
            for enc_a in range(ctx.order):
                report.cases += 1
                spec = binomial.BinomialSpec(ctx.from_int(enc_a), r)
                L = spec.poly()

                def fail(check, detail, t=None):
                    report.failures.append(SweepFailure(
                        p, e, n, r, enc_a, t, check, detail))

                with _Timer(timings, CHECK_CRITERION):
                    perm_norm = binomial.is_permutation_binomial(spec)
                    perm_det = linpoly.is_permutation_dickson(L)
                    img = _images(L)
                    perm_brute = len(set(img)) == ctx.order
                    if perm_brute != (img.count(0) == 1):
                        fail(CHECK_CRITERION, "image and kernel checks disagree")
                    agree = perm_norm == perm_det == perm_brute
                    if not agree:
                        fail(CHECK_CRITERION,
                             f"norm={perm_norm} det={perm_det} brute={perm_brute}")

                if r == 1 and enc_a != 0:
                    with _Timer(timings, CHECK_COFACTORS):
                        failures = []
                        report.cofactor_checks += _check_cofactors(
                            ctx, spec, L, failures)
                        for detail in failures:
                            fail(CHECK_COFACTORS, detail)

                if not (agree and perm_norm):
                    continue
                report.permutation_cases += 1

                with _Timer(timings, CHECK_INVERSE):
                    M = binomial.inverse_binomial(spec)
                    if L.compose(M) != identity or M.compose(L) != identity:
                        fail(CHECK_INVERSE, "composition is not the identity")
                    else:
                        img_m = _images(M)
                        if not all(img_m[img[i]] == i and img[img_m[i]] == i
                                   for i in range(ctx.order)):
                            fail(CHECK_INVERSE, "pointwise inverse check failed")

                with _Timer(timings, CHECK_AGREEMENT):
                    M_dickson = linpoly.inverse_dickson(L)
                    if M_dickson != M:
                        fail(CHECK_AGREEMENT,
                             f"matrix method gave {M_dickson.to_encodings()}, "
                             f"closed form {M.to_encodings()}")
                    for shape in binomial._shapes(spec):
                        M_special = binomial.inverse_special(spec, which=shape)
                        if M_special != M:
                            fail(CHECK_AGREEMENT,
                                 f"shape {shape} gave {M_special.to_encodings()}, "
                                 f"closed form {M.to_encodings()}")

                with _Timer(timings, CHECK_LIFT):
                    for t in lift_ts:
                        big = field_ctx(p, e * t, n)
                        lifted = binomial.lift(L, t, big)
                        report.lift_checks += 1
                        img_big = _images(lifted)
                        if len(set(img_big)) != big.order:
                            fail(CHECK_LIFT, "lift is not a permutation", t=t)
                            continue
                        # pointwise agreement on the embedded subfield, read
                        # off the two exhaustive image tables
                        emb = _embedding_table(ctx, big)
                        if any(img_big[emb[s]] != emb[img[s]]
                               for s in range(ctx.order)):
                            fail(CHECK_LIFT, "disagrees with the source on "
                                 "the embedded subfield", t=t)
    return report
