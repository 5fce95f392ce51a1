"""The ring of linearized polynomials over GF(q^e).

A linearized polynomial sum_i c_i X^{q^i} induces a GF(q)-linear map on any
extension field.  Under addition and composition these polynomials form a
non-commutative ring with two-sided Euclidean division; composition is the
ring product here (``compose``), and ``q-degree`` means the index of the
leading term, so the actual degree is q^qdeg.
"""

from __future__ import annotations

from .gf import FieldCtx


class LinearizedPoly:
    """Immutable linearized polynomial: coeffs[i] multiplies X^{q^i}.

    Normalized form: no trailing zero coefficients; the zero polynomial has
    an empty coefficient tuple, so equality and hashing are structural.
    """

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FieldCtx, coeffs=()):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.ctx = ctx
        self.coeffs = tuple(coeffs)

    @classmethod
    def zero(cls, ctx: FieldCtx) -> "LinearizedPoly":
        return cls(ctx)

    @classmethod
    def identity(cls, ctx: FieldCtx) -> "LinearizedPoly":
        """X itself, the two-sided identity of the composition ring."""
        return cls(ctx, (1,))

    @classmethod
    def monomial(cls, ctx: FieldCtx, c: int, i: int) -> "LinearizedPoly":
        """c * X^{q^i}."""
        if c == 0:
            return cls(ctx)
        return cls(ctx, (0,) * i + (c,))

    @property
    def qdeg(self) -> int:
        """q-degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return (
            isinstance(other, LinearizedPoly)
            and self.ctx == other.ctx
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.ctx, self.coeffs))

    def __repr__(self):
        if not self.coeffs:
            return "LinearizedPoly(0)"
        terms = [f"{c}*X^[{i}]" for i, c in enumerate(self.coeffs) if c]
        return "LinearizedPoly(" + " + ".join(terms) + ")"

    def _check_ctx(self, other: "LinearizedPoly"):
        if self.ctx != other.ctx:
            raise ValueError("field context mismatch")

    def __add__(self, other: "LinearizedPoly") -> "LinearizedPoly":
        self._check_ctx(other)
        add = self.ctx.add
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = add(out[i], c)
        return LinearizedPoly(self.ctx, out)

    def __neg__(self) -> "LinearizedPoly":
        neg = self.ctx.neg
        return LinearizedPoly(self.ctx, [neg(c) for c in self.coeffs])

    def __sub__(self, other: "LinearizedPoly") -> "LinearizedPoly":
        return self + (-other)

    def scale(self, c: int) -> "LinearizedPoly":
        """Multiply every coefficient by the field element c."""
        if c == 0:
            return LinearizedPoly(self.ctx)
        mul = self.ctx.mul
        return LinearizedPoly(self.ctx, [mul(c, a) for a in self.coeffs])

    def evaluate(self, beta: int) -> int:
        """sum_i c_i * beta^{q^i}."""
        ctx = self.ctx
        add, mul, frob = ctx.add, ctx.mul, ctx.frob
        acc = 0
        b = beta
        for c in self.coeffs:
            if c:
                acc = add(acc, mul(c, b))
            b = frob(b, 1)
        return acc

    def compose(self, other: "LinearizedPoly") -> "LinearizedPoly":
        """Ring product f (x) g = f(g(X)): c_k = sum_i a_i * b_{k-i}^{q^i}."""
        self._check_ctx(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return LinearizedPoly(self.ctx)
        ctx = self.ctx
        add, mul, frob = ctx.add, ctx.mul, ctx.frob
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = add(out[i + j], mul(ai, frob(bj, i)))
        return LinearizedPoly(self.ctx, out)

    def sym_pow(self, i: int) -> "LinearizedPoly":
        """i-fold self-composition; f^{(x)0} = X."""
        if i < 0:
            raise ValueError("composition power must be non-negative")
        result = LinearizedPoly.identity(self.ctx)
        for _ in range(i):
            result = self.compose(result)
        return result

    def to_coeff_arrays(self) -> list[list[int]]:
        """Coefficients as coordinate arrays, lowest q-degree first."""
        return [list(self.ctx.coords(c)) for c in self.coeffs]

    @classmethod
    def from_coeff_arrays(cls, ctx: FieldCtx, arrays) -> "LinearizedPoly":
        return cls(ctx, [ctx.from_coords(a) for a in arrays])


def right_divide(f1: LinearizedPoly, f2: LinearizedPoly):
    """Unique (q_R, r_R) with f1 = f2 (x) q_R + r_R and r_R = 0 or
    qdeg r_R < qdeg f2.

    Each quotient coefficient needs a q^{s2}-th root, taken as the inverse
    Frobenius phi^{e-s2} (always defined in a finite field).
    """
    if not f2:
        raise ZeroDivisionError("division by zero polynomial")
    f1._check_ctx(f2)
    ctx = f1.ctx
    sub, mul, frob = ctx.sub, ctx.mul, ctx.frob
    s2 = f2.qdeg
    lead_inv = ctx.inv(f2.coeffs[-1])
    rem = list(f1.coeffs)
    qlen = len(rem) - s2
    qout = [0] * max(0, qlen)
    while len(rem) - 1 >= s2 and rem:
        s = len(rem) - 1
        c = frob(mul(rem[s], lead_inv), (ctx.e - s2) % ctx.e)
        qout[s - s2] = c
        for i, ai in enumerate(f2.coeffs):
            if ai:
                rem[i + s - s2] = sub(rem[i + s - s2], mul(ai, frob(c, i)))
        while rem and rem[-1] == 0:
            rem.pop()
    return LinearizedPoly(ctx, qout), LinearizedPoly(ctx, rem)


def left_divide(f1: LinearizedPoly, f2: LinearizedPoly):
    """Unique (q_L, r_L) with f1 = q_L (x) f2 + r_L and r_L = 0 or
    qdeg r_L < qdeg f2."""
    if not f2:
        raise ZeroDivisionError("division by zero polynomial")
    f1._check_ctx(f2)
    ctx = f1.ctx
    sub, mul, frob, inv = ctx.sub, ctx.mul, ctx.frob, ctx.inv
    s2 = f2.qdeg
    lead = f2.coeffs[-1]
    rem = list(f1.coeffs)
    qout = [0] * max(0, len(rem) - s2)
    while len(rem) - 1 >= s2 and rem:
        s = len(rem) - 1
        d = s - s2
        c = mul(rem[s], inv(frob(lead, d)))
        qout[d] = c
        for i, bi in enumerate(f2.coeffs):
            if bi:
                rem[i + d] = sub(rem[i + d], mul(c, frob(bi, d)))
        while rem and rem[-1] == 0:
            rem.pop()
    return LinearizedPoly(ctx, qout), LinearizedPoly(ctx, rem)


def composition_residual(qs, f: LinearizedPoly) -> LinearizedPoly:
    """sum_i Q_i (x) f^{(x)i} for Q = (Q_0, ..., Q_L); the polynomial whose
    vanishing makes f a root of the degree-L composition-ring equation."""
    ctx = f.ctx
    acc = qs[0]
    power = LinearizedPoly.identity(ctx)
    for qi in qs[1:]:
        power = f.compose(power)
        if qi:
            acc = acc + qi.compose(power)
    return acc


def root_count_bound_check(qs, roots) -> bool:
    """Test helper: every claimed root zeroes the residual, and there are at
    most L = len(qs)-1 of them."""
    if not any(qs):
        raise ValueError("at least one Q_i must be nonzero")
    L = len(qs) - 1
    for f in roots:
        if composition_residual(qs, f):
            return False
    return len(roots) <= L
