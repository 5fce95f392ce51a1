"""List decoding via Frobenius-orbit interpolation and linearized
Roth-Ruckenstein factorization, plus the unique-decoder baseline.

Pipeline for a received subspace U of dimension d:

1. expand a basis of U into interpolation points by taking all componentwise
   q^h powers for h = 0..m-1 (the receiver manufactures the untransmitted
   evaluations; m*d points total);
2. find a nonzero Q = Q_0(X) + Q_1(Y_1) + ... + Q_L(Y_L) vanishing on all
   points, with deg_q Q_i <= omega - (k-1)i - 1 and
   omega = ceil((md+1)/(L+1) + L(k-1)/2), via a deterministic nullspace;
3. extract every message polynomial f with GF(q) coefficients and q-degree
   < k satisfying Q_0 + sum_i Q_i (x) f^{(x)i} = 0 (at most L of them).
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from math import comb

from .codec import AmbientVector, CodeParams, KKParams, encode
from .gf import InternalDefect, nullspace_vector
from .linpoly import LinearizedPoly, right_divide
from .subspace import Subspace

STATUS_OK = "ok"
STATUS_FAILURE = "failure"


@dataclass(frozen=True)
class MultiQ:
    """Interpolation polynomial Q_0..Q_L and the degree budget it was built
    with; at least one component is nonzero."""

    qs: tuple[LinearizedPoly, ...]
    omega: int


@dataclass
class DecodeResult:
    status: str
    d: int
    omega: int | None
    messages: list[tuple[int, ...]] = field(default_factory=list)
    elapsed_micros: int = 0

    @property
    def ok(self) -> bool:
        return self.status == STATUS_OK


def omega_for(params: CodeParams, d: int) -> int:
    """ceil((m*d + 1)/(L + 1) + L(k-1)/2), in exact integer arithmetic."""
    if d < 1:
        raise ValueError("received dimension must be >= 1")
    m, k, L = params.m, params.k, params.L
    num = 2 * (m * d + 1) + L * (k - 1) * (L + 1)
    den = 2 * (L + 1)
    return -(-num // den)


def interpolation_points(params: CodeParams, received: Subspace):
    """All componentwise q^h powers (h = 0..m-1) of a deterministic basis of
    the received space; m*d points."""
    if received.dim == 0:
        raise ValueError("cannot build interpolation points from a zero subspace")
    fld = params.field
    base = [AmbientVector.from_coords(params, row) for row in received.basis]
    points = []
    for h in range(params.m):
        for av in base:
            points.append(tuple(fld.frob(z, h) for z in (av.x, *av.ys)))
    return points


def interpolate(params: CodeParams, points, omega: int) -> MultiQ:
    """Deterministic nonzero Q vanishing on all points.

    One homogeneous equation per point; unknowns are the coefficients of
    Q_0..Q_L (block i holds max(0, omega - (k-1)i) of them).  The budget
    omega_for() always leaves more unknowns than equations, so an empty
    nullspace is a defect, not a decoding failure.
    """
    fld = params.field
    k, L = params.k, params.L
    counts = [max(0, omega - (k - 1) * i) for i in range(L + 1)]
    total = sum(counts)
    if total == 0:
        raise InternalDefect("degree budget admits no coefficients at all")
    frob = fld.frob
    rows = []
    for p in points:
        row = []
        for i, cnt in enumerate(counts):
            z = p[i]
            for _ in range(cnt):
                row.append(z)
                z = frob(z, 1)
        rows.append(row)
    sol = nullspace_vector(fld, rows, total)
    if sol is None:
        raise InternalDefect("interpolation system has no nonzero solution")
    qs = []
    pos = 0
    for cnt in counts:
        qs.append(LinearizedPoly(fld, sol[pos : pos + cnt]))
        pos += cnt
    return MultiQ(tuple(qs), omega)


# ---------------------------------------------------------------------------
# linearized Roth-Ruckenstein factorization
# ---------------------------------------------------------------------------

def _lowest_exp(poly: LinearizedPoly) -> int:
    for i, c in enumerate(poly.coeffs):
        if c:
            return i
    raise ValueError("zero polynomial has no lowest exponent")


def _downshift(poly: LinearizedPoly, s: int) -> LinearizedPoly:
    """Q'(X) with Q'(X)^{q^s} = Q(X): drop s exponent levels and take q^s-th
    roots of the coefficients (inverse Frobenius)."""
    if s == 0 or not poly:
        return poly
    ctx = poly.ctx
    back = (ctx.e - s % ctx.e) % ctx.e
    return LinearizedPoly(ctx, [ctx.frob(c, back) for c in poly.coeffs[s:]])


def lrr_substitute(qs, gamma: int):
    """Coefficients of Q(X, Y^q + gamma*X) for gamma in GF(q).

    Valid because Y, X^q and gamma*X all have GF(q) coefficients and
    therefore commute: the new Y^{(x)j} coefficient is
    sum_{i>=j} C(i,j) gamma^{i-j} (Q_i o X^{q^j}), where o up-shifts
    exponents by j leaving coefficients unchanged and the binomials are
    reduced mod q.
    """
    L = len(qs) - 1
    ctx = qs[0].ctx
    q = ctx.q
    out = []
    for j in range(L + 1):
        acc = LinearizedPoly.zero(ctx)
        for i in range(j, L + 1):
            if not qs[i]:
                continue
            c = (comb(i, j) * pow(gamma, i - j, q)) % q
            if c == 0:
                continue
            shifted = LinearizedPoly(ctx, (0,) * j + qs[i].coeffs)
            acc = acc + shifted.scale(c)
        out.append(acc)
    return out


def _subst_scalar(qs, gamma: int) -> LinearizedPoly:
    """Q(X, gamma*X) = Q_0 + sum_i gamma^i Q_i as a univariate polynomial."""
    ctx = qs[0].ctx
    q = ctx.q
    acc = qs[0]
    for i, qi in enumerate(qs[1:], start=1):
        if qi:
            c = pow(gamma, i, q)
            if c:
                acc = acc + qi.scale(c)
    return acc


def lrr_factor(qs, k: int) -> list[LinearizedPoly]:
    """All f in L_q[X] with q-degree <= k-1 such that
    Q_0 + Q_1 (x) f + ... + Q_L (x) f^{(x)L} = 0.

    Recursive peeling: at each level, strip the common power X^{q^s}
    (s = minimum lowest exponent over the nonzero Q_i), read the candidate
    next coefficients off the roots of H(0, gamma) -- the coefficient of X
    in Q_downshifted(X, gamma*X), a polynomial of degree <= L in gamma --
    and recurse on Q(X, Y^q + gamma*X).  Depth is bounded by k-1; at the
    last level a candidate is kept only if it zeroes the full equation.
    """
    qs = list(qs)
    if not any(qs):
        raise ValueError("at least one Q_i must be nonzero")
    ctx = qs[0].ctx
    q = ctx.q
    found: list[tuple[int, ...]] = []

    def rec(cur, lam, prefix):
        nonzero = [p for p in cur if p]
        if not nonzero:
            # substitution preserves nonzero-ness, so this cannot happen
            raise InternalDefect("root recursion reached an identically zero equation")
        s = min(_lowest_exp(p) for p in nonzero)
        shifted = [_downshift(p, s) for p in cur]
        h = [(p.coeffs[0] if p else 0) for p in shifted]
        for gamma in range(q):
            # evaluate H(0, gamma) = sum h_i gamma^i over the big field
            acc = 0
            for i, hi in enumerate(h):
                if hi:
                    acc = ctx.add(acc, ctx.mul(hi, pow(gamma, i, q)))
            if acc != 0:
                continue
            if lam < k - 1:
                rec(lrr_substitute(shifted, gamma), lam + 1, prefix + (gamma,))
            elif not _subst_scalar(cur, gamma):
                found.append(prefix + (gamma,))

    rec(qs, 0, ())
    roots = sorted(set(found))
    return [LinearizedPoly(ctx, r) for r in roots]


# ---------------------------------------------------------------------------
# decoders
# ---------------------------------------------------------------------------

def decode(params: CodeParams, received: Subspace, post_filter: bool = False) -> DecodeResult:
    """List-decode a received subspace.

    Declares failure (without attempting) when the received dimension rules
    out the success guarantee for every consistent (rho, t) split:
    the residual-vanishing condition omega <= (n - rho)m cannot hold even
    for the smallest possible erasure count.  The transmitted message is
    guaranteed to appear in the list whenever the true (rho, t) satisfy
    L*rho + t <= list_radius(params).
    """
    start = time.perf_counter()
    d = received.dim
    if d == 0:
        return _finish(DecodeResult(STATUS_FAILURE, 0, None), start)
    w = omega_for(params, d)
    rho_min = max(0, params.n - d)
    if w > (params.n - rho_min) * params.m:
        return _finish(DecodeResult(STATUS_FAILURE, d, w), start)
    points = interpolation_points(params, received)
    mq = interpolate(params, points, w)
    roots = lrr_factor(mq.qs, params.k)
    messages = [_root_to_message(r, params.k) for r in roots]
    if post_filter and len(messages) > 1:
        messages = _filter_by_intersection(params, messages, received)
    messages.sort()
    return _finish(DecodeResult(STATUS_OK, d, w, messages), start)


def _finish(result: DecodeResult, start: float) -> DecodeResult:
    result.elapsed_micros = int((time.perf_counter() - start) * 1e6)
    return result


def _root_to_message(root: LinearizedPoly, k: int) -> tuple[int, ...]:
    coeffs = list(root.coeffs)
    return tuple(coeffs + [0] * (k - len(coeffs)))


def _filter_by_intersection(params, messages, received):
    """Keep only candidates whose re-encoded codeword meets the received
    space in the largest dimension (optional sharpening; off by default
    because the raw root list is the contractual output)."""
    scored = [
        (encode(params, msg).intersect(received).dim, msg) for msg in messages
    ]
    best = max(score for score, _ in scored)
    return [msg for score, msg in scored if score == best]


@dataclass
class KKDecodeResult:
    status: str
    d: int
    omega: int | None
    message: tuple[int, ...] | None = None
    elapsed_micros: int = 0

    @property
    def ok(self) -> bool:
        return self.status == STATUS_OK


def kk_decode(params: KKParams, received: Subspace) -> KKDecodeResult:
    """Unique decoding of the baseline code.

    Interpolates a nonzero bivariate Q_0(X) + Q_1(Y) with
    deg_q Q_0 <= omega-1, deg_q Q_1 <= omega-k for omega = ceil((r+k)/2)
    over the r received basis points (no Frobenius orbit: message symbols
    live in GF(q^m)), then recovers f from Q_1 (x) f = -Q_0 by exact right
    division.  Succeeds whenever rho + t < n - k + 1.
    """
    start = time.perf_counter()
    r = received.dim
    if r == 0:
        return _kk_finish(KKDecodeResult(STATUS_FAILURE, 0, None), start)
    fld = params.field
    k = params.k
    w = (r + k + 1) // 2  # ceil((r+k)/2)
    n0 = w
    n1 = w - k + 1
    if n1 <= 0:
        return _kk_finish(KKDecodeResult(STATUS_FAILURE, r, w), start)
    rows = []
    for vec in received.basis:
        x = fld.from_coords(vec[: params.n] + (0,) * (fld.e - params.n))
        y = fld.from_coords(vec[params.n :])
        row = []
        z = x
        for _ in range(n0):
            row.append(z)
            z = fld.frob(z, 1)
        z = y
        for _ in range(n1):
            row.append(z)
            z = fld.frob(z, 1)
        rows.append(row)
    sol = nullspace_vector(fld, rows, n0 + n1)
    if sol is None:
        raise InternalDefect("baseline interpolation has no nonzero solution")
    q0 = LinearizedPoly(fld, sol[:n0])
    q1 = LinearizedPoly(fld, sol[n0:])
    if not q1:
        return _kk_finish(KKDecodeResult(STATUS_FAILURE, r, w), start)
    quotient, rem = right_divide(-q0, q1)
    if rem or quotient.qdeg > k - 1:
        return _kk_finish(KKDecodeResult(STATUS_FAILURE, r, w), start)
    msg = tuple(list(quotient.coeffs) + [0] * (k - len(quotient.coeffs)))
    return _kk_finish(KKDecodeResult(STATUS_OK, r, w, msg), start)


def _kk_finish(result: KKDecodeResult, start: float) -> KKDecodeResult:
    result.elapsed_micros = int((time.perf_counter() - start) * 1e6)
    return result
