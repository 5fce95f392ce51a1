"""Code parameter derivation and encoders.

The list-decodable code evaluates a message polynomial with GF(q)
coefficients, together with all its composition powers up to the list size
L, at evaluation points alpha_1..alpha_n built from a normal-basis
generator gamma of GF(q^{nm}):

    alpha_i = sum_j e_i^j * gamma^{q^{jm}},   e_i the n-th roots of unity

so that the Frobenius orbits {alpha_i^{q^j} : j < m} tile a full basis of
GF(q^{nm}).  A codeword is the n-dimensional row space of the vectors
(alpha_i, f(alpha_i), f^{(x)2}(alpha_i), ..., f^{(x)L}(alpha_i)) inside an
ambient space of dimension n + nmL.

The classic unique-decodable construction (messages over GF(q^m), pairs
(alpha_i, f(alpha_i))) is kept as a separate baseline codec.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import gf
from .gf import FieldCtx, InternalDefect, field_create
from .linpoly import LinearizedPoly
from .subspace import Subspace, rref_mod


class CodeParams:
    """Derived artifacts of the list-decodable code C_q(k, n, m, L).

    Immutable after construction; safe to share across concurrent trials.
    """

    def __init__(self, q: int, m: int, n: int, k: int, L: int):
        for name, val in (("q", q), ("m", m), ("n", n), ("k", k), ("L", L)):
            if val < 1:
                raise ValueError(f"{name} must be >= 1, got {val}")
        if not gf.is_prime(q):
            raise ValueError(f"q must be prime, got {q}")
        if (q - 1) % n != 0:
            raise ValueError(f"n must divide q-1 (n={n}, q-1={q - 1})")
        if k > n * m:
            raise ValueError(f"k must satisfy k <= n*m (k={k}, n*m={n * m})")
        if n * m - (k - 1) * L - 1 < 0:
            raise ValueError(
                f"list size too large: n*m - (k-1)*L - 1 = "
                f"{n * m - (k - 1) * L - 1} must be >= 0"
            )
        self.q, self.m, self.n, self.k, self.L = q, m, n, k, L
        self.field: FieldCtx = field_create(q, n * m)
        prime_field = field_create(q, 1)
        self.unity_roots = tuple(gf.nth_roots_of_unity(prime_field, n))
        self.gamma = gf.find_normal_generator(self.field)
        self.alphas = tuple(self._build_alpha(e) for e in self.unity_roots)
        self.ambient_dim = n + n * m * L
        self._verify_structure()
        self._build_x_conversion()

    def _build_alpha(self, e_i: int) -> int:
        """alpha_i = sum_{j<n} e_i^j gamma^{q^{jm}}, which satisfies the twist
        identity alpha_i^{q^m} = e_i^{-1} alpha_i.

        (Powers of e_i and of e_i^{-1} give the same point set since the
        roots of unity form a group; this orientation is the one that makes
        the twist identity hold as written.)
        """
        fld = self.field
        q, n, m = self.q, self.n, self.m
        coef = 1
        acc = 0
        for j in range(n):
            acc = fld.add(acc, fld.mul(coef, fld.frob(self.gamma, (j * m) % fld.e)))
            coef = (coef * e_i) % q
        return acc

    def _verify_structure(self):
        """The construction guarantees these; violating them is a defect."""
        fld = self.field
        m, n = self.m, self.n
        for i, (e_i, alpha) in enumerate(zip(self.unity_roots, self.alphas)):
            # alpha_i^{q^m} = e_i^{-1} * alpha_i
            lhs = fld.frob(alpha, m % fld.e)
            rhs = fld.mul(pow(e_i, self.q - 2, self.q), alpha)
            if lhs != rhs:
                raise InternalDefect(f"alpha_{i + 1} twist identity failed")
        if not gf.in_subfield(fld, self.alphas[0], m):
            raise InternalDefect("alpha_1 is not in GF(q^m)")
        for i, alpha in enumerate(self.alphas[1:], start=2):
            if not gf.in_subfield(fld, fld.pow(alpha, n), m):
                raise InternalDefect(f"alpha_{i}^n is not in GF(q^m)")
        orbit_rows = [
            fld.coords(fld.frob(alpha, j)) for alpha in self.alphas for j in range(m)
        ]
        if gf.rank_mod(np.array(orbit_rows, dtype=np.int64), self.q) != n * m:
            raise InternalDefect("Frobenius orbits of the alphas do not span the field")

    def _build_x_conversion(self):
        """Precompute the change of basis between span(alpha_1..alpha_n)
        coordinates and full-field coordinates."""
        fld = self.field
        a = np.array([fld.coords(alpha) for alpha in self.alphas], dtype=np.int64)
        aug = np.hstack([a, np.eye(self.n, dtype=np.int64)])
        red = rref_mod(aug, self.q)
        pivots = [int(np.argmax(row != 0)) for row in red]
        # the identity block keeps the augmented matrix at full row rank, so
        # dependence among the alphas shows up as a pivot beyond column e
        if any(p >= fld.e for p in pivots):
            raise InternalDefect("alphas are linearly dependent")
        self._alpha_matrix = a
        self._alpha_transform = red[:, fld.e :]  # T with (T @ A) = RREF(A)
        self._alpha_pivots = pivots

    # -- span(alpha) coordinate maps ----------------------------------------

    def x_to_span_coords(self, x: int) -> tuple[int, ...]:
        """Coordinates of x w.r.t. (alpha_1..alpha_n); x must lie in the span."""
        fld = self.field
        v = np.array(fld.coords(x), dtype=np.int64)
        c = (v[self._alpha_pivots] @ self._alpha_transform) % self.q
        if ((c @ self._alpha_matrix) % self.q != v).any():
            raise ValueError("element is not in the span of the alphas")
        return tuple(int(t) for t in c)

    def span_coords_to_x(self, coords) -> int:
        fld = self.field
        x = 0
        for c, alpha in zip(coords, self.alphas):
            if c:
                x = fld.add(x, fld.mul(int(c) % self.q, alpha))
        return x

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "m": self.m,
            "n": self.n,
            "k": self.k,
            "L": self.L,
            "modulus": list(self.field.modulus),
            "gamma_coords": list(self.field.coords(self.gamma)),
        }

    def __repr__(self):
        return (
            f"CodeParams(q={self.q}, m={self.m}, n={self.n}, "
            f"k={self.k}, L={self.L})"
        )


@functools.lru_cache(maxsize=None)
def derive_params(q: int, m: int, n: int, k: int, L: int) -> CodeParams:
    """Derive and structurally validate code parameters (cached)."""
    return CodeParams(q, m, n, k, L)


@dataclass(frozen=True)
class AmbientVector:
    """(x, y_1..y_L) with x in span(alpha_1..alpha_n), y_i in GF(q^{nm})."""

    x: int
    ys: tuple[int, ...]

    def to_coords(self, params: CodeParams) -> tuple[int, ...]:
        out = list(params.x_to_span_coords(self.x))
        for y in self.ys:
            out.extend(params.field.coords(y))
        return tuple(out)

    @classmethod
    def from_coords(cls, params: CodeParams, coords) -> "AmbientVector":
        coords = [int(c) for c in coords]
        if len(coords) != params.ambient_dim:
            raise ValueError("coordinate vector has the wrong length")
        n, nm = params.n, params.n * params.m
        x = params.span_coords_to_x(coords[:n])
        ys = []
        for i in range(params.L):
            chunk = coords[n + i * nm : n + (i + 1) * nm]
            ys.append(params.field.from_coords(chunk))
        return cls(x, tuple(ys))


def message_poly(params: CodeParams, message) -> LinearizedPoly:
    """Message digits (u_0..u_{k-1}) over GF(q) as sum u_i X^{q^i}."""
    msg = [int(u) for u in message]
    if len(msg) != params.k:
        raise ValueError(f"message must have exactly k={params.k} digits")
    if any(not 0 <= u < params.q for u in msg):
        raise ValueError("message digits must lie in GF(q)")
    return LinearizedPoly(params.field, msg)


def encode(params: CodeParams, message) -> Subspace:
    """Span of (alpha_i, f(alpha_i), ..., f^{(x)L}(alpha_i)) for i in [n]."""
    f = message_poly(params, message)
    rows = []
    for i, alpha in enumerate(params.alphas):
        row = [0] * params.n
        row[i] = 1  # alpha_i in span coordinates
        y = alpha
        for _ in range(params.L):
            y = f.evaluate(y)
            row.extend(params.field.coords(y))
        rows.append(row)
    return Subspace.from_vectors(params.q, params.ambient_dim, rows)


def packet_rate(params: CodeParams) -> Fraction:
    """Information packets per encoded packet: k/(nm)."""
    return Fraction(params.k, params.n * params.m)


def symbol_rate(params: CodeParams) -> Fraction:
    """q-ary information symbols per injected q-ary symbol:
    k / (n * ambient_dim)."""
    return Fraction(params.k, params.n * params.ambient_dim)


def list_radius(params: CodeParams) -> Fraction:
    """Largest B with guaranteed list-decoding whenever L*rho + t <= B:
    B = nL - (L(L+1)/2)(k-1)/m - 1/m."""
    n, m, k, L = params.n, params.m, params.k, params.L
    return Fraction(2 * n * L * m - L * (L + 1) * (k - 1) - 2, 2 * m)


def admissible(params: CodeParams, rho: int, t: int) -> bool:
    """True iff (rho, t) is inside the guaranteed decoding radius."""
    if rho < 0 or t < 0:
        raise ValueError("rho and t must be non-negative")
    return Fraction(params.L * rho + t) <= list_radius(params)


# ---------------------------------------------------------------------------
# unique-decodable baseline codec
# ---------------------------------------------------------------------------

class KKParams:
    """Baseline code: messages over GF(q^m), codewords
    span{(alpha_i, f(alpha_i))} with alpha_i the first n power-basis
    elements of GF(q^m)."""

    def __init__(self, q: int, m: int, n: int, k: int):
        if not gf.is_prime(q):
            raise ValueError(f"q must be prime, got {q}")
        if not 1 <= k <= n:
            raise ValueError(f"k must satisfy 1 <= k <= n (k={k}, n={n})")
        if n > m:
            raise ValueError(f"n must satisfy n <= m (n={n}, m={m})")
        self.q, self.m, self.n, self.k = q, m, n, k
        self.field: FieldCtx = field_create(q, m)
        self.alphas = tuple(q**i for i in range(n))  # 1, X, X^2, ...
        self.ambient_dim = n + m

    def __repr__(self):
        return f"KKParams(q={self.q}, m={self.m}, n={self.n}, k={self.k})"


@functools.lru_cache(maxsize=None)
def derive_kk_params(q: int, m: int, n: int, k: int) -> KKParams:
    return KKParams(q, m, n, k)


def kk_radius(params: KKParams) -> int:
    """Unique decoding succeeds whenever rho + t < n - k + 1."""
    return params.n - params.k + 1


def kk_encode(params: KKParams, message) -> Subspace:
    """Codeword for k message symbols in GF(q^m)."""
    msg = [int(u) for u in message]
    if len(msg) != params.k:
        raise ValueError(f"message must have exactly k={params.k} symbols")
    if any(not 0 <= u < params.field.order for u in msg):
        raise ValueError("message symbols must lie in GF(q^m)")
    f = LinearizedPoly(params.field, msg)
    rows = []
    for i, alpha in enumerate(params.alphas):
        row = [0] * params.n
        row[i] = 1
        row.extend(params.field.coords(f.evaluate(alpha)))
        rows.append(row)
    return Subspace.from_vectors(params.q, params.ambient_dim, rows)
