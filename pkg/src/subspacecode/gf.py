"""Finite field arithmetic for GF(q^e), q prime.

Field elements are plain ints in range(q**e): the base-q digits of the int
are the coordinates of the residue polynomial, least-significant digit =
constant term.  Keeping elements as ints makes them hashable, cheap to
compare and compact to serialize; coordinate vectors are recovered with
``FieldCtx.coords``.

Small fields (order <= _TABLE_LIMIT) get discrete-log / antilog tables plus
a Zech-logarithm table so that add/mul/inv/frobenius are O(1) int ops --
this is what keeps decoding over GF(5^8) fast.  Larger fields fall back to
explicit polynomial arithmetic on the digit vectors, which is plenty for
structural computations (normal bases, subfield tests, rank checks).
"""

from __future__ import annotations

import functools

import numpy as np

# Above this order we skip table construction and use generic arithmetic.
_TABLE_LIMIT = 1 << 19


class InternalDefect(RuntimeError):
    """An invariant the construction guarantees was violated: a bug, not bad input."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


# ---------------------------------------------------------------------------
# dense polynomial helpers over GF(q), coefficients low-degree first
# ---------------------------------------------------------------------------

def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mul(a: list[int], b: list[int], q: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % q
    return _poly_trim(out)


def _poly_mod(a: list[int], f: list[int], q: int) -> list[int]:
    # f monic of degree e; reduce a in place
    a = list(a)
    e = len(f) - 1
    for i in range(len(a) - 1, e - 1, -1):
        c = a[i]
        if c:
            a[i] = 0
            for j in range(e):
                if f[j]:
                    a[i - e + j] = (a[i - e + j] - c * f[j]) % q
    return _poly_trim(a)


def _poly_mulmod(a, b, f, q):
    return _poly_mod(_poly_mul(a, b, q), f, q)


def _poly_powmod(a, n, f, q):
    result = [1]
    base = _poly_mod(a, f, q)
    while n:
        if n & 1:
            result = _poly_mulmod(result, base, f, q)
        base = _poly_mulmod(base, base, f, q)
        n >>= 1
    return result


def _poly_gcd(a, b, q):
    a, b = list(a), list(b)
    while b:
        # a mod b with b made monic first
        lead_inv = pow(b[-1], q - 2, q)
        bm = [(c * lead_inv) % q for c in b]
        r = list(a)
        for i in range(len(r) - 1, len(bm) - 2, -1):
            c = r[i]
            if c:
                r[i] = 0
                for j in range(len(bm) - 1):
                    r[i - len(bm) + 1 + j] = (r[i - len(bm) + 1 + j] - c * bm[j]) % q
        a, b = b, _poly_trim(r)
    return a


def _is_irreducible(f: list[int], q: int) -> bool:
    """Rabin test: f of degree e is irreducible iff X^{q^e} = X mod f and
    gcd(X^{q^{e/p}} - X, f) = 1 for every prime p | e."""
    e = len(f) - 1
    if e == 1:
        return True
    x = [0, 1]
    # iterated q-th powers of X mod f
    powers = [x]
    r = x
    for _ in range(e):
        r = _poly_powmod(r, q, f, q)
        powers.append(r)
    if powers[e] != x:
        return False
    primes = set()
    dd = e
    p = 2
    while p * p <= dd:
        if dd % p == 0:
            primes.add(p)
            while dd % p == 0:
                dd //= p
        p += 1
    if dd > 1:
        primes.add(dd)
    for p in primes:
        g = list(powers[e // p])
        # g - X
        while len(g) < 2:
            g.append(0)
        g[1] = (g[1] - 1) % q
        g = _poly_trim(g)
        gc = _poly_gcd(f, g, q)
        if len(gc) - 1 != 0:
            return False
    return True


def _first_irreducible(q: int, e: int) -> tuple[int, ...]:
    """First monic irreducible of degree e, scanning the non-leading
    coefficient vector as an ascending base-q counter (constant digit
    fastest, starting at 1)."""
    for idx in range(1, q**e):
        coeffs = []
        v = idx
        for _ in range(e):
            coeffs.append(v % q)
            v //= q
        f = coeffs + [1]
        if _is_irreducible(f, q):
            return tuple(f)
    raise InternalDefect(f"no irreducible polynomial of degree {e} over GF({q})")


# ---------------------------------------------------------------------------
# field context
# ---------------------------------------------------------------------------

class FieldCtx:
    """Arithmetic context for GF(q^e).

    Immutable after construction; all operations are pure functions of their
    int arguments, so a context can be shared freely across threads.
    """

    def __init__(self, q: int, e: int, modulus=None):
        if not is_prime(q):
            raise ValueError(f"q must be prime, got {q}")
        if e < 1:
            raise ValueError(f"extension degree must be >= 1, got {e}")
        self.q = q
        self.e = e
        self.order = q**e
        if modulus is None:
            modulus = _first_irreducible(q, e)
        else:
            modulus = tuple(int(c) % q for c in modulus)
            if len(modulus) != e + 1 or modulus[-1] != 1:
                raise ValueError("modulus must be monic of degree e")
            if not _is_irreducible(list(modulus), q):
                raise ValueError("modulus is not irreducible")
        self.modulus = modulus
        self._frob_mats: dict[int, np.ndarray] = {}
        if self.order <= _TABLE_LIMIT:
            self._build_tables()
            self._install_table_ops()
        else:
            self._exp = self._log = self._zech = None
            self._install_generic_ops()

    # -- representation ----------------------------------------------------

    def coords(self, a: int) -> tuple[int, ...]:
        """Coordinates of a w.r.t. the power basis, constant term first."""
        q = self.q
        out = []
        for _ in range(self.e):
            out.append(a % q)
            a //= q
        return tuple(out)

    def from_coords(self, digits) -> int:
        q = self.q
        a = 0
        for d in reversed(list(digits)):
            d = int(d) % q
            a = a * q + d
        return a

    def elements(self):
        return range(self.order)

    def to_dict(self) -> dict:
        return {"q": self.q, "e": self.e, "modulus": list(self.modulus)}

    @classmethod
    def from_dict(cls, d: dict) -> "FieldCtx":
        return cls(d["q"], d["e"], d["modulus"])

    def __eq__(self, other):
        return (
            isinstance(other, FieldCtx)
            and (self.q, self.e, self.modulus) == (other.q, other.e, other.modulus)
        )

    def __hash__(self):
        return hash((self.q, self.e, self.modulus))

    def __repr__(self):
        return f"FieldCtx(q={self.q}, e={self.e})"

    # -- generic arithmetic (any order) -------------------------------------

    def _add_generic(self, a: int, b: int) -> int:
        q = self.q
        out = 0
        mult = 1
        while a or b:
            out += ((a + b) % q) * mult
            a //= q
            b //= q
            mult *= q
        return out

    def _sub_generic(self, a: int, b: int) -> int:
        q = self.q
        out = 0
        mult = 1
        while a or b:
            out += ((a - b) % q) * mult
            a //= q
            b //= q
            mult *= q
        return out

    def _neg_generic(self, a: int) -> int:
        q = self.q
        out = 0
        mult = 1
        while a:
            out += ((-a) % q) * mult
            a //= q
            mult *= q
        return out

    def _mul_generic(self, a: int, b: int) -> int:
        prod = _poly_mulmod(list(self.coords(a)), list(self.coords(b)),
                            list(self.modulus), self.q)
        return self.from_coords(prod)

    def _pow_generic(self, a: int, n: int) -> int:
        if n < 0:
            a = self._inv_generic(a)
            n = -n
        result = 1
        while n:
            if n & 1:
                result = self._mul_generic(result, a)
            a = self._mul_generic(a, a)
            n >>= 1
        return result

    def _inv_generic(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero field element")
        return self._pow_generic(a, self.order - 2)

    def _frob_matrix(self, i: int) -> np.ndarray:
        i %= self.e
        mat = self._frob_mats.get(i)
        if mat is None:
            if i == 0:
                mat = np.eye(self.e, dtype=np.int64)
            else:
                one = self._frob_mats.get(1)
                if one is None:
                    # column j = coords((X^j)^q mod f)
                    xq = _poly_powmod([0, 1], self.q, list(self.modulus), self.q)
                    col = [1]
                    cols = []
                    for _ in range(self.e):
                        padded = col + [0] * (self.e - len(col))
                        cols.append(padded[: self.e])
                        col = _poly_mulmod(col, xq, list(self.modulus), self.q)
                    one = np.array(cols, dtype=np.int64).T
                    self._frob_mats[1] = one
                mat = one
                for _ in range(i - 1):
                    mat = (mat @ one) % self.q
            self._frob_mats[i] = mat
        return mat

    def _frob_generic(self, a: int, i: int) -> int:
        i %= self.e
        if i == 0 or a == 0:
            return a
        v = np.array(self.coords(a), dtype=np.int64)
        w = (self._frob_matrix(i) @ v) % self.q
        return self.from_coords(w)

    def _install_generic_ops(self):
        self.add = self._add_generic
        self.sub = self._sub_generic
        self.neg = self._neg_generic
        self.mul = self._mul_generic
        self.inv = self._inv_generic
        self.pow = self._pow_generic
        self.frob = self._frob_generic
        if self.q == 2:
            self.add = lambda a, b: a ^ b
            self.sub = self.add
            self.neg = lambda a: a

    # -- table-backed arithmetic --------------------------------------------

    def _find_primitive(self) -> int:
        n = self.order - 1
        if n == 1:
            return 1
        primes = []
        m = n
        p = 2
        while p * p <= m:
            if m % p == 0:
                primes.append(p)
                while m % p == 0:
                    m //= p
            p += 1
        if m > 1:
            primes.append(m)
        for g in range(2, self.order):
            if all(self._pow_generic(g, n // p) != 1 for p in primes):
                return g
        raise InternalDefect("no primitive element found")

    def _build_tables(self):
        n = self.order - 1
        g = self._find_primitive()
        q, e = self.q, self.e
        block = min(n, 1024)
        codes = [1]
        cur = 1
        for _ in range(block - 1):
            cur = self._mul_generic(cur, g)
            codes.append(cur)
        coords = np.array([self.coords(c) for c in codes], dtype=np.int64)
        if n > block:
            gb = self._mul_generic(cur, g)  # g^block
            mat = np.array(
                [self.coords(self._mul_generic(gb, q**j)) for j in range(e)],
                dtype=np.int64,
            ).T
            parts = [coords]
            total = block
            cur_block = coords
            while total < n:
                cur_block = (cur_block @ mat.T) % q
                take = min(block, n - total)
                parts.append(cur_block[:take])
                total += take
            coords = np.vstack(parts)
        qvec = q ** np.arange(e, dtype=np.int64)
        exp = coords @ qvec
        if np.unique(exp).size != n:
            raise InternalDefect("antilog table is not a permutation; bad primitive element")
        log = np.zeros(self.order, dtype=np.int64)
        log[exp] = np.arange(n, dtype=np.int64)
        exp_ext = np.concatenate([exp, exp[: n - 1]]) if n > 1 else exp
        self._exp = exp_ext.tolist()
        self._log = log.tolist()
        if q > 2:
            c0 = exp % q
            bumped = exp - c0 + (c0 + 1) % q  # codes of 1 + g^d
            zech = np.where(bumped == 0, -1, log[bumped])
            self._zech = zech.tolist()
        else:
            self._zech = None
        self._qpows = [pow(q, i, n) if n > 1 else 0 for i in range(e)]

    def _install_table_ops(self):
        exp = self._exp
        log = self._log
        n = self.order - 1
        e = self.e
        q = self.q
        qpows = self._qpows

        def mul(a, b):
            if a == 0 or b == 0:
                return 0
            return exp[log[a] + log[b]]

        def inv(a):
            if a == 0:
                raise ZeroDivisionError("inverse of zero field element")
            return exp[(n - log[a]) % n]

        def fpow(a, k):
            if a == 0:
                if k == 0:
                    return 1
                if k < 0:
                    raise ZeroDivisionError("inverse of zero field element")
                return 0
            return exp[(log[a] * k) % n]

        def frob(a, i):
            if a == 0:
                return 0
            return exp[(log[a] * qpows[i % e]) % n]

        if q == 2:
            def add(a, b):
                return a ^ b

            sub = add

            def neg(a):
                return a
        else:
            zech = self._zech
            half = n // 2  # log of -1 (n is even for odd q)

            def add(a, b):
                if a == 0:
                    return b
                if b == 0:
                    return a
                la = log[a]
                d = log[b] - la
                if d < 0:
                    d += n
                z = zech[d]
                if z < 0:
                    return 0
                return exp[la + z]

            def neg(a):
                if a == 0:
                    return 0
                return exp[log[a] + half]

            def sub(a, b):
                if b == 0:
                    return a
                return add(a, exp[log[b] + half])

        self.add = add
        self.sub = sub
        self.neg = neg
        self.mul = mul
        self.inv = inv
        self.pow = fpow
        self.frob = frob


@functools.lru_cache(maxsize=None)
def field_create(q: int, e: int) -> FieldCtx:
    """GF(q^e) with the first monic irreducible modulus in enumeration order.

    Cached: repeated calls with the same (q, e) return the same context, so
    table construction happens once per field.
    """
    return FieldCtx(q, e)


# ---------------------------------------------------------------------------
# field-level operations
# ---------------------------------------------------------------------------

def frobenius(ctx: FieldCtx, x: int, i: int) -> int:
    """x^{q^i}; i is reduced mod e since the automorphism has order e."""
    return ctx.frob(x, i % ctx.e)


def in_subfield(ctx: FieldCtx, x: int, d: int) -> bool:
    """True iff x lies in the subfield GF(q^d), i.e. x^{q^d} = x."""
    if d < 1 or ctx.e % d != 0:
        raise ValueError(f"{d} does not divide extension degree {ctx.e}")
    return ctx.frob(x, d % ctx.e) == x


def _orbit_rank_full(ctx: FieldCtx, cand: int) -> bool:
    orbit = []
    x = cand
    for _ in range(ctx.e):
        orbit.append(ctx.coords(x))
        x = ctx.frob(x, 1)
    return rank_mod(np.array(orbit, dtype=np.int64), ctx.q) == ctx.e


def find_normal_generator(ctx: FieldCtx) -> int:
    """First element (ascending int encoding) whose Frobenius orbit
    {g, g^q, ..., g^{q^{e-1}}} is a basis of GF(q^e) over GF(q).

    Zero-trace elements are skipped in bulk: their orbit sums to zero and
    is therefore dependent, so the filter never changes the answer.  (With
    the sparse default moduli, whole degree ranges can be trace-free, which
    makes this the difference between milliseconds and minutes.)
    """
    e, q = ctx.e, ctx.q
    tr_vec = []
    for j in range(e):
        acc = 0
        x = q**j
        for _ in range(e):
            acc = ctx.add(acc, x)
            x = ctx.frob(x, 1)
        if acc >= q:
            raise InternalDefect("trace of a basis element left the prime field")
        tr_vec.append(acc)
    tr_vec = np.array(tr_vec, dtype=np.int64)
    if not tr_vec.any():
        raise InternalDefect("trace functional vanished; it is surjective")
    block = 1 << 14
    start = 1
    while start < ctx.order:
        stop = min(start + block, ctx.order)
        codes = np.arange(start, stop, dtype=np.int64)
        digs = codes.copy()
        traces = np.zeros(len(codes), dtype=np.int64)
        for j in range(e):
            traces += (digs % q) * tr_vec[j]
            digs //= q
        for cand in codes[np.nonzero(traces % q)[0]]:
            if _orbit_rank_full(ctx, int(cand)):
                return int(cand)
        start = stop
    raise InternalDefect(f"no normal basis generator found in {ctx!r}")


def nth_roots_of_unity(ctx: FieldCtx, n: int) -> list[int]:
    """All n solutions of x^n = 1 in the prime field GF(q), 1 first, the
    rest ascending.  Requires n | q-1."""
    if ctx.e != 1:
        raise ValueError("roots of unity are drawn from a prime field context")
    q = ctx.q
    if n < 1 or (q - 1) % n != 0:
        raise ValueError(f"n={n} must divide q-1={q - 1}")
    roots = [x for x in range(1, q) if pow(x, n, q) == 1]
    if len(roots) != n:
        raise InternalDefect("wrong root-of-unity count")
    return roots


def rank_mod(mat: np.ndarray, q: int) -> int:
    """Rank of an integer matrix over GF(q)."""
    a = np.array(mat, dtype=np.int64) % q
    rows, cols = a.shape
    r = 0
    for c in range(cols):
        piv = -1
        for i in range(r, rows):
            if a[i, c]:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        p = int(a[r, c])
        if p != 1:
            a[r] = (a[r] * pow(p, q - 2, q)) % q
        col = a[r + 1 :, c].copy()
        if col.any():
            a[r + 1 :] = (a[r + 1 :] - np.outer(col, a[r])) % q
        r += 1
        if r == rows:
            break
    return r


def nullspace_basis(ctx: FieldCtx, rows, ncols: int) -> list[list[int]]:
    """Deterministic nullspace basis of the homogeneous system with the given
    coefficient rows over ctx.

    Gaussian elimination with first-nonzero-column pivoting; one basis vector
    per free column, with that free variable set to 1 and the others to 0.
    Returns [] when the nullspace is trivial.
    """
    mul = ctx.mul
    sub = ctx.sub
    inv = ctx.inv
    neg = ctx.neg
    mat = [list(r) for r in rows]
    nrows = len(mat)
    pivots = []
    prow = 0
    for col in range(ncols):
        piv = -1
        for r in range(prow, nrows):
            if mat[r][col]:
                piv = r
                break
        if piv < 0:
            continue
        if piv != prow:
            mat[prow], mat[piv] = mat[piv], mat[prow]
        row = mat[prow]
        pinv = inv(row[col])
        if pinv != 1:
            for j in range(col, ncols):
                if row[j]:
                    row[j] = mul(pinv, row[j])
        for r in range(nrows):
            other = mat[r]
            f = other[col]
            if r != prow and f:
                for j in range(col, ncols):
                    v = row[j]
                    if v:
                        other[j] = sub(other[j], mul(f, v))
        pivots.append(col)
        prow += 1
        if prow == nrows:
            break
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [0] * ncols
        vec[free] = 1
        for i, pc in enumerate(pivots):
            if pc < free and mat[i][free]:
                vec[pc] = neg(mat[i][free])
        basis.append(vec)
    return basis


def nullspace_vector(ctx: FieldCtx, rows, ncols: int):
    """First nullspace basis vector (first free variable = 1, rest = 0), or
    None when the system has only the trivial solution."""
    basis = nullspace_basis(ctx, rows, ncols)
    return basis[0] if basis else None
