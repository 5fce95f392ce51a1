"""Subspaces of GF(q)^n as canonical reduced-row-echelon bases.

RREF is the universal representative: two Subspace values compare equal iff
they are the same subspace, which makes golden fixtures and hashing exact.
"""

from __future__ import annotations

import numpy as np


def rref_mod(mat, q: int) -> np.ndarray:
    """Reduced row echelon form over GF(q); zero rows stripped."""
    a = np.array(mat, dtype=np.int64) % q
    if a.ndim != 2:
        raise ValueError("a two-dimensional matrix is required")
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
        col = a[:, c].copy()
        col[r] = 0
        if col.any():
            a = (a - np.outer(col, a[r])) % q
        r += 1
        if r == rows:
            break
    return a[:r]


class Subspace:
    """A subspace of GF(q)^ambient_dim, stored as its RREF basis."""

    __slots__ = ("q", "ambient_dim", "_basis")

    def __init__(self, q: int, ambient_dim: int, rref_rows):
        self.q = q
        self.ambient_dim = ambient_dim
        self._basis = tuple(tuple(int(x) for x in row) for row in rref_rows)

    @classmethod
    def from_vectors(cls, q: int, ambient_dim: int, vectors) -> "Subspace":
        vectors = [list(v) for v in vectors]
        for v in vectors:
            if len(v) != ambient_dim:
                raise ValueError(
                    f"vector length {len(v)} != ambient dimension {ambient_dim}"
                )
        if not vectors:
            return cls(q, ambient_dim, [])
        reduced = rref_mod(vectors, q)
        return cls(q, ambient_dim, reduced)

    @classmethod
    def zero(cls, q: int, ambient_dim: int) -> "Subspace":
        return cls(q, ambient_dim, [])

    @property
    def dim(self) -> int:
        return len(self._basis)

    @property
    def basis(self) -> tuple[tuple[int, ...], ...]:
        return self._basis

    def basis_array(self) -> np.ndarray:
        if not self._basis:
            return np.zeros((0, self.ambient_dim), dtype=np.int64)
        return np.array(self._basis, dtype=np.int64)

    def _check_ambient(self, other: "Subspace"):
        if self.q != other.q or self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient space mismatch")

    def sum(self, other: "Subspace") -> "Subspace":
        self._check_ambient(other)
        rows = list(self._basis) + list(other._basis)
        return Subspace.from_vectors(self.q, self.ambient_dim, rows)

    def intersect(self, other: "Subspace") -> "Subspace":
        """Zassenhaus: row reduce [A|A; B|0]; rows with zero left half carry
        an intersection basis in their right half."""
        self._check_ambient(other)
        n = self.ambient_dim
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.q, n)
        a = self.basis_array()
        b = other.basis_array()
        top = np.hstack([a, a])
        bottom = np.hstack([b, np.zeros_like(b)])
        red = rref_mod(np.vstack([top, bottom]), self.q)
        inter = [row[n:] for row in red if not row[:n].any()]
        return Subspace.from_vectors(self.q, n, inter)

    def contains(self, vector) -> bool:
        v = np.array(list(vector), dtype=np.int64) % self.q
        if v.shape != (self.ambient_dim,):
            raise ValueError("vector length mismatch")
        for row in self.basis_array():
            piv = int(np.argmax(row != 0)) if row.any() else -1
            if piv >= 0 and v[piv]:
                v = (v - v[piv] * row) % self.q
        return not v.any()

    def distance(self, other: "Subspace") -> int:
        """Subspace metric dim(A+B) - dim(A^B) = 2*dim(A+B) - dim A - dim B."""
        self._check_ambient(other)
        return 2 * self.sum(other).dim - self.dim - other.dim

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.q == other.q
            and self.ambient_dim == other.ambient_dim
            and self._basis == other._basis
        )

    def __hash__(self):
        return hash((self.q, self.ambient_dim, self._basis))

    def __repr__(self):
        return f"Subspace(q={self.q}, ambient={self.ambient_dim}, dim={self.dim})"

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "ambient_dim": self.ambient_dim,
            "basis": [list(row) for row in self._basis],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Subspace":
        return cls.from_vectors(d["q"], d["ambient_dim"], d["basis"])
