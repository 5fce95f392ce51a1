"""Operator channel simulation.

The channel projects the transmitted subspace onto a random subspace of
itself (erasures) and direct-sums a random error space: the received space
is U = H(V) (+) E with dim H(V) = dim V - rho and dim E = t.  Everything is
driven by a seeded PCG64 stream, so a (V, config) pair always yields the
same U.

A minimum-distance decoder over a code C recovers V from U whenever
2(t + rho) < D(C); that inequality is recorded here for reference only --
nothing in this package computes minimum distances over whole codes.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .subspace import Subspace, rref_mod


@dataclass(frozen=True)
class ChannelConfig:
    """rho = erased dimensions, t = injected error dimensions."""

    rho: int
    t: int
    seed: int


def _rank(mat, q: int) -> int:
    return rref_mod(mat, q).shape[0]


def transmit(space: Subspace, cfg: ChannelConfig) -> Subspace:
    """Pass a subspace through the operator channel.

    H(V) is the row space of a uniformly random full-rank
    (dim V - rho) x (dim V) matrix applied to V's basis; the error space is
    drawn by rejection until it meets H(V) trivially, which guarantees the
    direct sum.  Deterministic for fixed (space, cfg).
    """
    q = space.q
    dim_v = space.dim
    if not 0 <= cfg.rho <= dim_v:
        raise ValueError(f"rho={cfg.rho} must be between 0 and dim(V)={dim_v}")
    keep = dim_v - cfg.rho
    if cfg.t < 0 or cfg.t > space.ambient_dim - keep:
        raise ValueError(
            f"t={cfg.t} does not fit: ambient leaves room for "
            f"{space.ambient_dim - keep} error dimensions"
        )
    rng = np.random.Generator(np.random.PCG64(cfg.seed))
    if keep == dim_v:
        h_rows = space.basis_array()
    elif keep == 0:
        h_rows = np.zeros((0, space.ambient_dim), dtype=np.int64)
    else:
        basis = space.basis_array()
        while True:
            m = rng.integers(0, q, size=(keep, dim_v))
            if _rank(m, q) == keep:
                break
        h_rows = (m @ basis) % q
    if cfg.t == 0:
        return Subspace.from_vectors(q, space.ambient_dim, h_rows)
    while True:
        err = rng.integers(0, q, size=(cfg.t, space.ambient_dim))
        stacked = np.vstack([h_rows, err]) if len(h_rows) else err
        if _rank(stacked, q) == keep + cfg.t:
            return Subspace.from_vectors(q, space.ambient_dim, stacked)


def count_errors_erasures(sent: Subspace, received: Subspace) -> tuple[int, int]:
    """Ground-truth (rho, t) recovered from the geometry:
    rho = dim V - dim(V^U), t = dim U - dim(V^U)."""
    sent._check_ambient(received)
    common = sent.intersect(received).dim
    return sent.dim - common, received.dim - common
