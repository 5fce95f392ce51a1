import itertools

import numpy as np
import pytest

from subspacecode.subspace import Subspace, rref_mod


def random_subspace(nprng, q, ambient, max_rows=None):
    rows = int(nprng.integers(0, (max_rows or ambient) + 1))
    if rows == 0:
        return Subspace.zero(q, ambient)
    mat = nprng.integers(0, q, size=(rows, ambient))
    return Subspace.from_vectors(q, ambient, mat)


def naive_intersection(a, b):
    """Exhaustive oracle: enumerate every vector of A and keep those in B."""
    q, n = a.q, a.ambient_dim
    vecs = []
    for combo in itertools.product(range(q), repeat=a.dim):
        v = np.zeros(n, dtype=np.int64)
        for c, row in zip(combo, a.basis_array()):
            v = (v + c * row) % q
        if b.contains(v):
            vecs.append(v)
    return Subspace.from_vectors(q, n, vecs)


def test_from_vectors_basics():
    s = Subspace.from_vectors(2, 3, [])
    assert s.dim == 0
    dup = Subspace.from_vectors(2, 3, [[1, 0, 1], [1, 0, 1]])
    assert dup.dim == 1
    assert dup == Subspace.from_vectors(2, 3, [[1, 0, 1]])
    full = Subspace.from_vectors(2, 2, [[1, 0], [1, 1]])
    assert full.dim == 2
    with pytest.raises(ValueError):
        Subspace.from_vectors(2, 3, [[1, 0]])


def test_canonical_form(nprng):
    # any basis of the same space reduces to bit-identical RREF
    for _ in range(30):
        a = random_subspace(nprng, 3, 6)
        if a.dim == 0:
            continue
        while True:
            m = nprng.integers(0, 3, size=(a.dim, a.dim))
            if rref_mod(m, 3).shape[0] == a.dim:
                break
        scrambled = (m @ a.basis_array()) % 3
        assert Subspace.from_vectors(3, 6, scrambled) == a


def test_sum_intersect_idempotent(nprng):
    a = random_subspace(nprng, 2, 5)
    assert a.sum(a) == a
    assert a.intersect(a) == a


def test_two_distinct_lines():
    a = Subspace.from_vectors(2, 2, [[1, 0]])
    b = Subspace.from_vectors(2, 2, [[0, 1]])
    assert a.sum(b).dim == 2
    assert a.intersect(b).dim == 0
    assert a.distance(b) == 2


def test_dimension_formula(nprng):
    for _ in range(50):
        a = random_subspace(nprng, 2, 7)
        b = random_subspace(nprng, 2, 7)
        assert a.sum(b).dim + a.intersect(b).dim == a.dim + b.dim


def test_intersection_matches_exhaustive_oracle(nprng):
    for q in (2, 3):
        for _ in range(20):
            a = random_subspace(nprng, q, 5, max_rows=3)
            b = random_subspace(nprng, q, 5, max_rows=3)
            assert a.intersect(b) == naive_intersection(a, b)


def test_distance_examples():
    a = Subspace.from_vectors(2, 4, [[1, 0, 0, 0]])
    assert a.distance(a) == 0
    bigger = Subspace.from_vectors(2, 4, [[1, 0, 0, 0], [0, 1, 0, 0]])
    assert a.distance(bigger) == 1  # nested, dims 1 and 2
    assert bigger.distance(a) == 1


def test_metric_axioms(nprng):
    for _ in range(300):
        a = random_subspace(nprng, 2, 6)
        b = random_subspace(nprng, 2, 6)
        c = random_subspace(nprng, 2, 6)
        dab = a.distance(b)
        assert dab == b.distance(a)
        assert a.distance(a) == 0
        if a != b:
            assert dab > 0
        assert a.distance(c) <= dab + b.distance(c)
        # the two forms of the metric agree
        assert dab == a.sum(b).dim - a.intersect(b).dim


def test_contains(nprng):
    a = Subspace.from_vectors(3, 4, [[1, 0, 2, 0], [0, 1, 1, 1]])
    for combo in itertools.product(range(3), repeat=2):
        v = (combo[0] * np.array([1, 0, 2, 0]) + combo[1] * np.array([0, 1, 1, 1])) % 3
        assert a.contains(v)
    assert not a.contains([0, 0, 1, 0])
    with pytest.raises(ValueError):
        a.contains([1, 0])


def test_ambient_mismatch_rejected():
    a = Subspace.from_vectors(2, 3, [[1, 0, 0]])
    b = Subspace.from_vectors(2, 4, [[1, 0, 0, 0]])
    with pytest.raises(ValueError):
        a.sum(b)
    with pytest.raises(ValueError):
        a.distance(b)


def test_serialization_roundtrip(nprng):
    a = random_subspace(nprng, 3, 5)
    assert Subspace.from_dict(a.to_dict()) == a
    d = a.to_dict()
    assert set(d) == {"q", "ambient_dim", "basis"}
