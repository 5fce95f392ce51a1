import numpy as np
import pytest

from subspacecode import gf
from subspacecode.gf import (
    FieldCtx,
    field_create,
    find_normal_generator,
    frobenius,
    in_subfield,
    nth_roots_of_unity,
    nullspace_basis,
    nullspace_vector,
    rank_mod,
)

from conftest import NaiveField


def gf2_quadratic_has_root(coeffs):
    # coeffs = (c0, c1, 1) for X^2 + c1 X + c0 over GF(2)
    return any((x * x + coeffs[1] * x + coeffs[0]) % 2 == 0 for x in (0, 1))


def test_gf4_modulus_is_the_unique_irreducible_quadratic():
    # oracle: of the four monic quadratics over GF(2), only X^2+X+1 is
    # root-free (and degree 2 means root-free == irreducible)
    rootless = [
        (c0, c1, 1)
        for c0 in (0, 1)
        for c1 in (0, 1)
        if not gf2_quadratic_has_root((c0, c1, 1))
    ]
    assert rootless == [(1, 1, 1)]
    assert field_create(2, 2).modulus == (1, 1, 1)


def test_prime_field_and_cardinality_examples():
    f2 = field_create(2, 1)
    assert f2.modulus == (1, 1)  # X + 1
    assert f2.order == 2
    assert field_create(5, 8).order == 390625


def test_non_prime_q_rejected():
    with pytest.raises(ValueError):
        FieldCtx(4, 2)
    with pytest.raises(ValueError):
        FieldCtx(6, 1)
    with pytest.raises(ValueError):
        FieldCtx(2, 0)


def test_construction_is_reproducible():
    a = FieldCtx(3, 4)
    b = FieldCtx(3, 4)
    assert a.modulus == b.modulus
    assert find_normal_generator(a) == find_normal_generator(b)


def test_modulus_validation():
    with pytest.raises(ValueError):
        FieldCtx(2, 2, (1, 0, 1))  # X^2 + 1 = (X+1)^2
    with pytest.raises(ValueError):
        FieldCtx(2, 2, (1, 1))  # wrong degree
    assert FieldCtx(2, 2, (1, 1, 1)).order == 4


def test_frobenius_identity_and_period(rng):
    fld = field_create(3, 4)
    for _ in range(50):
        x = rng.randrange(fld.order)
        assert frobenius(fld, x, 0) == x
        assert frobenius(fld, x, fld.e) == x
        assert frobenius(fld, x, fld.e + 2) == frobenius(fld, x, 2)


def test_frobenius_gf4_omega():
    # omega = residue of X, code 2; omega^2 = omega + 1 = code 3
    fld = field_create(2, 2)
    assert frobenius(fld, 2, 1) == 3


def test_frobenius_is_field_automorphism(rng):
    for q, e in [(2, 5), (3, 3), (5, 2)]:
        fld = field_create(q, e)
        for _ in range(60):
            x = rng.randrange(fld.order)
            y = rng.randrange(fld.order)
            i = rng.randrange(2 * e)
            assert frobenius(fld, fld.mul(x, y), i) == fld.mul(
                frobenius(fld, x, i), frobenius(fld, y, i)
            )
            assert frobenius(fld, fld.add(x, y), i) == fld.add(
                frobenius(fld, x, i), frobenius(fld, y, i)
            )


@pytest.mark.parametrize("q,e", [(2, 4), (3, 3), (5, 2), (7, 2)])
def test_table_arithmetic_matches_naive_oracle(q, e, rng):
    fld = field_create(q, e)
    naive = NaiveField(q, fld.modulus)
    for _ in range(150):
        a = rng.randrange(fld.order)
        b = rng.randrange(fld.order)
        ca, cb = naive.from_int(a), naive.from_int(b)
        assert fld.coords(a) == ca
        assert fld.add(a, b) == naive.to_int(naive.add(ca, cb))
        assert fld.mul(a, b) == naive.to_int(naive.mul(ca, cb))
        assert fld.sub(fld.add(a, b), b) == a
        i = rng.randrange(e)
        assert fld.frob(a, i) == naive.to_int(naive.pow(ca, q**i))
    for a in range(1, min(fld.order, 80)):
        assert fld.mul(a, fld.inv(a)) == 1
        assert fld.pow(a, -1) == fld.inv(a)


def test_generic_path_matches_table_path(monkeypatch, rng):
    monkeypatch.setattr(gf, "_TABLE_LIMIT", 1)
    generic = FieldCtx(3, 3)
    assert generic._exp is None
    table = field_create(3, 3)
    for _ in range(120):
        a = rng.randrange(27)
        b = rng.randrange(27)
        i = rng.randrange(3)
        assert generic.add(a, b) == table.add(a, b)
        assert generic.sub(a, b) == table.sub(a, b)
        assert generic.mul(a, b) == table.mul(a, b)
        assert generic.frob(a, i) == table.frob(a, i)
        if a:
            assert generic.inv(a) == table.inv(a)
            assert generic.pow(a, 7) == table.pow(a, 7)
            assert generic.pow(a, -3) == table.pow(a, -3)


def test_coords_roundtrip(rng):
    fld = field_create(5, 3)
    for _ in range(40):
        x = rng.randrange(fld.order)
        assert fld.from_coords(fld.coords(x)) == x
    assert fld.coords(0) == (0, 0, 0)


def test_field_serialization_roundtrip():
    fld = field_create(3, 4)
    clone = FieldCtx.from_dict(fld.to_dict())
    assert clone == fld
    assert clone.modulus == fld.modulus


def test_in_subfield_membership_counts():
    fld = field_create(2, 4)
    for d in (1, 2, 4):
        count = sum(in_subfield(fld, x, d) for x in fld.elements())
        assert count == 2**d
    assert in_subfield(fld, 0, 1)
    assert in_subfield(fld, 0, 2)
    with pytest.raises(ValueError):
        in_subfield(fld, 1, 3)


def test_normal_generator_examples_and_properties():
    # GF(4): {omega, omega^2 = omega+1} is a basis, and omega is the first
    # candidate after the rank-deficient 0 and 1
    assert find_normal_generator(field_create(2, 2)) == 2
    for q, e in [(2, 4), (3, 3), (5, 2), (2, 6)]:
        fld = field_create(q, e)
        g = find_normal_generator(fld)
        assert g != 1 or e == 1
        orbit = []
        x = g
        for _ in range(e):
            orbit.append(fld.coords(x))
            x = fld.frob(x, 1)
        assert rank_mod(np.array(orbit), q) == e


def test_normal_generator_of_composite_extension_avoids_subfield():
    # a normal element of GF(q^{nm}) with n > 1 has full orbit, so it
    # cannot lie in the GF(q^m) subfield
    fld = field_create(2, 4)
    g = find_normal_generator(fld)
    assert not in_subfield(fld, g, 2)


def test_nth_roots_of_unity():
    f5 = field_create(5, 1)
    assert nth_roots_of_unity(f5, 4) == [1, 2, 3, 4]
    assert nth_roots_of_unity(f5, 2) == [1, 4]
    assert nth_roots_of_unity(f5, 1) == [1]
    f7 = field_create(7, 1)
    assert nth_roots_of_unity(f7, 3) == [1, 2, 4]  # 2^3=8=1, 4^3=64=1
    with pytest.raises(ValueError):
        nth_roots_of_unity(f5, 3)
    with pytest.raises(ValueError):
        nth_roots_of_unity(field_create(5, 2), 2)
    for e in nth_roots_of_unity(f7, 6):
        assert pow(e, 6, 7) == 1
    assert len(set(nth_roots_of_unity(f7, 6))) == 6


def test_nullspace_trivial_cases():
    f2 = field_create(2, 1)
    assert nullspace_basis(f2, [[1, 0], [0, 1]], 2) == []
    assert nullspace_vector(f2, [[1, 0], [0, 1]], 2) is None
    basis = nullspace_basis(f2, [[0, 0, 0], [0, 0, 0]], 3)
    assert len(basis) == 3
    assert nullspace_vector(f2, [[1, 1]], 2) == [1, 1]


def test_nullspace_vectors_satisfy_system(rng):
    fld = field_create(7, 1)
    for _ in range(30):
        nrows = rng.randint(1, 5)
        ncols = rng.randint(1, 6)
        rows = [[rng.randrange(7) for _ in range(ncols)] for _ in range(nrows)]
        basis = nullspace_basis(fld, rows, ncols)
        for vec in basis:
            for row in rows:
                acc = 0
                for c, v in zip(row, vec):
                    acc = fld.add(acc, fld.mul(c, v))
                assert acc == 0
        # rank-nullity
        assert len(basis) == ncols - rank_mod(np.array(rows), 7)
        # determinism and the first-free-variable convention
        assert nullspace_basis(fld, rows, ncols) == basis
        if basis:
            free_cols = [i for i, v in enumerate(basis[0]) if v == 1]
            assert basis[0] == nullspace_vector(fld, rows, ncols)


def test_nullspace_over_extension_field(rng):
    fld = field_create(2, 4)
    rows = [[rng.randrange(16) for _ in range(5)] for _ in range(3)]
    for vec in nullspace_basis(fld, rows, 5):
        for row in rows:
            acc = 0
            for c, v in zip(row, vec):
                acc = fld.add(acc, fld.mul(c, v))
            assert acc == 0
