"""Exact matrix arithmetic and canonical subspaces."""

import itertools

import pytest
from hypothesis import given, strategies as st

from hermline import Matrix, Subspace, all_matrices, enumerate_subspaces, make_field, nullspace
from hermline.matrices import all_vectors, extend_independent, outer_product, unit_vector


def gf4_matrix(rows, cols):
    f = make_field(2, 2, "frobenius")
    entry = st.integers(min_value=0, max_value=3)
    return st.lists(
        st.lists(entry, min_size=cols, max_size=cols), min_size=rows, max_size=rows
    ).map(lambda e: Matrix(f, e, cols=cols))


def test_constructor_validation(f2):
    with pytest.raises(ValueError):
        Matrix(f2, [[0, 1], [1]])
    with pytest.raises(ValueError):
        Matrix(f2, [[0, 2]])
    with pytest.raises(ValueError):
        Matrix(f2, [])
    empty = Matrix(f2, [], cols=3)
    assert empty.rows == 0 and empty.cols == 3


def test_basic_arithmetic(f3):
    a = Matrix(f3, [[1, 2], [0, 1]])
    b = Matrix(f3, [[2, 1], [1, 0]])
    assert a + b == Matrix(f3, [[0, 0], [1, 1]])
    assert a - b == Matrix(f3, [[2, 1], [2, 1]])
    assert -a == Matrix(f3, [[2, 1], [0, 2]])
    assert a * b == Matrix(f3, [[1, 1], [1, 0]])
    assert a.scale(2) == Matrix(f3, [[2, 1], [0, 2]])
    ident = Matrix.identity(f3, 2)
    assert a * ident == a and ident * a == a


def test_shape_and_field_mismatch(f2, f3):
    a = Matrix(f2, [[1, 0]])
    with pytest.raises(ValueError):
        a + Matrix(f2, [[1, 0], [0, 1]])
    with pytest.raises(ValueError):
        a + Matrix(f3, [[1, 0]])
    with pytest.raises(ValueError):
        a * Matrix(f2, [[1, 0]])


def test_transpose_and_sigma_transpose(f4):
    m = Matrix(f4, [[2, 1], [0, 3]])
    assert m.transpose() == Matrix(f4, [[2, 0], [1, 3]])
    assert m.sigma_transpose() == Matrix(
        f4, [[f4.sigma(2), 0], [f4.sigma(1), f4.sigma(3)]]
    )
    assert m.sigma_transpose().sigma_transpose() == m


@given(gf4_matrix(2, 2), gf4_matrix(2, 2), gf4_matrix(2, 2))
def test_algebra_laws_property(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a + b).transpose() == a.transpose() + b.transpose()


@given(gf4_matrix(2, 3), gf4_matrix(3, 2))
def test_sigma_transpose_antihomomorphism_property(a, b):
    assert (a * b).sigma_transpose() == b.sigma_transpose() * a.sigma_transpose()
    assert (a * b).transpose() == b.transpose() * a.transpose()


def test_block_assembly(f2):
    a = Matrix(f2, [[1, 1], [0, 1]])
    ident = Matrix.identity(f2, 2)
    zero = Matrix.zeros(f2, 2, 2)
    m = Matrix.from_blocks([[a, ident], [zero, a]])
    assert m.rows == 4 and m.cols == 4
    assert m.block(0, 2, 0, 2) == a
    assert m.block(0, 2, 2, 4) == ident
    assert m.block(2, 4, 0, 2) == zero
    assert m == a.hstack(ident).vstack(zero.hstack(a))


def test_zero_size_blocks(f2):
    a = Matrix(f2, [[1, 0], [0, 1]])
    empty_row = Matrix(f2, [], cols=2)
    wide = empty_row.hstack(Matrix(f2, [], cols=3))
    assert wide.rows == 0 and wide.cols == 5
    assert a.vstack(empty_row) == a
    tall = Matrix.from_blocks([[a], [empty_row]])
    assert tall == a
    thin = a.block(0, 2, 1, 1)
    assert thin.rows == 2 and thin.cols == 0
    assert (thin * thin.transpose()).is_zero()


def test_rref_and_rank(f2):
    m = Matrix(f2, [[0, 1, 1, 0], [1, 1, 0, 1], [1, 0, 1, 1]])
    reduced, rank = m.rref()
    assert rank == 2
    assert reduced.rref()[0] == reduced
    assert m.rank() == 2
    assert Matrix.zeros(f2, 2, 3).rank() == 0
    assert Matrix.identity(f2, 3).rank() == 3


@pytest.mark.parametrize("p", [2, 3])
def test_inverse_exhaustive(p):
    f = make_field(p)
    ident = Matrix.identity(f, 2)
    invertible = 0
    for m in all_matrices(f, 2, 2):
        if m.is_invertible():
            invertible += 1
            inv = m.inverse()
            assert m * inv == ident and inv * m == ident
        else:
            with pytest.raises(ValueError):
                m.inverse()
    q = f.q
    assert invertible == (q**2 - 1) * (q**2 - q)


def test_inverse_of_product(f9):
    a = Matrix(f9, [[1, 2], [3, 1]])
    b = Matrix(f9, [[0, 1], [4, 2]])
    assert a.is_invertible() and b.is_invertible()
    assert (a * b).inverse() == b.inverse() * a.inverse()


def test_zero_by_zero_inverse(f2):
    empty = Matrix(f2, [], cols=0)
    assert empty.inverse() == empty
    assert empty.is_invertible()


def test_is_hermitian(f4):
    g = 2
    assert Matrix(f4, [[1, g], [f4.sigma(g), 0]]).is_hermitian()
    assert not Matrix(f4, [[1, g], [g, 0]]).is_hermitian()
    assert not Matrix(f4, [[g, 0], [0, 0]]).is_hermitian()
    with pytest.raises(ValueError):
        Matrix(f4, [[1, 0, 0], [0, 1, 0]]).is_hermitian()


def test_matrix_json_roundtrip(f9):
    m = Matrix(f9, [[0, 5], [7, 2]])
    data = m.to_json()
    assert data == {"rows": 2, "cols": 2, "entries": [["0", "5"], ["7", "2"]]}
    assert Matrix.from_json(f9, data) == m
    with pytest.raises(ValueError):
        Matrix.from_json(f9, {"rows": 1, "cols": 1, "entries": [["9"]]})
    with pytest.raises(ValueError):
        Matrix.from_json(f9, {"rows": 2, "cols": 1, "entries": [["1"]]})


def test_subspace_canonical_equality(f2):
    a = Subspace(Matrix(f2, [[1, 0, 1, 0], [0, 1, 0, 1]]))
    b = Subspace(Matrix(f2, [[1, 1, 1, 1], [0, 1, 0, 1]]))
    assert a == b
    assert hash(a) == hash(b)
    assert a.dim == 2
    assert a.basis == a.basis.rref()[0]


def test_subspace_sum_and_intersection_oracle(f2):
    """Zassenhaus intersection agrees with brute-force vector membership."""
    planes = list(enumerate_subspaces(f2, 4, 2))
    vectors = list(all_vectors(f2, 4))
    for a in planes[:12]:
        overlaps = []
        for b in planes:
            meet = a.intersect(b)
            expected = [
                v for v in vectors if a.contains_vector(v) and b.contains_vector(v)
            ]
            assert len(expected) == f2.q**meet.dim
            assert all(meet.contains_vector(v) for v in expected)
            join = a + b
            assert join.dim == a.dim + b.dim - meet.dim
            assert join.contains(a) and join.contains(b)
            overlaps.append(meet.dim)
        assert max(overlaps) == 2


def test_subspace_contains(f2):
    big = Subspace(Matrix(f2, [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]]))
    small = Subspace(Matrix(f2, [[1, 1, 0, 0]]))
    assert big.contains(small)
    assert not small.contains(big)
    assert big.contains_vector((1, 1, 1, 0))
    assert not big.contains_vector((0, 0, 0, 1))


def test_zero_subspace(f3):
    z = Subspace.zero(f3, 4)
    assert z.dim == 0
    assert z.basis.rows == 0 and z.basis.cols == 4
    plane = Subspace(Matrix(f3, [[1, 0, 0, 0], [0, 1, 0, 0]]))
    assert (z + plane) == plane
    assert z.intersect(plane) == z
    assert plane.contains(z)
    assert z.contains_vector((0, 0, 0, 0))


def test_complete_basis(f3):
    space = Subspace(Matrix(f3, [[1, 2, 0, 1], [0, 0, 1, 2]]))
    full = space.complete_basis()
    assert full.rows == 4 and full.rank() == 4
    assert full.entries[:2] == space.basis.entries


def test_extend_independent(f2):
    rows = [(1, 0, 0, 0)]
    out = extend_independent(f2, 4, rows, [(1, 0, 0, 0), (1, 1, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0)])
    assert out[0] == (1, 0, 0, 0)
    assert Matrix(f2, out[:3], cols=4).rank() == 3
    with pytest.raises(ValueError):
        extend_independent(f2, 4, [(1, 0, 0, 0), (1, 0, 0, 0)], [])


def test_nullspace(f3):
    for m in itertools.islice(all_matrices(f3, 2, 4), 0, 81, 7):
        ns = nullspace(m)
        assert ns.dim == 4 - m.rank()
        for row in ns.basis.entries:
            col = Matrix(f3, [[x] for x in row], cols=1)
            assert (m * col).is_zero()


def test_all_matrices_order(f2):
    mats = list(all_matrices(f2, 2, 2))
    assert len(mats) == 16
    assert mats[0] == Matrix.zeros(f2, 2, 2)
    assert mats[1] == Matrix(f2, [[0, 0], [0, 1]])
    assert len(set(mats)) == 16


def test_unit_vector_and_outer_product(f3):
    assert unit_vector(4, 2) == (0, 0, 1, 0)
    m = outer_product(f3, (1, 2), (2, 1))
    assert m == Matrix(f3, [[2, 1], [1, 2]])
    assert m.rank() == 1


@pytest.mark.parametrize(
    "p,ambient,dim,expected",
    [(2, 4, 2, 35), (3, 4, 2, 130), (2, 4, 1, 15), (3, 4, 3, 40), (2, 3, 1, 7)],
)
def test_enumerate_subspaces_counts(p, ambient, dim, expected):
    field = make_field(p)
    subs = list(enumerate_subspaces(field, ambient, dim))
    assert len(subs) == expected
    assert len(set(subs)) == expected
    for s in subs:
        assert s.dim == dim
        assert s.basis == s.basis.rref()[0]


def test_enumerate_subspaces_extremes(f2):
    assert [s.dim for s in enumerate_subspaces(f2, 3, 0)] == [0]
    full = list(enumerate_subspaces(f2, 3, 3))
    assert len(full) == 1
    assert full[0].basis == Matrix.identity(f2, 3)
