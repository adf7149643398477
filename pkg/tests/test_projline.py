"""Points of the line, the parametrisation and the relations on points."""

import itertools

import pytest

from hermline import (
    ANTIAUTOMORPHISM,
    AUTOMORPHISM,
    BartolonePair,
    JordanMapSpec,
    Matrix,
    SubspacePoint,
    all_matrices,
    annihilator,
    arithmetical_distance,
    bartolone,
    base_point,
    embed_matrix_space,
    enumerate_points,
    is_adjacent,
    is_distant,
    jordan_action,
    make_field,
    pencil,
    point_from_matrix,
    point_from_pair,
    sphere,
    stable_rank_witness,
    star,
    top,
)
from hermline.matrices import Subspace, all_vectors


def all_pairs(field, n=2):
    mats = list(all_matrices(field, n, n))
    return [BartolonePair(t1, t2) for t1 in mats for t2 in mats]


def test_point_validation(f2):
    with pytest.raises(ValueError):
        SubspacePoint(Subspace(Matrix(f2, [[1, 0, 0, 0]])), 2)
    zero = Matrix.zeros(f2, 2, 2)
    with pytest.raises(ValueError):
        point_from_pair(zero, zero)
    with pytest.raises(ValueError):
        point_from_pair(Matrix.identity(f2, 2), Matrix.identity(make_field(3), 2))


def test_point_from_matrix_canonicalises(f2):
    m = Matrix(f2, [[1, 1, 1, 1], [0, 1, 0, 1]])
    p = point_from_matrix(f2, 2, m)
    assert p.space.basis == Matrix(f2, [[1, 0, 1, 0], [0, 1, 0, 1]])
    with pytest.raises(ValueError):
        point_from_matrix(f2, 2, Matrix(f2, [[1, 1, 1, 1], [1, 1, 1, 1]]))
    with pytest.raises(ValueError):
        point_from_matrix(f2, 2, Matrix(f2, [[1, 0], [0, 1]]))


def test_base_point(f2):
    assert base_point(f2, 2).space.basis == Matrix(f2, [[1, 0, 0, 0], [0, 1, 0, 0]])
    a, b = base_point(f2, 2).blocks()
    assert a == Matrix.identity(f2, 2)
    assert b.is_zero()


def test_bartolone_frozen_examples(f2):
    ident = Matrix.identity(f2, 2)
    zero = Matrix.zeros(f2, 2, 2)
    assert bartolone(BartolonePair(ident, ident)).space.basis == Matrix(
        f2, [[0, 0, 1, 0], [0, 0, 0, 1]]
    )
    assert bartolone(BartolonePair(zero, ident)).space.basis == Matrix(
        f2, [[1, 0, 1, 0], [0, 1, 0, 1]]
    )
    assert bartolone(BartolonePair(ident, zero)) == base_point(f2, 2)


def test_bartolone_surjective(f2, f3):
    for field in (f2, f3):
        image = {bartolone(pair) for pair in all_pairs(field)}
        assert image == set(enumerate_points(field, 2))


@pytest.mark.parametrize(
    "maker,expected",
    [
        (lambda: make_field(2), 35),
        (lambda: make_field(3), 130),
        (lambda: make_field(2, 2, "frobenius"), 357),
    ],
)
def test_enumerate_points_counts(maker, expected):
    points = enumerate_points(maker(), 2)
    assert len(points) == expected
    assert len(set(points)) == expected
    for p in points:
        assert p.space.basis.rank() == 2


def test_enumeration_starts_at_base_point(f2):
    assert enumerate_points(f2, 2)[0] == base_point(f2, 2)


def test_distant_is_complementarity(f2):
    points = enumerate_points(f2, 2)
    for p in points:
        assert not is_distant(p, p)
        for q in points:
            expected = p.space.intersect(q.space).dim == 0
            assert is_distant(p, q) == expected
            assert is_distant(q, p) == expected


def test_arithmetical_distance_formula(f2):
    points = enumerate_points(f2, 2)
    for p in points:
        for q in points:
            d = arithmetical_distance(p, q)
            assert d == 2 - p.space.intersect(q.space).dim
            assert is_adjacent(p, q) == (d == 1)
    with pytest.raises(ValueError):
        arithmetical_distance(points[0], base_point(make_field(3), 2))


def test_stable_rank_witness(f2, f3):
    for field in (f2, f3):
        mats = list(all_matrices(field, 2, 2))
        for a in mats:
            for b in mats:
                if a.hstack(b).rank() < 2:
                    continue
                w = stable_rank_witness(a, b)
                assert (a + b * w).is_invertible()
    with pytest.raises(ValueError):
        zero = Matrix.zeros(f2, 2, 2)
        stable_rank_witness(zero, zero)


def test_witness_prefers_simple_candidates(f2):
    ident = Matrix.identity(f2, 2)
    zero = Matrix.zeros(f2, 2, 2)
    assert stable_rank_witness(ident, ident) == zero
    assert stable_rank_witness(zero, ident) == ident


def test_annihilator_exhaustive(f2):
    ident = Matrix.identity(f2, 2)
    for pair in all_pairs(f2):
        ann = annihilator(pair)
        assert ann.rows == 4 and ann.cols == 2
        assert ann.rank() == 2
        left = (pair.t2 * pair.t1 - ident).hstack(pair.t2)
        assert (left * ann).is_zero()


def test_embedding_injectivity(f2, f3):
    for field in (f2, f3):
        for t1_0 in (Matrix.zeros(field, 2, 2), Matrix.identity(field, 2)):
            images = {embed_matrix_space(t1_0, t2) for t2 in all_matrices(field, 2, 2)}
            assert len(images) == field.q**4


def test_jordan_map_spec_validation(f2):
    with pytest.raises(ValueError):
        JordanMapSpec("twist", 0, Matrix.identity(f2, 2))
    with pytest.raises(ValueError):
        JordanMapSpec(AUTOMORPHISM, 0, Matrix.zeros(f2, 2, 2))


def test_jordan_apply_multiplicativity(f4):
    shear = Matrix(f4, [[1, 1], [0, 1]])
    auto = JordanMapSpec(AUTOMORPHISM, 1, shear)
    anti = JordanMapSpec(ANTIAUTOMORPHISM, 0, shear)
    mats = list(itertools.islice(all_matrices(f4, 2, 2), 0, 256, 11))
    for a in mats:
        for b in mats:
            assert auto.apply(a * b) == auto.apply(a) * auto.apply(b)
            assert anti.apply(a * b) == anti.apply(b) * anti.apply(a)
    ident = Matrix.identity(f4, 2)
    assert auto.apply(ident) == ident
    assert anti.apply(ident) == ident


def test_jordan_action_well_defined_on_collisions(f2):
    """Pairs that parametrise one point map to one image point."""
    spec = JordanMapSpec(ANTIAUTOMORPHISM, 0, Matrix(f2, [[1, 1], [0, 1]]))
    by_point = {}
    for pair in all_pairs(f2):
        by_point.setdefault(bartolone(pair), []).append(pair)
    collisions = 0
    for point, pairs in by_point.items():
        images = {jordan_action(spec, pair) for pair in pairs}
        assert len(images) == 1
        collisions += len(pairs) - 1
    assert collisions > 0


def test_sphere_partitions_points(f2):
    base = base_point(f2, 2)
    shells = [sphere(f2, 2, k) for k in range(3)]
    assert [len(s) for s in shells] == [1, 18, 16]
    assert sum(len(s) for s in shells) == 35
    for k, shell in enumerate(shells):
        for p in shell:
            assert arithmetical_distance(base, p) == k
    with pytest.raises(ValueError):
        sphere(f2, 2, 3)


def test_star_is_points_through_fixed_hyperplane(f2, f3):
    """star(c0) is exactly the set of points containing a fixed (n-1)-space."""
    for field in (f2, f3):
        for c0 in all_vectors(field, 2):
            if not any(c0):
                continue
            fixed = Subspace.from_rows(
                field,
                4,
                [
                    v + (0, 0)
                    for v in all_vectors(field, 2)
                    if field.add(field.mul(v[0], c0[0]), field.mul(v[1], c0[1])) == 0
                ],
            )
            assert fixed.dim == 1
            expected = {
                p for p in enumerate_points(field, 2) if p.space.contains(fixed)
            }
            assert set(star(field, 2, c0)) == expected


def test_top_is_points_inside_fixed_overspace(f2, f3):
    for field in (f2, f3):
        for d0 in all_vectors(field, 2):
            if not any(d0):
                continue
            overspace = Subspace(
                Matrix(
                    field,
                    [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0) + tuple(d0)],
                    cols=4,
                )
            )
            assert overspace.dim == 3
            expected = {
                p for p in enumerate_points(field, 2) if overspace.contains(p.space)
            }
            assert set(top(field, 2, d0)) == expected


def test_pencil_size_and_membership(f2, f3):
    for field in (f2, f3):
        points = pencil(field, 2, (0, 1), (1, 0))
        assert len(points) == field.q
        assert base_point(field, 2) in points
        assert set(points) <= set(star(field, 2, (0, 1)))
        assert set(points) <= set(top(field, 2, (1, 0)))


def test_pencil_frozen_example(f2):
    points = pencil(f2, 2, (0, 1), (1, 0))
    bases = sorted(tuple(p.space.basis.entries) for p in points)
    assert bases == [
        ((1, 0, 0, 0), (0, 1, 0, 0)),
        ((1, 0, 0, 0), (0, 1, 1, 0)),
    ]


def test_parameter_vector_validation(f2):
    with pytest.raises(ValueError):
        star(f2, 2, (0, 0))
    with pytest.raises(ValueError):
        top(f2, 2, (1,))
    with pytest.raises(ValueError):
        pencil(f2, 2, (1, 2), (0, 1))
