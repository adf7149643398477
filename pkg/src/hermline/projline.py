"""The projective line over the ring of n x n matrices, as a Grassmannian.

Points of the projective line over the full matrix ring K^(n x n) are
the n-dimensional subspaces of K^(2n): a pair (A, B) of n x n blocks
with rank(A | B) = n stands for the row space of the n x 2n matrix
(A | B).  This module provides the point model, the two-parameter
parametrisation

    (T1, T2)  ->  row space of (T2*T1 - I, T2),

the distant and adjacency relations with the arithmetical distance that
refines them, and the constructions attached to the parametrisation:
the embedding of the matrix space, spheres around the base point,
stars, tops, pencils, annihilators, and the point maps induced by
twisted ring isomorphisms and anti-isomorphisms.
"""

from __future__ import annotations

import functools

from .fields import FieldSpec
from .matrices import (
    Matrix,
    Subspace,
    all_matrices,
    all_vectors,
    enumerate_subspaces,
    outer_product,
)

AUTOMORPHISM = "automorphism"
ANTIAUTOMORPHISM = "antiautomorphism"


class SubspacePoint:
    """A point of the projective line: an n-space in K^(2n)."""

    __slots__ = ("space", "n")

    def __init__(self, space: Subspace, n: int):
        if space.ambient_dim != 2 * n or space.dim != n:
            raise ValueError(
                f"a point needs an n-space of K^(2n), got dim {space.dim} "
                f"in K^{space.ambient_dim} for n={n}"
            )
        self.space = space
        self.n = n

    @property
    def field(self) -> FieldSpec:
        return self.space.field

    def blocks(self) -> tuple[Matrix, Matrix]:
        """The (A, B) block pair of the canonical basis matrix."""
        n = self.n
        return self.space.basis.block(0, n, 0, n), self.space.basis.block(
            0, n, n, 2 * n
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, SubspacePoint):
            return NotImplemented
        return self.space == other.space

    def __hash__(self) -> int:
        return hash(self.space)

    def __repr__(self) -> str:
        return f"SubspacePoint(n={self.n}, basis={list(self.space.basis.entries)})"

    def sort_key(self) -> tuple:
        return self.space.basis.entries

    def to_json(self) -> dict:
        return self.space.basis.to_json()


class BartolonePair:
    """An ordered parameter pair (T1, T2) of square matrices."""

    __slots__ = ("t1", "t2")

    def __init__(self, t1: Matrix, t2: Matrix):
        if t1.field != t2.field:
            raise ValueError("parameter matrices live over different fields")
        if t1.rows != t1.cols or t1.rows != t2.rows or t2.rows != t2.cols:
            raise ValueError("parameters must be square matrices of equal size")
        self.t1 = t1
        self.t2 = t2

    @property
    def field(self) -> FieldSpec:
        return self.t1.field

    @property
    def n(self) -> int:
        return self.t1.rows

    def __eq__(self, other) -> bool:
        if not isinstance(other, BartolonePair):
            return NotImplemented
        return self.t1 == other.t1 and self.t2 == other.t2

    def __hash__(self) -> int:
        return hash((self.t1, self.t2))

    def __repr__(self) -> str:
        return f"BartolonePair(t1={self.t1!r}, t2={self.t2!r})"


def point_from_pair(a: Matrix, b: Matrix) -> SubspacePoint:
    """The point with basis (A | B); raises ValueError when rank(A|B) < n."""
    if a.field != b.field:
        raise ValueError("blocks live over different fields")
    if a.rows != a.cols or b.rows != b.cols or a.rows != b.rows:
        raise ValueError("blocks must be square matrices of equal size")
    stacked = a.hstack(b)
    space = Subspace(stacked)
    if space.dim != a.rows:
        raise ValueError("(A, B) has rank below n and does not define a point")
    return SubspacePoint(space, a.rows)


def point_from_matrix(field: FieldSpec, n: int, m: Matrix) -> SubspacePoint:
    """Canonicalise an n x 2n generator matrix into a point."""
    if m.field != field:
        raise ValueError("matrix lives over a different field")
    if m.cols != 2 * n:
        raise ValueError(f"a point of the line needs {2 * n} columns")
    space = Subspace(m)
    if space.dim != n:
        raise ValueError("generator matrix has rank below n")
    return SubspacePoint(space, n)


@functools.lru_cache(maxsize=None)
def base_point(field: FieldSpec, n: int) -> SubspacePoint:
    """The base point, the row space of (I | 0)."""
    return point_from_pair(Matrix.identity(field, n), Matrix.zeros(field, n, n))


def bartolone(pair: BartolonePair) -> SubspacePoint:
    """The point parametrised by (T1, T2): row space of (T2*T1 - I, T2).

    The block pair always has full rank; a failure here would be an
    internal invariant violation, not a user error.
    """
    field = pair.field
    n = pair.n
    left = pair.t2 * pair.t1 - Matrix.identity(field, n)
    space = Subspace(left.hstack(pair.t2))
    if space.dim != n:
        raise AssertionError("parametrised block pair lost rank")
    return SubspacePoint(space, n)


def embed_matrix_space(t1_0: Matrix, t2: Matrix) -> SubspacePoint:
    """The embedding T2 -> point of (T1 fixed at t1_0); injective in T2."""
    return bartolone(BartolonePair(t1_0, t2))


def _check_same_line(p: SubspacePoint, q: SubspacePoint) -> None:
    if p.field != q.field or p.n != q.n:
        raise ValueError("points belong to different projective lines")


def is_distant(p: SubspacePoint, q: SubspacePoint) -> bool:
    """Whether the two point spaces are complementary in K^(2n)."""
    _check_same_line(p, q)
    stacked = p.space.basis.vstack(q.space.basis)
    return stacked.rank() == 2 * p.n


def arithmetical_distance(p: SubspacePoint, q: SubspacePoint) -> int:
    """dim(P + Q) - n; ranges over 0..n and refines the distant relation."""
    _check_same_line(p, q)
    stacked = p.space.basis.vstack(q.space.basis)
    return stacked.rank() - p.n


def is_adjacent(p: SubspacePoint, q: SubspacePoint) -> bool:
    """Whether the point spaces meet in dimension n - 1."""
    return arithmetical_distance(p, q) == 1


def stable_rank_witness(a: Matrix, b: Matrix) -> Matrix:
    """Some W with A + B*W invertible, for a full-rank block pair (A, B).

    Candidates are tried in a deterministic order: the zero matrix, the
    identity, the single-entry matrices, then all matrices in
    lexicographic order.  Existence is guaranteed because the matrix
    ring over a field has stable rank two.
    """
    if a.field != b.field or a.rows != a.cols or b.rows != b.cols or a.rows != b.rows:
        raise ValueError("witness search needs two square blocks of equal size")
    field = a.field
    n = a.rows
    if a.hstack(b).rank() != n:
        raise ValueError("(A, B) has rank below n; no witness can exist")

    def candidates():
        yield Matrix.zeros(field, n, n)
        yield Matrix.identity(field, n)
        for i in range(n):
            for j in range(n):
                rows = [[0] * n for _ in range(n)]
                rows[i][j] = 1
                yield Matrix(field, (tuple(r) for r in rows), cols=n)
        yield from all_matrices(field, n, n)

    for w in candidates():
        if (a + b * w).is_invertible():
            return w
    raise RuntimeError("no stable rank witness found; this should be impossible")


def annihilator(pair: BartolonePair) -> Matrix:
    """The 2n x n matrix (-T2 on top of T1*T2 - I).

    Its columns are annihilated by every row of (T2*T1 - I | T2), and
    it always has rank n.
    """
    field = pair.field
    n = pair.n
    return (-pair.t2).vstack(pair.t1 * pair.t2 - Matrix.identity(field, n))


class JordanMapSpec:
    """A twisted inner (anti-)isomorphism of the matrix ring.

    kind ``automorphism`` acts by X -> Q^-1 * X^gamma * Q and kind
    ``antiautomorphism`` by X -> Q^-1 * (X^delta)^T * Q, where the
    twist gamma or delta is the field automorphism
    x -> x^(p^frobenius_power) and Q is an invertible matrix.
    """

    __slots__ = ("kind", "frobenius_power", "q_matrix", "_q_inv")

    def __init__(self, kind: str, frobenius_power: int, q_matrix: Matrix):
        if kind not in (AUTOMORPHISM, ANTIAUTOMORPHISM):
            raise ValueError(f"unknown map kind {kind!r}")
        if q_matrix.rows != q_matrix.cols:
            raise ValueError("Q must be square")
        self.kind = kind
        self.frobenius_power = frobenius_power % q_matrix.field.k
        self.q_matrix = q_matrix
        self._q_inv = q_matrix.inverse()

    def apply(self, m: Matrix) -> Matrix:
        field = m.field
        power = self.frobenius_power
        twisted = m.map_entries(lambda x: field.frobenius(x, power))
        if self.kind == ANTIAUTOMORPHISM:
            twisted = twisted.transpose()
        return self._q_inv * twisted * self.q_matrix

    def __repr__(self) -> str:
        return (
            f"JordanMapSpec({self.kind}, frobenius_power={self.frobenius_power}, "
            f"q={list(self.q_matrix.entries)})"
        )


def jordan_action(spec: JordanMapSpec, pair: BartolonePair) -> SubspacePoint:
    """The image point of the parametrised point under the twisted map.

    The pair (T1, T2) maps to (T1^iota, T2^iota) and the result is the
    point they parametrise.  The induced map on points does not depend
    on the chosen parameter pair.
    """
    return bartolone(BartolonePair(spec.apply(pair.t1), spec.apply(pair.t2)))


@functools.lru_cache(maxsize=8)
def enumerate_points(field: FieldSpec, n: int) -> tuple[SubspacePoint, ...]:
    """All points of the line, in the deterministic subspace order."""
    return tuple(
        SubspacePoint(space, n) for space in enumerate_subspaces(field, 2 * n, n)
    )


def _sorted_points(points) -> list[SubspacePoint]:
    return sorted(points, key=SubspacePoint.sort_key)


def _check_parameter_vector(field: FieldSpec, n: int, vec, name: str) -> tuple:
    vec = tuple(vec)
    if len(vec) != n:
        raise ValueError(f"{name} must have length n = {n}")
    for x in vec:
        field.check_element(x)
    if not any(vec):
        raise ValueError(f"{name} must be nonzero")
    return vec


def sphere(field: FieldSpec, n: int, k: int) -> list[SubspacePoint]:
    """All points at arithmetical distance k from the base point.

    Generated by sweeping T1 over the matrix ring and T2 over the
    matrices of rank k; deduplicated and returned in canonical order.
    """
    if not 0 <= k <= n:
        raise ValueError(f"sphere radius must lie in 0..{n}")
    shells = [t2 for t2 in all_matrices(field, n, n) if t2.rank() == k]
    seen = set()
    for t1 in all_matrices(field, n, n):
        for t2 in shells:
            seen.add(bartolone(BartolonePair(t1, t2)))
    return _sorted_points(seen)


def star(field: FieldSpec, n: int, c0) -> list[SubspacePoint]:
    """All points through a fixed (n-1)-space, via rank-one parameters.

    T2 runs over c0^T * d for every vector d, T1 over the whole ring.
    The result is the set of points containing the (n-1)-space cut out
    by sum_i x_i c0_i = 0 and x_(n+1) = ... = x_(2n) = 0.
    """
    c0 = _check_parameter_vector(field, n, c0, "c0")
    seen = set()
    t2s = [outer_product(field, c0, d) for d in all_vectors(field, n)]
    for t1 in all_matrices(field, n, n):
        for t2 in t2s:
            seen.add(bartolone(BartolonePair(t1, t2)))
    return _sorted_points(seen)


def top(field: FieldSpec, n: int, d0) -> list[SubspacePoint]:
    """All points inside a fixed (n+1)-space, via rank-one parameters.

    T2 runs over c^T * d0 for every vector c, T1 over the whole ring.
    The result is the set of points inside the row space of the
    (n+1) x 2n matrix stacking (I | 0) on (0 | d0).
    """
    d0 = _check_parameter_vector(field, n, d0, "d0")
    seen = set()
    t2s = [outer_product(field, c, d0) for c in all_vectors(field, n)]
    for t1 in all_matrices(field, n, n):
        for t2 in t2s:
            seen.add(bartolone(BartolonePair(t1, t2)))
    return _sorted_points(seen)


def pencil(field: FieldSpec, n: int, c0, d0) -> list[SubspacePoint]:
    """The parametrised pencil {point of (0, c0^T * t * d0) : t in K}.

    T1 is fixed at zero; t = 0 contributes the base point itself.  The
    set has exactly |K| members and is returned in canonical order.
    """
    c0 = _check_parameter_vector(field, n, c0, "c0")
    d0 = _check_parameter_vector(field, n, d0, "d0")
    zero = Matrix.zeros(field, n, n)
    seen = set()
    for t in field.elements():
        t2 = outer_product(field, c0, d0).scale(t)
        seen.add(bartolone(BartolonePair(zero, t2)))
    return _sorted_points(seen)
