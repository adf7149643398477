"""Hermitian matrices and the dual polar space of maximal isotropic subspaces.

The standard sigma-anti-hermitian form on K^(2n) has Gram matrix
(0, I; -I, 0): beta(x, y) = x * G * (y^sigma)^T.  Its maximal totally
isotropic subspaces have dimension n and are exactly the points of the
projective line parametrised by pairs of hermitian matrices,

    {row space of (T2*T1 - I, T2) : T1 = T1^Sigma, T2 = T2^Sigma},

where X^Sigma is the involution transpose.  This module provides the
form, the hermitian matrix set with its Jordan closure checks, the
hermitian parametrisation, and the constructive machinery behind it:
given a maximal totally isotropic U = V + W (a direct sum) it builds a
maximal totally isotropic X with X meet perp(V) = W, from which a
common complement of any two maximal isotropic subspaces and the
parameter pair of any isotropic point are computed.
"""

from __future__ import annotations

import functools

from .fields import FieldSpec
from .matrices import (
    Matrix,
    Subspace,
    all_matrices,
    extend_independent,
    nullspace,
    outer_product,
    unit_vector,
)
from .projline import (
    BartolonePair,
    SubspacePoint,
    bartolone,
    base_point,
    enumerate_points,
)


class SesquilinearForm:
    """A non-degenerate sigma-anti-hermitian form on K^(2n)."""

    __slots__ = ("field", "n", "gram")

    def __init__(self, field: FieldSpec, n: int, gram: Matrix | None = None):
        if gram is None:
            ident = Matrix.identity(field, n)
            zero = Matrix.zeros(field, n, n)
            gram = Matrix.from_blocks([[zero, ident], [-ident, zero]])
        if gram.field != field or gram.rows != 2 * n or gram.cols != 2 * n:
            raise ValueError("gram matrix must be 2n x 2n over the given field")
        if not gram.is_invertible():
            raise ValueError("gram matrix must be invertible")
        if gram.sigma_transpose() != -gram:
            raise ValueError("gram matrix must be sigma-anti-hermitian")
        self.field = field
        self.n = n
        self.gram = gram

    def evaluate(self, x, y) -> int:
        """beta(x, y) for two coefficient tuples of length 2n."""
        x = tuple(x)
        y = tuple(y)
        if len(x) != 2 * self.n or len(y) != 2 * self.n:
            raise ValueError(f"vectors must have length {2 * self.n}")
        field = self.field
        add, mul, sig = field._add, field._mul, field._sigma
        acc = 0
        for xi, grow in zip(x, self.gram.entries):
            if xi:
                for gij, yj in zip(grow, y):
                    if gij and yj:
                        acc = add[acc][mul[mul[xi][gij]][sig[yj]]]
        return acc

    def restricted_gram(self, rows: Matrix) -> Matrix:
        """The Gram matrix of the form on the given row vectors."""
        return rows * self.gram * rows.sigma_transpose()

    def perp(self, space: Subspace) -> Subspace:
        """The perpendicular subspace {x : beta(v, x) = 0 for all v}."""
        field = self.field
        conditions = (space.basis * self.gram).map_entries(lambda a: field._sigma[a])
        return nullspace(conditions)

    def is_totally_isotropic(self, obj) -> bool:
        """Whether the form vanishes on the subspace (or point space)."""
        space = obj.space if isinstance(obj, SubspacePoint) else obj
        return self.restricted_gram(space.basis).is_zero()


@functools.lru_cache(maxsize=None)
def standard_form(field: FieldSpec, n: int) -> SesquilinearForm:
    return SesquilinearForm(field, n)


def beta_eval(field: FieldSpec, n: int, x, y) -> int:
    """Evaluate the standard form; convenience wrapper."""
    return standard_form(field, n).evaluate(x, y)


def block_isotropy_criterion(p: SubspacePoint) -> bool:
    """The block form of isotropy: A * B^Sigma = B * A^Sigma."""
    a, b = p.blocks()
    return a * b.sigma_transpose() == b * a.sigma_transpose()


@functools.lru_cache(maxsize=8)
def hermitian_matrices(field: FieldSpec, n: int) -> tuple[Matrix, ...]:
    """All hermitian n x n matrices, in lexicographic entry order."""
    return tuple(m for m in all_matrices(field, n, n) if m.is_hermitian())


@functools.lru_cache(maxsize=8)
def enumerate_isotropic(field: FieldSpec, n: int) -> tuple[SubspacePoint, ...]:
    """All maximal totally isotropic points, in enumeration order."""
    form = standard_form(field, n)
    return tuple(p for p in enumerate_points(field, n) if form.is_totally_isotropic(p))


def _require_isotropic(p: SubspacePoint, name: str) -> None:
    if not standard_form(p.field, p.n).is_totally_isotropic(p):
        raise ValueError(f"{name} is not totally isotropic")


def bartolone_hermitian(pair: BartolonePair) -> SubspacePoint:
    """The point of a hermitian parameter pair; always totally isotropic."""
    if not pair.t1.is_hermitian() or not pair.t2.is_hermitian():
        raise ValueError("both parameter matrices must be hermitian")
    point = bartolone(pair)
    assert standard_form(pair.field, pair.n).is_totally_isotropic(point)
    return point


def _skew_split(g: Matrix) -> Matrix:
    """Some D with D - D^Sigma = g, for an anti-hermitian g.

    Off-diagonal entries go into the upper triangle; each diagonal entry
    is solved by scanning the field, which succeeds because the form is
    trace-valued.
    """
    field = g.field
    assert g.sigma_transpose() == -g
    sub, sig = field._sub, field._sigma
    n = g.rows
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        rows[i][i + 1 :] = g.entries[i][i + 1 :]
        target = g.entries[i][i]
        d = next((x for x in field.elements() if sub[x][sig[x]] == target), None)
        if d is None:
            raise AssertionError("diagonal entry is not of trace form")
        rows[i][i] = d
    out = Matrix(field, (tuple(r) for r in rows), cols=n)
    assert out - out.sigma_transpose() == g
    return out


def _ordered_frame(u: SubspacePoint, v: Subspace, w: Subspace):
    """Validate U = V (+) W and build an ordered frame of K^(2n).

    Returns (form, k, rows): rows list a basis of K^(2n) ordered as
    V-basis, W-basis, a completion of perp(V) to the full space, and a
    completion of U inside perp(V).  The middle two groups are the rows
    the construction will shear.
    """
    field = u.field
    n = u.n
    form = standard_form(field, n)
    _require_isotropic(u, "u")
    if v.field != field or v.ambient_dim != 2 * n:
        raise ValueError("v lives in the wrong space")
    if w.field != field or w.ambient_dim != 2 * n:
        raise ValueError("w lives in the wrong space")
    if v.intersect(w).dim != 0 or (v + w) != u.space:
        raise ValueError("u = v (+) w must be a direct sum decomposition")
    k = v.dim
    v_rows = list(v.basis.entries)
    w_rows = list(w.basis.entries)
    u_rows = v_rows + w_rows
    vperp = form.perp(v)
    tail_rows = extend_independent(field, 2 * n, u_rows, vperp.basis.entries)[n:]
    assert len(tail_rows) == n - k
    arb_rows = extend_independent(
        field, 2 * n, u_rows + tail_rows, (unit_vector(2 * n, i) for i in range(2 * n))
    )[2 * n - k :]
    assert len(arb_rows) == k
    return form, k, v_rows + w_rows + arb_rows + tail_rows


def isotropic_meeting_perp(
    u: SubspacePoint, v: Subspace, w: Subspace
) -> SubspacePoint:
    """A maximal totally isotropic X with X meet perp(V) = W.

    The input must satisfy U = V (+) W with U maximal totally isotropic.
    The construction computes the Gram matrix of an ordered frame and
    applies a single closed-form shear transition to it; the sheared
    middle rows span X.
    """
    field = u.field
    n = u.n
    form, k, rows = _ordered_frame(u, v, w)
    frame = Matrix(field, rows, cols=2 * n)
    m = form.restricted_gram(frame)

    a = m.block(0, k, n, n + k)
    bb = m.block(k, n, n, n + k)
    c = m.block(k, n, n + k, 2 * n)
    g33 = m.block(n, n + k, n, n + k)
    e = m.block(n, n + k, n + k, 2 * n)
    g44 = m.block(n + k, 2 * n, n + k, 2 * n)
    assert m.block(0, n, 0, n).is_zero() and m.block(0, k, n + k, 2 * n).is_zero()

    d = _skew_split(g33)
    f = _skew_split(g44)
    c_inv = c.inverse()
    c_inv_sig = c_inv.sigma_transpose()
    s = ((e - bb.sigma_transpose() * c_inv_sig * f) * c_inv * bb - d) * a.inverse()
    r = -(bb.sigma_transpose() * c_inv_sig)

    ident_k = Matrix.identity(field, k)
    ident_nk = Matrix.identity(field, n - k)
    z = Matrix.zeros
    transition = Matrix.from_blocks(
        [
            [ident_k, z(field, k, n - k), z(field, k, k), z(field, k, n - k)],
            [z(field, n - k, k), ident_nk, z(field, n - k, k), z(field, n - k, n - k)],
            [s, z(field, k, n - k), ident_k, r],
            [z(field, n - k, k), z(field, n - k, n - k), z(field, n - k, k), ident_nk],
        ]
    )
    sheared = form.restricted_gram(transition * frame)
    assert sheared.block(k, n + k, k, n + k).is_zero()

    new_frame = transition * frame
    x_rows = new_frame.entries[k : n + k]
    x = SubspacePoint(Subspace.from_rows(field, 2 * n, x_rows), n)
    assert form.is_totally_isotropic(x)
    assert x.space.intersect(form.perp(v)) == w
    return x


def isotropic_meeting_perp_stepwise(
    u: SubspacePoint, v: Subspace, w: Subspace
) -> SubspacePoint:
    """Same contract as :func:`isotropic_meeting_perp`, by row elimination.

    Kept as an independent cross-check: it shears the frame in two
    explicit steps, recomputing the Gram matrix in between, instead of
    using the closed-form transition.
    """
    field = u.field
    n = u.n
    form, k, rows = _ordered_frame(u, v, w)
    add, mul = field._add, field._mul

    def shear(target_rows, coeff: Matrix, source_rows):
        for i in range(len(target_rows)):
            vec = list(rows[target_rows[i]])
            for cf, src in zip(coeff.entries[i], source_rows):
                if cf:
                    srow = rows[src]
                    vec = [add[x][mul[cf][y]] for x, y in zip(vec, srow)]
            rows[target_rows[i]] = tuple(vec)

    def gram() -> Matrix:
        return form.restricted_gram(Matrix(field, rows, cols=2 * n))

    arb = list(range(n, n + k))
    tail = list(range(n + k, 2 * n))
    m = gram()
    bb = m.block(k, n, n, n + k)
    c = m.block(k, n, n + k, 2 * n)
    shear(arb, -(bb.sigma_transpose() * c.inverse().sigma_transpose()), tail)

    m = gram()
    assert m.block(k, n, n, n + k).is_zero()
    a = m.block(0, k, n, n + k)
    d = _skew_split(m.block(n, n + k, n, n + k))
    shear(arb, -(d * a.inverse()), list(range(k)))

    m = gram()
    assert m.block(k, n + k, k, n + k).is_zero()
    x_rows = rows[k : n + k]
    x = SubspacePoint(Subspace.from_rows(field, 2 * n, x_rows), n)
    assert form.is_totally_isotropic(x)
    assert x.space.intersect(form.perp(v)) == w
    return x


def common_complement(u1: SubspacePoint, u2: SubspacePoint) -> SubspacePoint:
    """A maximal totally isotropic complement of both input points.

    Writes V = U1 meet U2, picks complements W1, W2 of V inside U1, U2
    from the canonical bases, rescales W1 so the form pairs the two
    complements as (0, I; -I, 0), and sums the paired basis vectors to
    get a diagonal W.  Then U = V (+) W is maximal totally isotropic and
    the X with X meet perp(V) = W avoids both inputs.
    """
    field = u1.field
    n = u1.n
    if u2.field != field or u2.n != n:
        raise ValueError("points belong to different projective lines")
    _require_isotropic(u1, "u1")
    _require_isotropic(u2, "u2")
    form = standard_form(field, n)

    v = u1.space.intersect(u2.space)
    k = v.dim

    def complement_rows(u: SubspacePoint):
        return extend_independent(
            field, 2 * n, v.basis.entries, u.space.basis.entries
        )[k:]

    w1 = Subspace.from_rows(field, 2 * n, complement_rows(u1))
    w2 = Subspace.from_rows(field, 2 * n, complement_rows(u2))
    assert w1.dim == n - k and w2.dim == n - k

    pairing = w1.basis * form.gram * w2.basis.sigma_transpose()
    scaled = pairing.inverse() * w1.basis
    add = field._add
    w_rows = [
        tuple(add[x][y] for x, y in zip(r1, r2))
        for r1, r2 in zip(scaled.entries, w2.basis.entries)
    ]
    w = Subspace.from_rows(field, 2 * n, w_rows)
    assert w.dim == n - k

    both = w1 + w2
    assert both.dim == 2 * (n - k)
    assert (w1 + w) == both and (w2 + w) == both
    assert w.intersect(w1).dim == 0 and w.intersect(w2).dim == 0

    u_space = v + w
    assert u_space.dim == n and form.is_totally_isotropic(u_space)
    x = isotropic_meeting_perp(SubspacePoint(u_space, n), v, w)
    assert x.space.intersect(u1.space).dim == 0
    assert x.space.intersect(u2.space).dim == 0
    return x


def decompose_isotropic(p: SubspacePoint) -> BartolonePair:
    """A hermitian parameter pair (T1, T2) whose point is p.

    Takes a common complement X of the base point and p, normalises its
    basis to (C | I), and solves the parametrisation: T1 = C and
    T2 = (B*C - A)^-1 * B for the canonical blocks (A, B) of p.
    """
    field = p.field
    n = p.n
    _require_isotropic(p, "the point")
    x = common_complement(base_point(field, n), p)
    c0, d0 = x.blocks()
    c = d0.inverse() * c0
    a, b = p.blocks()
    t2 = (b * c - a).inverse() * b
    pair = BartolonePair(c, t2)
    assert c.is_hermitian() and t2.is_hermitian()
    assert bartolone(pair) == p
    return pair


def hermitian_adjacent_star(field: FieldSpec, n: int, c0) -> list[SubspacePoint]:
    """Isotropic points adjacent to (or equal to) the base point.

    Sweeps T1 over the hermitian matrices and T2 over the rank-at-most-
    one hermitian matrices sigma(c0)^T * t * c0 with t fixed by sigma.
    Every returned point is totally isotropic and has arithmetical
    distance at most one from the base point.
    """
    c0 = tuple(c0)
    if len(c0) != n:
        raise ValueError(f"c0 must have length n = {n}")
    for x in c0:
        field.check_element(x)
    if not any(c0):
        raise ValueError("c0 must be nonzero")
    sigma_c0 = tuple(field._sigma[x] for x in c0)
    points = set()
    for t in field.fixed_elements:
        t2 = outer_product(field, sigma_c0, c0).scale(t)
        for t1 in hermitian_matrices(field, n):
            points.add(bartolone_hermitian(BartolonePair(t1, t2)))
    return sorted(points, key=SubspacePoint.sort_key)


def jordan_system_axioms_check(field: FieldSpec, n: int) -> dict:
    """Exhaustively check the Jordan closure laws of the hermitian set.

    Verifies that the inverse of every invertible hermitian matrix is
    hermitian and that A*B*A is hermitian for all hermitian A, B.
    Returns a report dict with counts and (capped) witness lists.
    """
    herm = hermitian_matrices(field, n)
    invertible = [m for m in herm if m.is_invertible()]
    inverse_witnesses = [
        m.to_json() for m in invertible if not m.inverse().is_hermitian()
    ]
    triple_witnesses = []
    for a in herm:
        for b in herm:
            if not (a * b * a).is_hermitian():
                triple_witnesses.append({"a": a.to_json(), "b": b.to_json()})
                if len(triple_witnesses) >= 10:
                    break
        else:
            continue
        break
    return {
        "format_version": 1,
        "field_p": field.p,
        "field_k": field.k,
        "involution": field.involution,
        "n": n,
        "hermitian_count": len(herm),
        "invertible_hermitian_count": len(invertible),
        "inverse_closure_ok": not inverse_witnesses,
        "triple_product_closure_ok": not triple_witnesses,
        "witnesses": {
            "inverse": inverse_witnesses[:10],
            "triple_product": triple_witnesses,
        },
        "passed": not inverse_witnesses and not triple_witnesses,
    }
