"""Enumeration, graph building and batch verification over a configuration.

A :class:`GeometryConfig` names a field, an involution and a block size
n.  The harness enumerates the point set (guarded by a Gaussian
binomial budget estimate), verifies that the hermitian parametrisation
hits exactly the maximal totally isotropic subspaces, builds distant
and adjacency graphs, and runs the batch checks (embedding
injectivity, the rank distance law, annihilators, twisted point maps,
hermitian stars) exhaustively when the pair space is small and by
seeded sampling otherwise.  All reports are plain dicts with stable key
order, so serialising them is deterministic.
"""

from __future__ import annotations

import dataclasses
import functools
import json
import random
from collections import deque

from .fields import FieldSpec, make_field
from .hermitian import (
    enumerate_isotropic,
    hermitian_adjacent_star,
    hermitian_matrices,
)
from .matrices import Matrix, unit_vector
from .projline import (
    ANTIAUTOMORPHISM,
    AUTOMORPHISM,
    BartolonePair,
    JordanMapSpec,
    SubspacePoint,
    arithmetical_distance,
    bartolone,
    base_point,
    embed_matrix_space,
    enumerate_points,
    is_adjacent,
    is_distant,
    jordan_action,
    point_from_pair,
    stable_rank_witness,
)

DEFAULT_BUDGET = 1_000_000
_EXHAUSTIVE_PAIR_LIMIT = 70_000
_WITNESS_CAP = 10


class BudgetExceededError(Exception):
    """Raised when the predicted point count exceeds the configured budget."""


@dataclasses.dataclass(frozen=True)
class GeometryConfig:
    """A verification target: GF(p^k) with an involution and block size n."""

    p: int
    k: int = 1
    involution: str = "identity"
    n: int = 2
    budget: int = DEFAULT_BUDGET

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("the geometry needs n >= 2")
        if self.budget < 1:
            raise ValueError("budget must be positive")

    def field(self) -> FieldSpec:
        return make_field(self.p, self.k, self.involution)

    def report_header(self, check: str) -> dict:
        field = self.field()
        return {
            "format_version": 1,
            "check": check,
            "field_p": field.p,
            "field_k": field.k,
            "involution": field.involution,
            "n": self.n,
        }


def gaussian_binomial(m: int, r: int, q: int) -> int:
    """The number of r-dimensional subspaces of an m-dimensional space."""
    if r < 0 or r > m:
        return 0
    num = 1
    den = 1
    for i in range(r):
        num *= q ** (m - i) - 1
        den *= q ** (i + 1) - 1
    assert num % den == 0
    return num // den


def predicted_point_count(cfg: GeometryConfig) -> int:
    return gaussian_binomial(2 * cfg.n, cfg.n, cfg.field().q)


def ensure_within_budget(cfg: GeometryConfig) -> None:
    predicted = predicted_point_count(cfg)
    if predicted > cfg.budget:
        raise BudgetExceededError(
            f"predicted point count {predicted} exceeds the budget {cfg.budget}; "
            "raise --budget to force the enumeration"
        )


def enumerate_grassmannian(cfg: GeometryConfig) -> tuple[SubspacePoint, ...]:
    """All points of the line for this configuration, budget permitting."""
    ensure_within_budget(cfg)
    return enumerate_points(cfg.field(), cfg.n)


# -- exhaustive pair machinery ------------------------------------------------


@functools.lru_cache(maxsize=4)
def square_matrices(field: FieldSpec, n: int) -> tuple[Matrix, ...]:
    from .matrices import all_matrices

    return tuple(all_matrices(field, n, n))


@functools.lru_cache(maxsize=4)
def _matrix_index(field: FieldSpec, n: int) -> dict:
    return {m: i for i, m in enumerate(square_matrices(field, n))}


@functools.lru_cache(maxsize=4)
def _point_index(field: FieldSpec, n: int) -> dict:
    return {p: i for i, p in enumerate(enumerate_points(field, n))}


@functools.lru_cache(maxsize=4)
def pair_point_table(field: FieldSpec, n: int):
    """For every parameter pair, the id of the point it parametrises.

    Returns (matrices, points, table) with table[i][j] the index into
    points of the point of (matrices[i], matrices[j]).  Only built for
    pair spaces of exhaustible size.
    """
    mats = square_matrices(field, n)
    if len(mats) ** 2 > _EXHAUSTIVE_PAIR_LIMIT:
        raise ValueError("pair space too large for an exhaustive table")
    points = enumerate_points(field, n)
    index = _point_index(field, n)
    table = []
    for t1 in mats:
        row = []
        for t2 in mats:
            row.append(index[bartolone(BartolonePair(t1, t2))])
        table.append(row)
    return mats, points, table


@functools.lru_cache(maxsize=4)
def adjacency_pairs(field: FieldSpec, n: int) -> frozenset:
    """All unordered id pairs of adjacent points, ids in enumeration order."""
    points = enumerate_points(field, n)
    out = set()
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            if is_adjacent(points[i], points[j]):
                out.add((i, j))
    return frozenset(out)


def _pair_space_size(field: FieldSpec, n: int) -> int:
    return field.q ** (2 * n * n)


def _random_matrix(field: FieldSpec, n: int, rng: random.Random) -> Matrix:
    q = field.q
    return Matrix(
        field,
        tuple(tuple(rng.randrange(q) for _ in range(n)) for _ in range(n)),
        cols=n,
    )


def preimage_pair(p: SubspacePoint, t1: Matrix | None = None) -> BartolonePair:
    """Some parameter pair whose point is p.

    Solves the parametrisation for the canonical blocks (A, B):
    any T1 with B*T1 - A invertible yields T2 = (B*T1 - A)^-1 * B.
    When t1 is not given, a deterministic witness is used.
    """
    a, b = p.blocks()
    if t1 is None:
        t1 = stable_rank_witness(-a, b)
    g = (b * t1 - a).inverse()
    pair = BartolonePair(t1, g * b)
    assert bartolone(pair) == p
    return pair


# -- reports ------------------------------------------------------------------


def report_to_json(report: dict) -> str:
    """Serialise a report dict; key order is preserved, so this is stable."""
    return json.dumps(report, indent=2) + "\n"


def verify_theorem1(cfg: GeometryConfig) -> dict:
    """Compare the hermitian-pair image with the maximal isotropic set.

    Both sides are computed independently: the left by sweeping all
    hermitian parameter pairs through the parametrisation, the right by
    filtering the full point enumeration with the form.
    """
    ensure_within_budget(cfg)
    field = cfg.field()
    n = cfg.n
    points = enumerate_points(field, n)
    isotropic = set(enumerate_isotropic(field, n))
    herm = hermitian_matrices(field, n)
    image = set()
    for t1 in herm:
        for t2 in herm:
            image.add(bartolone(BartolonePair(t1, t2)))
    witnesses = [
        {"kind": "isotropic_without_parameters", "basis": p.to_json()}
        for p in sorted(isotropic - image, key=SubspacePoint.sort_key)[:_WITNESS_CAP]
    ] + [
        {"kind": "parametrised_but_not_isotropic", "basis": p.to_json()}
        for p in sorted(image - isotropic, key=SubspacePoint.sort_key)[:_WITNESS_CAP]
    ]
    report = cfg.report_header("theorem1")
    report["counts"] = {
        "grassmannian": len(points),
        "isotropic": len(isotropic),
        "hermitian": len(herm),
        "hermitian_pairs": len(herm) ** 2,
        "bartolone_image": len(image),
    }
    report["equal"] = not witnesses
    report["witnesses"] = witnesses
    return report


# -- graphs -------------------------------------------------------------------


@dataclasses.dataclass
class RelationGraph:
    """A relation graph over enumerated points; node ids are point ids."""

    kind: str
    point_set: str
    node_ids: list[int]
    edges: list[tuple[int, int]]
    points: tuple = dataclasses.field(repr=False, default=())

    def degree_sequence(self) -> list[int]:
        degrees = [0] * len(self.node_ids)
        for i, j in self.edges:
            degrees[i] += 1
            degrees[j] += 1
        return degrees

    def _neighbours(self) -> list[list[int]]:
        adj = [[] for _ in self.node_ids]
        for i, j in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        return adj

    def bfs_distances(self, start: int) -> list[int | None]:
        adj = self._neighbours()
        dist: list[int | None] = [None] * len(self.node_ids)
        dist[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                if dist[v] is None:
                    dist[v] = dist[u] + 1
                    queue.append(v)
        return dist

    def diameter(self) -> int | None:
        """Longest shortest path; None when the graph is disconnected."""
        if len(self.node_ids) <= 1:
            return 0
        best = 0
        for start in self.node_ids:
            dist = self.bfs_distances(start)
            if any(d is None for d in dist):
                return None
            best = max(best, max(dist))
        return best

    def to_dot(self) -> str:
        lines = [f"graph {self.kind} {{"]
        for i in self.node_ids:
            lines.append(f"  {i};")
        for i, j in self.edges:
            lines.append(f"  {i} -- {j};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def degrees_csv(self) -> str:
        lines = ["node_id,degree"]
        for i, d in zip(self.node_ids, self.degree_sequence()):
            lines.append(f"{i},{d}")
        return "\n".join(lines) + "\n"


def build_graph(
    cfg: GeometryConfig, kind: str = "distant", point_set: str = "all"
) -> RelationGraph:
    """The distant or adjacency graph on all points or the isotropic ones."""
    if kind not in ("distant", "adjacency"):
        raise ValueError(f"unknown relation {kind!r}")
    if point_set not in ("all", "isotropic"):
        raise ValueError(f"unknown point set {point_set!r}")
    ensure_within_budget(cfg)
    field = cfg.field()
    if point_set == "all":
        points = enumerate_points(field, cfg.n)
    else:
        points = enumerate_isotropic(field, cfg.n)
    rel = is_distant if kind == "distant" else is_adjacent
    edges = [
        (i, j)
        for i in range(len(points))
        for j in range(i + 1, len(points))
        if rel(points[i], points[j])
    ]
    return RelationGraph(
        kind=kind,
        point_set=point_set,
        node_ids=list(range(len(points))),
        edges=edges,
        points=points,
    )


def graph_report(cfg: GeometryConfig, graph: RelationGraph) -> dict:
    report = cfg.report_header("graph")
    report["relation"] = graph.kind
    report["point_set"] = graph.point_set
    report["counts"] = {"nodes": len(graph.node_ids), "edges": len(graph.edges)}
    report["degree_sequence"] = graph.degree_sequence()
    report["diameter"] = graph.diameter()
    report["nodes"] = graph.node_ids
    report["edges"] = [list(e) for e in graph.edges]
    return report


# -- batch checks ---------------------------------------------------------------


def _result(name: str, mode: str, cases: int, witnesses: list) -> dict:
    return {
        "name": name,
        "mode": mode,
        "cases": cases,
        "passed": not witnesses,
        "witnesses": witnesses[:_WITNESS_CAP],
    }


def check_embedding_injectivity(field: FieldSpec, n: int) -> dict:
    """The map T2 -> point is injective for T1 fixed at 0 and at I."""
    mats = square_matrices(field, n)
    witnesses = []
    cases = 0
    for t1_0 in (Matrix.zeros(field, n, n), Matrix.identity(field, n)):
        seen = {}
        for t2 in mats:
            point = embed_matrix_space(t1_0, t2)
            cases += 1
            other = seen.get(point)
            if other is not None:
                witnesses.append(
                    {"t1_0": t1_0.to_json(), "t2": t2.to_json(), "clash": other.to_json()}
                )
            else:
                seen[point] = t2
    return _result("embedding_injectivity", "exhaustive", cases, witnesses)


def check_rank_law(
    field: FieldSpec, n: int, seed: int = 0, samples: int = 10_000
) -> dict:
    """Arithmetical distance from the base point equals rank(T2)."""
    base = base_point(field, n)
    if _pair_space_size(field, n) <= _EXHAUSTIVE_PAIR_LIMIT:
        mats, points, table = pair_point_table(field, n)
        ranks = [m.rank() for m in mats]
        dists = [arithmetical_distance(base, p) for p in points]
        witnesses = []
        for i in range(len(mats)):
            row = table[i]
            for j in range(len(mats)):
                if dists[row[j]] != ranks[j]:
                    witnesses.append(
                        {"t1": mats[i].to_json(), "t2": mats[j].to_json()}
                    )
        return _result("rank_distance_law", "exhaustive", len(mats) ** 2, witnesses)
    rng = random.Random(seed)
    witnesses = []
    for _ in range(samples):
        t1 = _random_matrix(field, n, rng)
        t2 = _random_matrix(field, n, rng)
        point = bartolone(BartolonePair(t1, t2))
        if arithmetical_distance(base, point) != t2.rank():
            witnesses.append({"t1": t1.to_json(), "t2": t2.to_json()})
    return _result("rank_distance_law", "sampled", samples, witnesses)


def check_annihilator(
    field: FieldSpec, n: int, seed: int = 0, samples: int = 1_000
) -> dict:
    """(T2*T1 - I | T2) annihilates the stacked matrix, which has rank n."""
    from .projline import annihilator

    ident = Matrix.identity(field, n)

    def violation(t1: Matrix, t2: Matrix) -> bool:
        ann = annihilator(BartolonePair(t1, t2))
        left = (t2 * t1 - ident).hstack(t2)
        return not (left * ann).is_zero() or ann.rank() != n

    if _pair_space_size(field, n) <= _EXHAUSTIVE_PAIR_LIMIT:
        mats = square_matrices(field, n)
        witnesses = [
            {"t1": t1.to_json(), "t2": t2.to_json()}
            for t1 in mats
            for t2 in mats
            if violation(t1, t2)
        ]
        return _result("annihilator", "exhaustive", len(mats) ** 2, witnesses)
    rng = random.Random(seed)
    witnesses = []
    for _ in range(samples):
        t1 = _random_matrix(field, n, rng)
        t2 = _random_matrix(field, n, rng)
        if violation(t1, t2):
            witnesses.append({"t1": t1.to_json(), "t2": t2.to_json()})
    return _result("annihilator", "sampled", samples, witnesses)


def default_jordan_specs(field: FieldSpec, n: int) -> list[tuple[str, JordanMapSpec]]:
    """The twisted maps exercised by the batch checks."""
    ident = Matrix.identity(field, n)
    shear_rows = [[int(i == j) for j in range(n)] for i in range(n)]
    shear_rows[0][1] = 1
    shear = Matrix(field, (tuple(r) for r in shear_rows), cols=n)
    specs = [
        ("transpose", JordanMapSpec(ANTIAUTOMORPHISM, 0, ident)),
        ("conjugation", JordanMapSpec(AUTOMORPHISM, 0, shear)),
    ]
    if field.k > 1:
        specs.append(
            ("frobenius_twist", JordanMapSpec(AUTOMORPHISM, field.k // 2, ident))
        )
    return specs


def check_jordan_well_defined(
    field: FieldSpec,
    n: int,
    spec: JordanMapSpec,
    label: str,
    seed: int = 0,
    samples: int = 500,
):
    """The point map induced by the pair map is parameter independent.

    Exhaustive mode sweeps every pair and confirms that pairs of one
    point map to one point; it returns the induced point map for the
    adjacency check.  Sampled mode rebuilds random points from several
    parameter pairs and compares the images.
    """
    name = f"jordan_well_defined[{label}]"
    if _pair_space_size(field, n) <= _EXHAUSTIVE_PAIR_LIMIT:
        mats, points, table = pair_point_table(field, n)
        mat_index = _matrix_index(field, n)
        iota = [mat_index[spec.apply(m)] for m in mats]
        image_of = [None] * len(points)
        witnesses = []
        for i in range(len(mats)):
            row = table[i]
            trow = table[iota[i]]
            for j in range(len(mats)):
                p = row[j]
                img = trow[iota[j]]
                if image_of[p] is None:
                    image_of[p] = img
                elif image_of[p] != img:
                    witnesses.append(
                        {"t1": mats[i].to_json(), "t2": mats[j].to_json()}
                    )
        assert all(img is not None for img in image_of)
        return _result(name, "exhaustive", len(mats) ** 2, witnesses), image_of
    rng = random.Random(seed)
    witnesses = []
    for _ in range(samples):
        t1 = _random_matrix(field, n, rng)
        t2 = _random_matrix(field, n, rng)
        pair = BartolonePair(t1, t2)
        point = bartolone(pair)
        expected = jordan_action(spec, pair)
        a, b = point.blocks()
        for _ in range(2):
            while True:
                alt_t1 = _random_matrix(field, n, rng)
                if (b * alt_t1 - a).is_invertible():
                    break
            alt = preimage_pair(point, alt_t1)
            if jordan_action(spec, alt) != expected:
                witnesses.append({"t1": t1.to_json(), "t2": t2.to_json()})
                break
    return _result(name, "sampled", samples, witnesses), None


def check_jordan_adjacency(
    field: FieldSpec,
    n: int,
    spec: JordanMapSpec,
    label: str,
    image_of: list | None,
    seed: int = 0,
    samples: int = 500,
) -> dict:
    """Adjacent points stay adjacent under the induced point map."""
    name = f"jordan_adjacency[{label}]"
    if image_of is not None:
        edges = adjacency_pairs(field, n)
        witnesses = []
        for i, j in sorted(edges):
            a, b = image_of[i], image_of[j]
            key = (a, b) if a < b else (b, a)
            if key not in edges:
                points = enumerate_points(field, n)
                witnesses.append(
                    {"p": points[i].to_json(), "q": points[j].to_json()}
                )
        return _result(name, "exhaustive", len(edges), witnesses)
    rng = random.Random(seed)
    witnesses = []
    for _ in range(samples):
        pair = BartolonePair(
            _random_matrix(field, n, rng), _random_matrix(field, n, rng)
        )
        p = bartolone(pair)
        q = _random_neighbour(p, rng)
        img_p = jordan_action(spec, pair)
        img_q = jordan_action(spec, preimage_pair(q))
        if not is_adjacent(img_p, img_q):
            witnesses.append({"p": p.to_json(), "q": q.to_json()})
    return _result(name, "sampled", samples, witnesses)


def _random_neighbour(p: SubspacePoint, rng: random.Random) -> SubspacePoint:
    """A random point meeting p in dimension n - 1."""
    from .matrices import Subspace

    field = p.field
    n = p.n
    kept = list(p.space.basis.entries[: n - 1])
    while True:
        vec = tuple(rng.randrange(field.q) for _ in range(2 * n))
        if p.space.contains_vector(vec):
            continue
        space = Subspace.from_rows(field, 2 * n, kept + [vec])
        if space.dim == n:
            return SubspacePoint(space, n)


def check_hermitian_star(field: FieldSpec, n: int) -> dict:
    """Hermitian rank-one stars stay within distance one of the base point."""
    base = base_point(field, n)
    vectors = [unit_vector(n, i) for i in range(n)] + [(1,) * n]
    witnesses = []
    cases = 0
    for c0 in vectors:
        for point in hermitian_adjacent_star(field, n, c0):
            cases += 1
            if arithmetical_distance(base, point) > 1:
                witnesses.append({"c0": list(c0), "point": point.to_json()})
    return _result("hermitian_star", "exhaustive", cases, witnesses)


def verify_remarks(cfg: GeometryConfig, seed: int = 0) -> dict:
    """Run the embedding, distance, annihilator, twisted-map and star checks."""
    ensure_within_budget(cfg)
    field = cfg.field()
    n = cfg.n
    checks = [
        check_embedding_injectivity(field, n),
        check_rank_law(field, n, seed=seed),
        check_annihilator(field, n, seed=seed),
    ]
    for label, spec in default_jordan_specs(field, n):
        wd, image_of = check_jordan_well_defined(field, n, spec, label, seed=seed)
        checks.append(wd)
        checks.append(
            check_jordan_adjacency(field, n, spec, label, image_of, seed=seed)
        )
    checks.append(check_hermitian_star(field, n))
    report = cfg.report_header("remarks")
    report["seed"] = seed
    report["checks"] = checks
    report["passed"] = all(c["passed"] for c in checks)
    return report


def check_distant_chain(field: FieldSpec, n: int) -> dict:
    """Any point is within two distant steps of the base point.

    For every parameter pair, the intermediate point with basis
    (T1 | I) is distant from both the base point and the parametrised
    point, witnessing a distant graph diameter of at most two.
    """
    base = base_point(field, n)
    ident = Matrix.identity(field, n)
    mats, points, table = pair_point_table(field, n)
    middles = [point_from_pair(t1, ident) for t1 in mats]
    witnesses = []
    for i, r in enumerate(middles):
        if not is_distant(base, r):
            witnesses.append({"t1": mats[i].to_json(), "side": "base"})
    checked = set()
    for i, r in enumerate(middles):
        row = table[i]
        for j in range(len(mats)):
            key = (i, row[j])
            if key in checked:
                continue
            checked.add(key)
            if not is_distant(r, points[row[j]]):
                witnesses.append({"t1": mats[i].to_json(), "t2": mats[j].to_json()})
    return _result("distant_chain", "exhaustive", len(mats) ** 2, witnesses)
