"""Exact dense matrices and canonical subspaces over a small Galois field.

Matrices are immutable, hashable and carry their field.  Subspaces of
K^d are stored by their reduced row echelon basis, which is a canonical
form: two subspaces are equal exactly when their stored bases are equal.
Zero-row and zero-column matrices are permitted throughout; the block
constructions in the isotropic-subspace algorithms rely on them.
"""

from __future__ import annotations

import itertools

from .fields import FieldSpec


class Matrix:
    """An immutable r x c matrix over a :class:`FieldSpec`.

    Entries are the field's packed-int elements.  Arithmetic uses the
    field's tables; ``*`` is the matrix product.
    """

    __slots__ = ("field", "rows", "cols", "entries", "_hash")

    def __init__(self, field: FieldSpec, entries, *, cols: int | None = None):
        ents = tuple(tuple(row) for row in entries)
        rows = len(ents)
        if rows:
            cols = len(ents[0])
            if any(len(row) != cols for row in ents):
                raise ValueError("ragged rows")
        elif cols is None:
            raise ValueError("a matrix with no rows needs an explicit column count")
        q = field.q
        for row in ents:
            for x in row:
                if not isinstance(x, int) or not 0 <= x < q:
                    raise ValueError(f"{x!r} is not an element of {field!r}")
        self.field = field
        self.rows = rows
        self.cols = cols
        self.entries = ents
        self._hash = hash((field, rows, cols, ents))

    # -- constructors ----------------------------------------------------

    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int) -> "Matrix":
        return cls(field, ((0,) * cols,) * rows, cols=cols)

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "Matrix":
        return cls(
            field, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), cols=n
        )

    @classmethod
    def row_vector(cls, field: FieldSpec, vec) -> "Matrix":
        vec = tuple(vec)
        return cls(field, (vec,), cols=len(vec))

    @classmethod
    def from_blocks(cls, blocks) -> "Matrix":
        """Assemble a matrix from a 2d grid of conformal blocks."""
        grid = [list(row) for row in blocks]
        field = grid[0][0].field
        out = []
        for brow in grid:
            height = brow[0].rows
            if any(b.rows != height for b in brow):
                raise ValueError("block row heights differ")
            for i in range(height):
                row = []
                for b in brow:
                    row.extend(b.entries[i])
                out.append(tuple(row))
        width = sum(b.cols for b in grid[0])
        if any(sum(b.cols for b in brow) != width for brow in grid):
            raise ValueError("block row widths differ")
        return cls(field, out, cols=width)

    # -- identity --------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self._hash == other._hash
            and self.field == other.field
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        body = ", ".join(str(list(row)) for row in self.entries)
        return f"Matrix({self.field!r}, {self.rows}x{self.cols}, [{body}])"

    # -- arithmetic --------------------------------------------------------

    def _same_shape(self, other: "Matrix") -> None:
        if self.field != other.field:
            raise ValueError("field mismatch")
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._same_shape(other)
        add = self.field._add
        return Matrix(
            self.field,
            tuple(
                tuple(add[x][y] for x, y in zip(r1, r2))
                for r1, r2 in zip(self.entries, other.entries)
            ),
            cols=self.cols,
        )

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._same_shape(other)
        sub = self.field._sub
        return Matrix(
            self.field,
            tuple(
                tuple(sub[x][y] for x, y in zip(r1, r2))
                for r1, r2 in zip(self.entries, other.entries)
            ),
            cols=self.cols,
        )

    def __neg__(self):
        neg = self.field._neg
        return Matrix(
            self.field,
            tuple(tuple(neg[x] for x in row) for row in self.entries),
            cols=self.cols,
        )

    def __mul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.field != other.field:
            raise ValueError("field mismatch")
        if self.cols != other.rows:
            raise ValueError("inner dimension mismatch")
        add = self.field._add
        mul = self.field._mul
        ocols = other.cols
        oent = other.entries
        out = []
        for row in self.entries:
            new = []
            for j in range(ocols):
                acc = 0
                for x, orow in zip(row, oent):
                    if x:
                        acc = add[acc][mul[x][orow[j]]]
                new.append(acc)
            out.append(tuple(new))
        return Matrix(self.field, out, cols=ocols)

    def scale(self, c: int) -> "Matrix":
        self.field.check_element(c)
        mul = self.field._mul
        return Matrix(
            self.field,
            tuple(tuple(mul[c][x] for x in row) for row in self.entries),
            cols=self.cols,
        )

    # -- shape manipulation ------------------------------------------------

    def transpose(self) -> "Matrix":
        return Matrix(
            self.field,
            tuple(
                tuple(self.entries[i][j] for i in range(self.rows))
                for j in range(self.cols)
            ),
            cols=self.rows,
        )

    def map_entries(self, fn) -> "Matrix":
        return Matrix(
            self.field,
            tuple(tuple(fn(x) for x in row) for row in self.entries),
            cols=self.cols,
        )

    def sigma_transpose(self) -> "Matrix":
        """Transpose with the field involution applied entrywise."""
        sig = self.field._sigma
        return Matrix(
            self.field,
            tuple(
                tuple(sig[self.entries[i][j]] for i in range(self.rows))
                for j in range(self.cols)
            ),
            cols=self.rows,
        )

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.field != other.field or self.rows != other.rows:
            raise ValueError("hstack needs matching fields and row counts")
        return Matrix(
            self.field,
            tuple(r1 + r2 for r1, r2 in zip(self.entries, other.entries)),
            cols=self.cols + other.cols,
        )

    def vstack(self, other: "Matrix") -> "Matrix":
        if self.field != other.field or self.cols != other.cols:
            raise ValueError("vstack needs matching fields and column counts")
        return Matrix(self.field, self.entries + other.entries, cols=self.cols)

    def block(self, r0: int, r1: int, c0: int, c1: int) -> "Matrix":
        """The submatrix with rows r0..r1-1 and columns c0..c1-1."""
        if not (0 <= r0 <= r1 <= self.rows and 0 <= c0 <= c1 <= self.cols):
            raise ValueError("block out of range")
        return Matrix(
            self.field,
            tuple(row[c0:c1] for row in self.entries[r0:r1]),
            cols=c1 - c0,
        )

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i]

    # -- Gauss-Jordan ------------------------------------------------------

    def rref(self) -> tuple["Matrix", int]:
        """Reduced row echelon form and rank."""
        work = [list(row) for row in self.entries]
        pivots = _row_reduce(self.field, work, self.cols)
        return (
            Matrix(self.field, (tuple(r) for r in work), cols=self.cols),
            len(pivots),
        )

    def rank(self) -> int:
        work = [list(row) for row in self.entries]
        return len(_row_reduce(self.field, work, self.cols))

    def inverse(self) -> "Matrix":
        """Inverse via Gauss-Jordan on the identity-augmented matrix.

        Raises ValueError when the matrix is not square or not
        invertible, which doubles as the GL membership test.
        """
        n = self.rows
        if n != self.cols:
            raise ValueError("only square matrices can be inverted")
        if n == 0:
            return self
        work = [
            list(row) + [int(i == j) for j in range(n)]
            for i, row in enumerate(self.entries)
        ]
        pivots = _row_reduce(self.field, work, 2 * n)
        if pivots != list(range(n)):
            raise ValueError("matrix is not invertible")
        return Matrix(self.field, (tuple(r[n:]) for r in work), cols=n)

    def is_invertible(self) -> bool:
        return self.rows == self.cols and self.rank() == self.rows

    # -- predicates ---------------------------------------------------------

    def is_hermitian(self) -> bool:
        """Whether the matrix equals its involution transpose."""
        if self.rows != self.cols:
            raise ValueError("hermitian only makes sense for square matrices")
        sig = self.field._sigma
        e = self.entries
        return all(
            e[i][j] == sig[e[j][i]] for i in range(self.rows) for j in range(self.rows)
        )

    def is_zero(self) -> bool:
        return all(not x for row in self.entries for x in row)

    # -- serialisation --------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [
                [self.field.element_to_string(x) for x in row] for row in self.entries
            ],
        }

    @classmethod
    def from_json(cls, field: FieldSpec, data) -> "Matrix":
        if not isinstance(data, dict):
            raise ValueError("matrix JSON must be an object")
        try:
            rows = int(data["rows"])
            cols = int(data["cols"])
            entries = data["entries"]
        except (KeyError, TypeError, ValueError):
            raise ValueError(
                "matrix JSON needs integer 'rows', 'cols' and an 'entries' array"
            ) from None
        if not isinstance(entries, list) or len(entries) != rows:
            raise ValueError("entry row count does not match 'rows'")
        parsed = []
        for row in entries:
            if not isinstance(row, list) or len(row) != cols:
                raise ValueError("entry column count does not match 'cols'")
            parsed.append(tuple(field.parse_element(str(x)) for x in row))
        return cls(field, parsed, cols=cols)


def _row_reduce(field: FieldSpec, work: list[list[int]], cols: int) -> list[int]:
    """In-place reduced row echelon form; returns the pivot column list."""
    add = field._add
    mul = field._mul
    neg = field._neg
    inv = field._inv
    nrows = len(work)
    pivots = []
    r = 0
    for c in range(cols):
        if r == nrows:
            break
        src = next((i for i in range(r, nrows) if work[i][c]), None)
        if src is None:
            continue
        work[r], work[src] = work[src], work[r]
        row = work[r]
        if row[c] != 1:
            s = inv[row[c]]
            work[r] = row = [mul[s][x] for x in row]
        for i in range(nrows):
            if i != r and work[i][c]:
                f = neg[work[i][c]]
                cur = work[i]
                work[i] = [add[x][mul[f][y]] for x, y in zip(cur, row)]
        pivots.append(c)
        r += 1
    return pivots


class Subspace:
    """A subspace of K^d, stored by its canonical RREF basis."""

    __slots__ = ("basis", "ambient_dim", "_hash")

    def __init__(self, matrix: Matrix):
        reduced, rank = matrix.rref()
        self.basis = reduced.block(0, rank, 0, matrix.cols)
        self.ambient_dim = matrix.cols
        self._hash = hash((Subspace, self.basis))

    @classmethod
    def _from_canonical(cls, matrix: Matrix) -> "Subspace":
        """Trusting constructor for a basis already in RREF with no zero rows."""
        self = object.__new__(cls)
        self.basis = matrix
        self.ambient_dim = matrix.cols
        self._hash = hash((Subspace, matrix))
        return self

    @classmethod
    def zero(cls, field: FieldSpec, ambient_dim: int) -> "Subspace":
        return cls._from_canonical(Matrix(field, (), cols=ambient_dim))

    @classmethod
    def from_rows(cls, field: FieldSpec, ambient_dim: int, rows) -> "Subspace":
        return cls(Matrix(field, rows, cols=ambient_dim))

    @property
    def field(self) -> FieldSpec:
        return self.basis.field

    @property
    def dim(self) -> int:
        return self.basis.rows

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.basis == other.basis

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim} of K^{self.ambient_dim})"

    def _check_compatible(self, other: "Subspace") -> None:
        if self.field != other.field or self.ambient_dim != other.ambient_dim:
            raise ValueError("subspaces live in different spaces")

    def __add__(self, other):
        """Subspace sum, computed by stacking the bases."""
        if not isinstance(other, Subspace):
            return NotImplemented
        self._check_compatible(other)
        return Subspace(self.basis.vstack(other.basis))

    def intersect(self, other: "Subspace") -> "Subspace":
        """Intersection via the Zassenhaus block trick.

        Row reduce [U | U; W | 0]; the right halves of the rows whose
        left half vanished form a basis of the intersection.
        """
        self._check_compatible(other)
        d = self.ambient_dim
        work = [list(row) + list(row) for row in self.basis.entries]
        work += [list(row) + [0] * d for row in other.basis.entries]
        _row_reduce(self.field, work, 2 * d)
        rows = [
            tuple(r[d:]) for r in work if not any(r[:d]) and any(r[d:])
        ]
        return Subspace.from_rows(self.field, d, rows)

    def contains_vector(self, vec) -> bool:
        vec = tuple(vec)
        if len(vec) != self.ambient_dim:
            raise ValueError("vector has the wrong length")
        stacked = self.basis.vstack(Matrix.row_vector(self.field, vec))
        return stacked.rank() == self.dim

    def contains(self, other: "Subspace") -> bool:
        self._check_compatible(other)
        return self.basis.vstack(other.basis).rank() == self.dim

    def complete_basis(self) -> Matrix:
        """An invertible d x d matrix whose first dim rows are the basis.

        The remaining rows are standard basis vectors, chosen greedily
        in index order, so the completion is deterministic.
        """
        d = self.ambient_dim
        rows = extend_independent(
            self.field,
            d,
            list(self.basis.entries),
            (unit_vector(d, i) for i in range(d)),
        )
        full = Matrix(self.field, rows, cols=d)
        assert full.rows == d and full.is_invertible()
        return full


def unit_vector(length: int, index: int) -> tuple[int, ...]:
    return tuple(int(i == index) for i in range(length))


def extend_independent(field: FieldSpec, ambient_dim: int, rows, candidates):
    """Greedily extend rows by candidates that raise the rank.

    Returns the combined list; the relative order of the kept candidate
    rows follows the iteration order, so the result is deterministic.
    """
    rows = [tuple(r) for r in rows]
    rank = Matrix(field, rows, cols=ambient_dim).rank()
    if rank != len(rows):
        raise ValueError("starting rows are not independent")
    for cand in candidates:
        cand = tuple(cand)
        trial = Matrix(field, rows + [cand], cols=ambient_dim)
        if trial.rank() > rank:
            rows.append(cand)
            rank += 1
    return rows


def nullspace(m: Matrix) -> Subspace:
    """The right kernel {x : m x^T = 0} as a subspace of K^cols."""
    reduced, rank = m.rref()
    pivots = []
    c = 0
    for row in reduced.entries[:rank]:
        while not row[c]:
            c += 1
        pivots.append(c)
    neg = m.field._neg
    free = [c for c in range(m.cols) if c not in pivots]
    rows = []
    for f in free:
        vec = [0] * m.cols
        vec[f] = 1
        for i, pc in enumerate(pivots):
            vec[pc] = neg[reduced.entries[i][f]]
        rows.append(tuple(vec))
    return Subspace.from_rows(m.field, m.cols, rows)


def all_matrices(field: FieldSpec, rows: int, cols: int):
    """All rows x cols matrices, in lexicographic row-major entry order."""
    for values in itertools.product(field.elements(), repeat=rows * cols):
        yield Matrix(
            field,
            tuple(values[i * cols : (i + 1) * cols] for i in range(rows)),
            cols=cols,
        )


def all_vectors(field: FieldSpec, length: int):
    """All length-tuples over the field, in lexicographic order."""
    return itertools.product(field.elements(), repeat=length)


def outer_product(field: FieldSpec, u, v) -> Matrix:
    """The matrix (u_i * v_j) for two coefficient tuples."""
    mul = field._mul
    u = tuple(u)
    v = tuple(v)
    return Matrix(
        field, tuple(tuple(mul[x][y] for y in v) for x in u), cols=len(v)
    )


def enumerate_subspaces(field: FieldSpec, ambient_dim: int, dim: int):
    """All dim-dimensional subspaces of K^ambient_dim.

    The order is deterministic: pivot column patterns in lexicographic
    order, then the free entries of the RREF basis in lexicographic
    row-major order.  Downstream point ids index into this order.
    """
    if dim < 0 or dim > ambient_dim:
        return
    if dim == 0:
        yield Subspace.zero(field, ambient_dim)
        return
    for pivots in itertools.combinations(range(ambient_dim), dim):
        pivot_set = set(pivots)
        slots = [
            (r, c)
            for r in range(dim)
            for c in range(pivots[r] + 1, ambient_dim)
            if c not in pivot_set
        ]
        template = [[0] * ambient_dim for _ in range(dim)]
        for r, c in zip(range(dim), pivots):
            template[r][c] = 1
        for values in itertools.product(field.elements(), repeat=len(slots)):
            for (r, c), v in zip(slots, values):
                template[r][c] = v
            yield Subspace._from_canonical(
                Matrix(field, (tuple(row) for row in template), cols=ambient_dim)
            )
