"""Exact rational scalars, vectors, matrices and structure-constant tensors.

Everything is computed over Q with `fractions.Fraction`; there is no floating
point anywhere in the package. Vectors are plain tuples of Fractions in a
fixed basis. Matrices act on column vectors: (m @ v)_i = sum_j m[i][j] v[j].
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

Scalar = Fraction
Vector = tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)
HALF = Fraction(1, 2)


class DimensionMismatch(ValueError):
    """Raised when operands live in different dimensions."""


def rat(value) -> Fraction:
    """Coerce an int, Fraction or "p"/"p/q" string to an exact rational."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rat(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def parse_rat(text: str) -> Fraction:
    """Parse "p" or "p/q" with q a positive integer literal."""
    s = text.strip()
    num, slash, den = s.partition("/")
    try:
        p = int(num)
    except ValueError:
        raise ValueError(f"bad rational literal {text!r}") from None
    if not slash:
        return Fraction(p)
    if not den.isdigit() or int(den) <= 0:
        raise ValueError(f"bad rational literal {text!r}: denominator must be positive")
    return Fraction(p, int(den))


def format_rat(value: Fraction) -> str:
    return str(value)


# ---------------------------------------------------------------------------
# vectors

def vector(values: Iterable) -> Vector:
    return tuple(rat(v) for v in values)


def zero_vector(n: int) -> Vector:
    return (ZERO,) * n


def basis_vector(n: int, i: int) -> Vector:
    if not 0 <= i < n:
        raise IndexError(f"basis index {i} out of range for dimension {n}")
    return tuple(ONE if j == i else ZERO for j in range(n))


def vadd(u: Vector, v: Vector) -> Vector:
    if len(u) != len(v):
        raise DimensionMismatch(f"vector lengths {len(u)} and {len(v)} differ")
    return tuple((a + b if b else a) if a else b for a, b in zip(u, v))


def vsub(u: Vector, v: Vector) -> Vector:
    if len(u) != len(v):
        raise DimensionMismatch(f"vector lengths {len(u)} and {len(v)} differ")
    return tuple((a - b if b else a) if a else (-b if b else a) for a, b in zip(u, v))


def vscale(c: Fraction, v: Vector) -> Vector:
    if not c:
        return zero_vector(len(v))
    if c == 1:
        return v
    if c == -1:
        return tuple(-a if a else a for a in v)
    return tuple(c * a if a else a for a in v)


def is_zero(v: Vector) -> bool:
    return all(not a for a in v)


# ---------------------------------------------------------------------------
# matrices

class Matrix:
    """Immutable exact rational matrix (row-major tuple of row tuples)."""

    __slots__ = ("rows", "cols", "entries", "_powers", "_sparse_cols")

    def __init__(self, entries: Sequence[Sequence]):
        rows = tuple(tuple(rat(x) for x in row) for row in entries)
        width = len(rows[0]) if rows else 0
        if any(len(row) != width for row in rows):
            raise ValueError("ragged matrix rows")
        self.rows = len(rows)
        self.cols = width
        self.entries = rows
        self._powers: dict[int, "Matrix"] | None = None
        self._sparse_cols: tuple | None = None

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, rows: int, cols: int | None = None) -> "Matrix":
        cols = rows if cols is None else cols
        return cls([[ZERO] * cols for _ in range(rows)])

    @classmethod
    def diagonal(cls, values: Iterable) -> "Matrix":
        vals = [rat(v) for v in values]
        n = len(vals)
        return cls([[vals[i] if i == j else ZERO for j in range(n)] for i in range(n)])

    def __eq__(self, other) -> bool:
        return isinstance(other, Matrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in row) for row in self.entries)
        return f"Matrix[{body}]"

    def apply(self, v: Vector) -> Vector:
        return mat_apply(self, v)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise DimensionMismatch(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        ot = other.transpose().entries
        return Matrix([
            [sum((a * b for a, b in zip(row, col) if a and b), ZERO) for col in ot]
            for row in self.entries])

    def transpose(self) -> "Matrix":
        return Matrix(list(zip(*self.entries)))

    def power(self, k: int) -> "Matrix":
        """k-th matrix power (k >= 0), cached on the instance."""
        if k < 0:
            raise ValueError("negative matrix power")
        if self.rows != self.cols:
            raise DimensionMismatch("matrix power needs a square matrix")
        if self._powers is None:
            self._powers = {0: Matrix.identity(self.rows), 1: self}
        cache = self._powers
        top = max(cache)
        while top < k:
            cache[top + 1] = cache[top] @ self
            top += 1
        return cache[k]

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.entries)

    def sparse_columns(self) -> tuple:
        """Per column, the nonzero (row, value) pairs; built once, cached."""
        if self._sparse_cols is None:
            self._sparse_cols = tuple(
                tuple((i, self.entries[i][j]) for i in range(self.rows) if self.entries[i][j])
                for j in range(self.cols))
        return self._sparse_cols

    def is_identity(self) -> bool:
        return self == Matrix.identity(self.rows) if self.rows == self.cols else False


def mat_apply(m: Matrix, v: Vector) -> Vector:
    """Matrix-vector product, skipping zero entries on both sides."""
    if m.cols != len(v):
        raise DimensionMismatch(f"matrix is {m.rows}x{m.cols}, vector has length {len(v)}")
    cols = m.sparse_columns()
    acc = [ZERO] * m.rows
    for j, vj in enumerate(v):
        if not vj:
            continue
        for i, mij in cols[j]:
            cur = acc[i]
            term = mij * vj
            acc[i] = cur + term if cur else term
    return tuple(acc)


def dual_transpose(m: Matrix) -> Matrix:
    """Matrix of f -> f.m in the dual basis (the transpose)."""
    if m.rows != m.cols:
        raise DimensionMismatch("dual transpose needs a square matrix")
    return m.transpose()


def rank(m: Matrix) -> int:
    """Exact rank via integer fraction-free (Bareiss) elimination.

    Each row is first scaled by the lcm of its denominators, which leaves the
    rank unchanged and keeps all intermediate values integral.
    """
    work: list[list[int]] = []
    for row in m.entries:
        den = 1
        for x in row:
            den = den * x.denominator // math.gcd(den, x.denominator)
        work.append([int(x * den) for x in row])
    nrows, ncols = len(work), m.cols
    r = 0
    prev = 1
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if work[i][c]), None)
        if pivot is None:
            continue
        if pivot != r:
            work[r], work[pivot] = work[pivot], work[r]
        for i in range(r + 1, nrows):
            if not any(work[i][c:]):
                continue
            for j in range(c + 1, ncols):
                num = work[i][j] * work[r][c] - work[i][c] * work[r][j]
                q, rem = divmod(num, prev)
                assert rem == 0, "Bareiss division must be exact"
                work[i][j] = q
            work[i][c] = 0
        prev = work[r][c]
        r += 1
        if r == nrows:
            break
    return r


def kernel_basis(m: Matrix) -> list[Vector]:
    """Basis of the exact null space {v : m v = 0}, one vector per free column."""
    work = [list(row) for row in m.entries]
    nrows, ncols = len(work), m.cols
    pivot_of_col: dict[int, int] = {}
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if work[i][c]), None)
        if pivot is None:
            continue
        if pivot != r:
            work[r], work[pivot] = work[pivot], work[r]
        inv = ONE / work[r][c]
        work[r] = [x * inv for x in work[r]]
        for i in range(nrows):
            if i != r and work[i][c]:
                f = work[i][c]
                work[i] = [a - f * b for a, b in zip(work[i], work[r])]
        pivot_of_col[c] = r
        r += 1
        if r == nrows:
            break
    basis = []
    for free in range(ncols):
        if free in pivot_of_col:
            continue
        v = [ZERO] * ncols
        v[free] = ONE
        for c, row in pivot_of_col.items():
            v[c] = -work[row][free]
        basis.append(tuple(v))
    return basis


# ---------------------------------------------------------------------------
# structure-constant tensors

class Tensor3:
    """Structure constants of a bilinear product: e_i e_j = sum_k c[i][j][k] e_k."""

    __slots__ = ("dim", "entries", "_sparse_rows")

    def __init__(self, entries: Sequence[Sequence[Sequence]]):
        cube = tuple(tuple(tuple(rat(x) for x in row) for row in plane) for plane in entries)
        n = len(cube)
        if any(len(plane) != n or any(len(row) != n for row in plane) for plane in cube):
            raise ValueError("structure tensor must be n x n x n")
        self.dim = n
        self.entries = cube
        self._sparse_rows: tuple | None = None

    def sparse_rows(self) -> tuple:
        """sparse_rows()[i][j] lists the nonzero (k, c) of e_i e_j; cached."""
        if self._sparse_rows is None:
            self._sparse_rows = tuple(
                tuple(tuple((k, c) for k, c in enumerate(row) if c) for row in plane)
                for plane in self.entries)
        return self._sparse_rows

    @classmethod
    def zero(cls, n: int) -> "Tensor3":
        return cls([[[ZERO] * n for _ in range(n)] for _ in range(n)])

    @classmethod
    def from_sparse(cls, n: int, items: Iterable[tuple[int, int, int, object]]) -> "Tensor3":
        cube = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
        for i, j, k, c in items:
            if not (0 <= i < n and 0 <= j < n and 0 <= k < n):
                raise IndexError(f"tensor entry ({i},{j},{k}) out of range for dim {n}")
            cube[i][j][k] += rat(c)
        return cls(cube)

    def row(self, i: int, j: int) -> Vector:
        return self.entries[i][j]

    def sparse_items(self) -> list[tuple[int, int, int, Fraction]]:
        return [
            (i, j, k, c)
            for i, plane in enumerate(self.entries)
            for j, row in enumerate(plane)
            for k, c in enumerate(row)
            if c
        ]

    def is_skewsymmetric(self) -> bool:
        e = self.entries
        n = self.dim
        return all(e[i][j][k] == -e[j][i][k] for i in range(n) for j in range(i, n) for k in range(n))

    def is_symmetric(self) -> bool:
        e = self.entries
        n = self.dim
        return all(e[i][j] == e[j][i] for i in range(n) for j in range(i + 1, n))

    def map_rows(self, f) -> "Tensor3":
        """New tensor with every product vector c[i][j][.] replaced by f(vector)."""
        return Tensor3([[f(row) for row in plane] for plane in self.entries])

    def __eq__(self, other) -> bool:
        return isinstance(other, Tensor3) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)


def apply_product(c: Tensor3, u: Vector, v: Vector) -> Vector:
    """Bilinear product of coordinate vectors: sum_ij u_i v_j c[i][j][.]."""
    n = c.dim
    if len(u) != n or len(v) != n:
        raise DimensionMismatch(
            f"product tensor has dim {n}, arguments have lengths {len(u)}, {len(v)}")
    rows = c.sparse_rows()
    acc = [ZERO] * n
    for i, ui in enumerate(u):
        if not ui:
            continue
        plane = rows[i]
        for j, vj in enumerate(v):
            if not vj:
                continue
            s = ui * vj
            for k, ck in plane[j]:
                cur = acc[k]
                term = s * ck
                acc[k] = cur + term if cur else term
    return tuple(acc)


class Tensor4:
    """Structure constants of a ternary bracket: {e_i,e_j,e_k} = sum_l t[i][j][k][l] e_l."""

    __slots__ = ("dim", "entries", "_sparse_rows")

    def __init__(self, entries):
        box = tuple(
            tuple(tuple(tuple(rat(x) for x in row) for row in plane) for plane in block)
            for block in entries)
        n = len(box)
        for block in box:
            if len(block) != n or any(
                    len(plane) != n or any(len(row) != n for row in plane) for plane in block):
                raise ValueError("triple tensor must be n x n x n x n")
        self.dim = n
        self.entries = box
        self._sparse_rows: tuple | None = None

    def sparse_rows(self) -> tuple:
        if self._sparse_rows is None:
            self._sparse_rows = tuple(
                tuple(tuple(tuple((l, c) for l, c in enumerate(row) if c) for row in plane)
                      for plane in block)
                for block in self.entries)
        return self._sparse_rows

    @classmethod
    def zero(cls, n: int) -> "Tensor4":
        return cls([[[[ZERO] * n for _ in range(n)] for _ in range(n)] for _ in range(n)])

    @classmethod
    def from_sparse(cls, n: int, items: Iterable[tuple[int, int, int, int, object]]) -> "Tensor4":
        box = [[[[ZERO] * n for _ in range(n)] for _ in range(n)] for _ in range(n)]
        for i, j, k, l, c in items:
            if not all(0 <= x < n for x in (i, j, k, l)):
                raise IndexError(f"triple entry ({i},{j},{k},{l}) out of range for dim {n}")
            box[i][j][k][l] += rat(c)
        return cls(box)

    def row(self, i: int, j: int, k: int) -> Vector:
        return self.entries[i][j][k]

    def sparse_items(self) -> list[tuple[int, int, int, int, Fraction]]:
        return [
            (i, j, k, l, c)
            for i, block in enumerate(self.entries)
            for j, plane in enumerate(block)
            for k, row in enumerate(plane)
            for l, c in enumerate(row)
            if c
        ]

    def __eq__(self, other) -> bool:
        return isinstance(other, Tensor4) and self.entries == other.entries


def apply_triple(t: Tensor4, u: Vector, v: Vector, w: Vector) -> Vector:
    """Trilinear bracket of coordinate vectors: sum_ijk u_i v_j w_k t[i][j][k][.]."""
    n = t.dim
    if len(u) != n or len(v) != n or len(w) != n:
        raise DimensionMismatch("triple tensor dimension mismatch")
    rows = t.sparse_rows()
    acc = [ZERO] * n
    for i, ui in enumerate(u):
        if not ui:
            continue
        block = rows[i]
        for j, vj in enumerate(v):
            if not vj:
                continue
            plane = block[j]
            s = ui * vj
            for k, wk in enumerate(w):
                if not wk:
                    continue
                sw = s * wk
                for l, cl in plane[k]:
                    cur = acc[l]
                    term = sw * cl
                    acc[l] = cur + term if cur else term
    return tuple(acc)
