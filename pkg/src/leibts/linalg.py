"""Exact linear algebra over the rationals.

Scalars are Python ``int`` or ``fractions.Fraction`` values; integral results
are kept as ``int`` so that integer-heavy structure constants stay fast.
Vectors are tuples of scalars, matrices act on column vectors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence, Union

from .errors import InputError

Scalar = Union[int, Fraction]
Vector = tuple  # tuple[Scalar, ...]


def scalar(x) -> Scalar:
    """Coerce ``x`` to an exact scalar (int when integral)."""
    if isinstance(x, bool):
        raise InputError("booleans are not scalars")
    if isinstance(x, int):
        return x
    if isinstance(x, float):
        raise InputError("floating-point values are not accepted; use Fraction or str")
    q = Fraction(x)
    return q.numerator if q.denominator == 1 else q


def _norm(q: Scalar) -> Scalar:
    if type(q) is Fraction and q.denominator == 1:
        return q.numerator
    return q


def vector(values: Iterable) -> Vector:
    return tuple(scalar(v) for v in values)


def zero_vector(n: int) -> Vector:
    return (0,) * n


def unit_vector(n: int, i: int) -> Vector:
    v = [0] * n
    v[i] = 1
    return tuple(v)


def is_zero_vector(v: Sequence[Scalar]) -> bool:
    return not any(v)


def add_vectors(u: Sequence[Scalar], v: Sequence[Scalar]) -> Vector:
    return tuple(_norm(a + b) for a, b in zip(u, v))


def sub_vectors(u: Sequence[Scalar], v: Sequence[Scalar]) -> Vector:
    return tuple(_norm(a - b) for a, b in zip(u, v))


def scale_vector(q: Scalar, v: Sequence[Scalar]) -> Vector:
    return tuple(_norm(q * a) for a in v)


def dot(u: Sequence[Scalar], v: Sequence[Scalar]) -> Scalar:
    return _norm(sum(a * b for a, b in zip(u, v) if a and b))


# ---------------------------------------------------------------------------
# Matrices


@dataclass(frozen=True)
class Mat:
    """Dense exact matrix; ``data`` is a tuple of row tuples."""

    rows: int
    cols: int
    data: tuple

    def __post_init__(self):
        if len(self.data) != self.rows or any(len(r) != self.cols for r in self.data):
            raise InputError(f"matrix data does not match shape {self.rows}x{self.cols}")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable], cols: int | None = None) -> "Mat":
        data = tuple(vector(r) for r in rows)
        if cols is None:
            if not data:
                raise InputError("cannot infer column count of an empty matrix")
            cols = len(data[0])
        return cls(len(data), cols, data)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int) -> "Mat":
        cols = [vector(c) for c in columns]
        data = tuple(tuple(c[i] for c in cols) for i in range(rows))
        return cls(rows, len(cols), data)

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "Mat":
        cols = rows if cols is None else cols
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> "Mat":
        return cls(n, n, tuple(unit_vector(n, i) for i in range(n)))

    @classmethod
    def diagonal(cls, entries: Sequence) -> "Mat":
        n = len(entries)
        rows = []
        for i, e in enumerate(entries):
            r = [0] * n
            r[i] = scalar(e)
            rows.append(tuple(r))
        return cls(n, n, tuple(rows))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, idx):
        i, j = idx
        return self.data[i][j]

    def row(self, i: int) -> Vector:
        return self.data[i]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.data)

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.cols)]

    @cached_property
    def is_zero(self) -> bool:
        return not any(any(r) for r in self.data)

    def transpose(self) -> "Mat":
        return Mat(self.cols, self.rows,
                   tuple(tuple(r[j] for r in self.data) for j in range(self.cols)))

    def __add__(self, other: "Mat") -> "Mat":
        self._same_shape(other)
        return Mat(self.rows, self.cols,
                   tuple(add_vectors(a, b) for a, b in zip(self.data, other.data)))

    def __sub__(self, other: "Mat") -> "Mat":
        self._same_shape(other)
        return Mat(self.rows, self.cols,
                   tuple(sub_vectors(a, b) for a, b in zip(self.data, other.data)))

    def __neg__(self) -> "Mat":
        return self.scale(-1)

    def scale(self, q) -> "Mat":
        q = scalar(q)
        return Mat(self.rows, self.cols, tuple(scale_vector(q, r) for r in self.data))

    def __matmul__(self, other: "Mat") -> "Mat":
        if self.cols != other.rows:
            raise InputError(f"cannot multiply {self.shape} by {other.shape}")
        if self.is_zero or other.is_zero:
            return Mat.zeros(self.rows, other.cols)
        ocols = other.cols
        odata = other.data
        out = []
        for r in self.data:
            acc = [0] * ocols
            for k, a in enumerate(r):
                if a:
                    orow = odata[k]
                    for j in range(ocols):
                        b = orow[j]
                        if b:
                            acc[j] += a * b
            out.append(tuple(_norm(x) for x in acc))
        return Mat(self.rows, ocols, tuple(out))

    def apply(self, v: Sequence[Scalar]) -> Vector:
        if len(v) != self.cols:
            raise InputError("vector length does not match matrix columns")
        return tuple(dot(r, v) for r in self.data)

    def power(self, k: int) -> "Mat":
        if not self.is_square:
            raise InputError("power of a non-square matrix")
        result = Mat.identity(self.rows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def trace(self) -> Scalar:
        if not self.is_square:
            raise InputError("trace of a non-square matrix")
        return _norm(sum(self.data[i][i] for i in range(self.rows)))

    def flat(self) -> Vector:
        return tuple(x for r in self.data for x in r)

    def block(self, r0: int, r1: int, c0: int, c1: int) -> "Mat":
        return Mat(r1 - r0, c1 - c0, tuple(tuple(r[c0:c1]) for r in self.data[r0:r1]))

    def _same_shape(self, other: "Mat") -> None:
        if self.shape != other.shape:
            raise InputError(f"shape mismatch {self.shape} vs {other.shape}")

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in r) for r in self.data)
        return f"Mat({self.rows}x{self.cols}: {body})"


def commutator(a: Mat, b: Mat) -> Mat:
    return a @ b - b @ a


def kron(a: Mat, b: Mat) -> Mat:
    rows = []
    for ra in a.data:
        for rb in b.data:
            rows.append(tuple(_norm(x * y) if x and y else 0 for x in ra for y in rb))
    return Mat(a.rows * b.rows, a.cols * b.cols, tuple(rows))


def block_diagonal(a: Mat, b: Mat) -> Mat:
    n = a.cols + b.cols
    rows = [tuple(r) + (0,) * b.cols for r in a.data]
    rows += [(0,) * a.cols + tuple(r) for r in b.data]
    return Mat(a.rows + b.rows, n, tuple(rows))


# ---------------------------------------------------------------------------
# Row reduction


def _echelon(rows: Iterable[Sequence[Scalar]], ncols: int) -> tuple[list[list], list[int]]:
    """Reduced row echelon form of the given rows; returns nonzero rows and pivots."""
    work = [list(r) for r in rows if any(r)]
    for r in work:
        if len(r) != ncols:
            raise InputError("row length does not match column count")
    pivots: list[int] = []
    basis: list[list] = []
    for col in range(ncols):
        pr = None
        for idx in range(len(work)):
            if work[idx][col]:
                pr = idx
                break
        if pr is None:
            continue
        prow = work.pop(pr)
        p = prow[col]
        if p != 1:
            inv = Fraction(1) / p
            prow = [_norm(x * inv) if x else 0 for x in prow]
        nz = [j for j in range(col, ncols) if prow[j]]
        for other in work:
            f = other[col]
            if f:
                for j in nz:
                    other[j] = _norm(other[j] - f * prow[j])
        for other in basis:
            f = other[col]
            if f:
                for j in nz:
                    other[j] = _norm(other[j] - f * prow[j])
        work = [r for r in work if any(r)]
        basis.append(prow)
        pivots.append(col)
    return basis, pivots


def rref(m: Mat) -> Mat:
    """Reduced row echelon form of ``m`` with zero rows kept at the bottom."""
    basis, _ = _echelon(m.data, m.cols)
    rows = [tuple(r) for r in basis]
    rows += [(0,) * m.cols] * (m.rows - len(rows))
    return Mat(m.rows, m.cols, tuple(rows))


def rank(m: Mat) -> int:
    return len(_echelon(m.data, m.cols)[0])


def inverse(m: Mat) -> Mat:
    if not m.is_square:
        raise InputError("inverse of a non-square matrix")
    n = m.rows
    aug = [tuple(r) + unit_vector(n, i) for i, r in enumerate(m.data)]
    basis, pivots = _echelon(aug, 2 * n)
    if pivots[:n] != list(range(n)) or len(basis) < n:
        raise InputError("matrix is singular")
    return Mat(n, n, tuple(tuple(r[n:]) for r in basis[:n]))


def is_invertible(m: Mat) -> bool:
    return m.is_square and rank(m) == m.rows


# ---------------------------------------------------------------------------
# Subspaces


@dataclass(frozen=True)
class Subspace:
    """A subspace of ``Q^ambient_dim`` stored by its canonical RREF basis.

    Two subspaces are equal exactly when their basis tuples coincide.
    Construct through :func:`span`; the constructor trusts its input.
    """

    ambient_dim: int
    basis: tuple

    @property
    def dim(self) -> int:
        return len(self.basis)

    @cached_property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(j for j, x in enumerate(r) if x) for r in self.basis)

    @property
    def basis_matrix(self) -> Mat:
        return Mat(self.dim, self.ambient_dim, self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def reduce(self, v: Sequence[Scalar]) -> Vector:
        """Canonical representative of ``v`` modulo this subspace (zero on pivots)."""
        if len(v) != self.ambient_dim:
            raise InputError("vector length does not match ambient dimension")
        w = list(v)
        for row, p in zip(self.basis, self.pivots):
            f = w[p]
            if f:
                for j in range(p, self.ambient_dim):
                    if row[j]:
                        w[j] = _norm(w[j] - f * row[j])
        return tuple(w)

    def complement_indices(self) -> tuple[int, ...]:
        piv = set(self.pivots)
        return tuple(j for j in range(self.ambient_dim) if j not in piv)

    def coordinates(self, v: Sequence[Scalar]) -> Vector:
        """Coefficients of ``v`` in the RREF basis; raises if ``v`` is not a member."""
        if not is_zero_vector(self.reduce(v)):
            raise InputError("vector is not in the subspace")
        return tuple(v[p] for p in self.pivots)

    def __contains__(self, v) -> bool:
        return contains(self, v)

    def __le__(self, other: "Subspace") -> bool:
        return contains(other, self)

    def __ge__(self, other: "Subspace") -> bool:
        return contains(self, other)

    def __add__(self, other: "Subspace") -> "Subspace":
        return subspace_sum(self, other)

    def __and__(self, other: "Subspace") -> "Subspace":
        return subspace_intersect(self, other)

    def __repr__(self) -> str:
        rows = ", ".join("(" + ", ".join(str(x) for x in r) + ")" for r in self.basis)
        return f"Subspace(dim={self.dim}/{self.ambient_dim}: [{rows}])"


def span(vectors: Iterable[Sequence], ambient_dim: int) -> Subspace:
    vecs = [vector(v) for v in vectors]
    for v in vecs:
        if len(v) != ambient_dim:
            raise InputError(f"vector of length {len(v)} in ambient dimension {ambient_dim}")
    basis, _ = _echelon(vecs, ambient_dim)
    return Subspace(ambient_dim, tuple(tuple(r) for r in basis))


def zero_subspace(n: int) -> Subspace:
    return Subspace(n, ())


def full_space(n: int) -> Subspace:
    return Subspace(n, tuple(unit_vector(n, i) for i in range(n)))


def coordinate_subspace(n: int, indices: Iterable[int]) -> Subspace:
    return span([unit_vector(n, i) for i in indices], n)


def _check_ambient(a: Subspace, b: Subspace) -> None:
    if a.ambient_dim != b.ambient_dim:
        raise InputError(f"ambient mismatch {a.ambient_dim} vs {b.ambient_dim}")


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    _check_ambient(a, b)
    if a.is_zero():
        return b
    if b.is_zero():
        return a
    return span(a.basis + b.basis, a.ambient_dim)


def sum_all(spaces: Iterable[Subspace], ambient_dim: int) -> Subspace:
    vecs = []
    for s in spaces:
        if s.ambient_dim != ambient_dim:
            raise InputError("ambient mismatch")
        vecs.extend(s.basis)
    return span(vecs, ambient_dim)


def annihilator(s: Subspace) -> Subspace:
    """Vectors ``w`` with ``w . v = 0`` for every ``v`` in ``s``."""
    if s.is_zero():
        return full_space(s.ambient_dim)
    return kernel(s.basis_matrix)


def subspace_intersect(a: Subspace, b: Subspace) -> Subspace:
    _check_ambient(a, b)
    if a.is_zero() or b.is_zero():
        return zero_subspace(a.ambient_dim)
    if b.is_full():
        return a
    if a.is_full():
        return b
    normals = annihilator(b).basis
    # x = sum alpha_i a_i lies in b iff every normal of b kills it
    system = Mat(len(normals), a.dim,
                 tuple(tuple(dot(nrm, ai) for ai in a.basis) for nrm in normals))
    sol = kernel(system)
    vecs = []
    for alpha in sol.basis:
        v = [0] * a.ambient_dim
        for c, ai in zip(alpha, a.basis):
            if c:
                for j, x in enumerate(ai):
                    if x:
                        v[j] += c * x
        vecs.append(v)
    return span(vecs, a.ambient_dim)


def contains(a: Subspace, v) -> bool:
    """Exact membership of a vector, or inclusion of a subspace, in ``a``."""
    if isinstance(v, Subspace):
        _check_ambient(a, v)
        return all(is_zero_vector(a.reduce(w)) for w in v.basis)
    return is_zero_vector(a.reduce(vector(v)))


def kernel(m: Mat) -> Subspace:
    """Null space ``{v : m v = 0}`` as a subspace of ``Q^cols``."""
    basis, pivots = _echelon(m.data, m.cols)
    piv = set(pivots)
    vecs = []
    for free in range(m.cols):
        if free in piv:
            continue
        v = [0] * m.cols
        v[free] = 1
        for row, p in zip(basis, pivots):
            if row[free]:
                v[p] = _norm(-row[free])
        vecs.append(v)
    return span(vecs, m.cols)


def image(m: Mat, s: Subspace | None = None) -> Subspace:
    """Image of ``s`` (default: everything) under ``m``."""
    if s is None:
        return span(m.columns(), m.rows)
    if s.ambient_dim != m.cols:
        raise InputError("subspace does not live in the matrix domain")
    return span([m.apply(v) for v in s.basis], m.rows)


def is_nilpotent_operator(m: Mat) -> bool:
    if not m.is_square:
        raise InputError("nilpotency requires a square matrix")
    return m.power(m.rows).is_zero if m.rows else True
