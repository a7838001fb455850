"""Structure-constant tables for triple systems and Leibniz algebras.

A :class:`TripleTable` stores ``{e_i e_j e_k} = sum_l c[i,j,k][l] e_l`` and a
:class:`BinaryTable` stores ``[e_i, e_j]``.  Both are sparse and immutable;
absent entries are zero.  The identity checkers enumerate every basis tuple.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import product as iproduct
from typing import Iterable, Mapping, Sequence

from .errors import InputError, PreconditionError
from .linalg import Mat, Subspace, Vector, _norm, scalar, span, unit_vector

MAX_WITNESSES = 100

Sparse = dict  # index -> nonzero scalar


def _sparse(v: Sequence) -> Sparse:
    return {i: x for i, x in enumerate(v) if x}


def _dense(s: Mapping, n: int) -> Vector:
    v = [0] * n
    for i, x in s.items():
        v[i] = x
    return tuple(v)


def _acc(target: dict, coeff, source: Mapping) -> None:
    for i, x in source.items():
        y = target.get(i, 0) + coeff * x
        if y:
            target[i] = _norm(y)
        else:
            target.pop(i, None)


def _combine(*terms) -> Sparse:
    """Linear combination of ``(coefficient, sparse vector)`` pairs."""
    out: dict = {}
    for c, s in terms:
        if c:
            _acc(out, c, s)
    return out


def _canon_entries(dim: int, entries: Mapping, arity: int) -> tuple:
    out = []
    for key, val in entries.items():
        key = tuple(key)
        if len(key) != arity or any(not (0 <= i < dim) for i in key):
            raise InputError(f"index {key} out of range for dimension {dim}")
        if isinstance(val, Mapping):
            vec = [0] * dim
            for l, q in val.items():
                if not 0 <= l < dim:
                    raise InputError(f"output index {l} out of range")
                vec[l] = scalar(q)
            vec = tuple(vec)
        else:
            vec = tuple(scalar(q) for q in val)
            if len(vec) != dim:
                raise InputError(f"product value for {key} has wrong length")
        if any(vec):
            out.append((key, vec))
    out.sort()
    return tuple(out)


def _default_names(dim: int) -> tuple[str, ...]:
    return tuple(f"e{i + 1}" for i in range(dim))


# ---------------------------------------------------------------------------
# Validation reports


@dataclass(frozen=True)
class Violation:
    identity: str
    witness: tuple
    lhs: Vector
    rhs: Vector


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of an exhaustive check; ``violations`` holds at most 100 witnesses."""

    passed: bool
    violations: tuple = ()
    checked: int = 0
    total_violations: int = 0
    notes: tuple = ()

    def __bool__(self) -> bool:
        return self.passed

    @classmethod
    def merge(cls, *reports: "ValidationReport", notes: Iterable[str] = ()) -> "ValidationReport":
        viol = tuple(v for r in reports for v in r.violations)[:MAX_WITNESSES]
        total = sum(r.total_violations for r in reports)
        return cls(passed=all(r.passed for r in reports), violations=viol,
                   checked=sum(r.checked for r in reports), total_violations=total,
                   notes=tuple(n for r in reports for n in r.notes) + tuple(notes))

    @classmethod
    def ok(cls, notes: Iterable[str] = ()) -> "ValidationReport":
        return cls(True, (), 0, 0, tuple(notes))


class ReportBuilder:
    """Accumulates checks, keeping the first ``MAX_WITNESSES`` violations."""

    def __init__(self):
        self.violations: list[Violation] = []
        self.checked = 0
        self.total = 0
        self.notes: list[str] = []

    def expect_equal(self, identity: str, witness, lhs, rhs) -> bool:
        self.checked += 1
        if lhs == rhs:
            return True
        self.total += 1
        if len(self.violations) < MAX_WITNESSES:
            self.violations.append(Violation(identity, tuple(witness), tuple(lhs), tuple(rhs)))
        return False

    def expect(self, identity: str, condition: bool, witness=(), lhs=(), rhs=()) -> bool:
        self.checked += 1
        if condition:
            return True
        self.total += 1
        if len(self.violations) < MAX_WITNESSES:
            self.violations.append(Violation(identity, tuple(witness), tuple(lhs), tuple(rhs)))
        return False

    def note(self, text: str) -> None:
        self.notes.append(text)

    def add(self, report: ValidationReport) -> None:
        self.checked += report.checked
        self.total += report.total_violations
        room = MAX_WITNESSES - len(self.violations)
        self.violations.extend(report.violations[:room])
        self.notes.extend(report.notes)

    def build(self) -> ValidationReport:
        return ValidationReport(self.total == 0, tuple(self.violations), self.checked,
                                self.total, tuple(self.notes))


# ---------------------------------------------------------------------------
# Tables


@dataclass(frozen=True)
class TripleTable:
    """Trilinear product on ``Q^dim`` given by structure constants."""

    dim: int
    names: tuple
    entries: tuple = ()  # sorted ((i, j, k), value-vector) with nonzero values

    @classmethod
    def from_products(cls, names: Sequence[str] | int,
                      products: Mapping | None = None) -> "TripleTable":
        """Build from ``{(i, j, k): vector or {l: coeff}}``."""
        if isinstance(names, int):
            names = _default_names(names)
        names = tuple(names)
        if len(set(names)) != len(names):
            raise InputError("basis labels must be distinct")
        dim = len(names)
        return cls(dim, names, _canon_entries(dim, products or {}, 3))

    @cached_property
    def _table(self) -> list:
        n = self.dim
        t = [[[{} for _ in range(n)] for _ in range(n)] for _ in range(n)]
        for (i, j, k), vec in self.entries:
            t[i][j][k] = _sparse(vec)
        return t

    def as_dict(self) -> dict:
        return {key: vec for key, vec in self.entries}

    def product_basis(self, i: int, j: int, k: int) -> Vector:
        return _dense(self._table[i][j][k], self.dim)

    def sparse_product(self, x: Mapping, y: Mapping, z: Mapping) -> Sparse:
        t = self._table
        out: dict = {}
        for a, xa in x.items():
            ta = t[a]
            for b, yb in y.items():
                tab = ta[b]
                xy = xa * yb
                for c, zc in z.items():
                    s = tab[c]
                    if s:
                        _acc(out, xy * zc, s)
        return out

    def product(self, x: Sequence, y: Sequence, z: Sequence) -> Vector:
        """``{x y z}`` for coordinate vectors."""
        for v in (x, y, z):
            if len(v) != self.dim:
                raise InputError("vector length does not match dimension")
        return _dense(self.sparse_product(_sparse(x), _sparse(y), _sparse(z)), self.dim)

    def is_zero(self) -> bool:
        return not self.entries


@dataclass(frozen=True)
class BinaryTable:
    """Bilinear bracket on ``Q^dim`` given by structure constants."""

    dim: int
    names: tuple
    entries: tuple = ()

    @classmethod
    def from_brackets(cls, names: Sequence[str] | int,
                      brackets: Mapping | None = None) -> "BinaryTable":
        if isinstance(names, int):
            names = _default_names(names)
        names = tuple(names)
        if len(set(names)) != len(names):
            raise InputError("basis labels must be distinct")
        dim = len(names)
        return cls(dim, names, _canon_entries(dim, brackets or {}, 2))

    @cached_property
    def _table(self) -> list:
        n = self.dim
        t = [[{} for _ in range(n)] for _ in range(n)]
        for (i, j), vec in self.entries:
            t[i][j] = _sparse(vec)
        return t

    def as_dict(self) -> dict:
        return {key: vec for key, vec in self.entries}

    def bracket_basis(self, i: int, j: int) -> Vector:
        return _dense(self._table[i][j], self.dim)

    def sparse_bracket(self, x: Mapping, y: Mapping) -> Sparse:
        t = self._table
        out: dict = {}
        for a, xa in x.items():
            ta = t[a]
            for b, yb in y.items():
                s = ta[b]
                if s:
                    _acc(out, xa * yb, s)
        return out

    def bracket(self, x: Sequence, y: Sequence) -> Vector:
        if len(x) != self.dim or len(y) != self.dim:
            raise InputError("vector length does not match dimension")
        return _dense(self.sparse_bracket(_sparse(x), _sparse(y)), self.dim)

    def left_mult(self, x: Sequence) -> Mat:
        """Matrix of ``y -> [x, y]``."""
        cols = [self.bracket(x, unit_vector(self.dim, j)) for j in range(self.dim)]
        return Mat.from_columns(cols, self.dim)

    def right_mult(self, x: Sequence) -> Mat:
        """Matrix of ``y -> [y, x]``."""
        cols = [self.bracket(unit_vector(self.dim, j), x) for j in range(self.dim)]
        return Mat.from_columns(cols, self.dim)

    def is_zero(self) -> bool:
        return not self.entries


# ---------------------------------------------------------------------------
# Identity checkers


def _unit(i: int) -> Sparse:
    return {i: 1}


@lru_cache(maxsize=256)
def check_leibts(t: TripleTable) -> ValidationReport:
    """Both defining five-variable identities on all ``n^5`` basis tuples.

    Cached: tables are immutable and the check is by far the most repeated one.
    """
    n = t.dim
    P = t.sparse_product
    rb = ReportBuilder()
    T = t._table
    for a, b, c, d, e in iproduct(range(n), repeat=5):
        ea, eb, ec, ed, ee = _unit(a), _unit(b), _unit(c), _unit(d), _unit(e)
        abc, acb, adb, adc = T[a][b][c], T[a][c][b], T[a][d][b], T[a][d][c]
        abd, abe = T[a][b][d], T[a][b][e]
        lhs1 = P(ea, T[b][c][d], ee)
        rhs1 = _combine((1, P(abc, ed, ee)), (-1, P(acb, ed, ee)),
                        (-1, P(adb, ec, ee)), (1, P(adc, eb, ee)))
        if lhs1 != rhs1:
            rb.expect_equal("inner-middle", (a, b, c, d, e), _dense(lhs1, n), _dense(rhs1, n))
        else:
            rb.checked += 1
        lhs2 = P(ea, eb, T[c][d][e])
        rhs2 = _combine((1, P(abc, ed, ee)), (-1, P(abd, ec, ee)),
                        (-1, P(abe, ec, ed)), (1, P(abe, ed, ec)))
        if lhs2 != rhs2:
            rb.expect_equal("inner-right", (a, b, c, d, e), _dense(lhs2, n), _dense(rhs2, n))
        else:
            rb.checked += 1
    return rb.build()


def check_derived_identities(t: TripleTable) -> ValidationReport:
    """Consequences of the defining identities: skew, cyclic and mixed relations."""
    n = t.dim
    P = t.sparse_product
    T = t._table
    rb = ReportBuilder()
    for a, b, c, d, e in iproduct(range(n), repeat=5):
        ea, eb, ec, ed, ee = _unit(a), _unit(b), _unit(c), _unit(d), _unit(e)
        w = (a, b, c, d, e)
        checks = (
            ("skew-middle", _combine((1, P(ea, T[b][c][d], ee)), (1, P(ea, T[c][b][d], ee)))),
            ("skew-right", _combine((1, P(ea, eb, T[c][d][e])), (1, P(ea, eb, T[d][c][e])))),
            ("cyclic-middle", _combine((1, P(ea, T[b][c][d], ee)), (1, P(ea, T[c][d][b], ee)),
                                       (1, P(ea, T[d][b][c], ee)))),
            ("cyclic-right", _combine((1, P(ea, eb, T[c][d][e])), (1, P(ea, eb, T[d][e][c])),
                                      (1, P(ea, eb, T[e][c][d])))),
            ("mixed", _combine((1, P(T[c][d][e], eb, ea)), (-1, P(T[c][d][e], ea, eb)),
                               (-1, P(T[c][b][a], ed, ee)), (1, P(T[c][a][b], ed, ee)),
                               (-1, P(ec, T[a][b][d], ee)), (-1, P(ec, ed, T[a][b][e])))),
        )
        for name, val in checks:
            if val:
                rb.expect_equal(name, w, _dense(val, n), (0,) * n)
            else:
                rb.checked += 1
    return rb.build()


def check_lie_triple(t: TripleTable) -> ValidationReport:
    """Lie triple system axioms: alternating in the first two slots, cyclic, derivation."""
    n = t.dim
    P = t.sparse_product
    T = t._table
    rb = ReportBuilder()
    for a, b, c in iproduct(range(n), repeat=3):
        alt = _combine((1, T[a][b][c]), (1, T[b][a][c]))
        rb.expect_equal("alternating", (a, b, c), _dense(alt, n), (0,) * n)
        cyc = _combine((1, T[a][b][c]), (1, T[b][c][a]), (1, T[c][a][b]))
        rb.expect_equal("cyclic", (a, b, c), _dense(cyc, n), (0,) * n)
    for a, b, c, d, e in iproduct(range(n), repeat=5):
        ea, eb, ec, ed, ee = _unit(a), _unit(b), _unit(c), _unit(d), _unit(e)
        lhs = P(ea, eb, T[c][d][e])
        rhs = _combine((1, P(T[a][b][c], ed, ee)), (1, P(ec, T[a][b][d], ee)),
                       (1, P(ec, ed, T[a][b][e])))
        if lhs != rhs:
            rb.expect_equal("derivation", (a, b, c, d, e), _dense(lhs, n), _dense(rhs, n))
        else:
            rb.checked += 1
    return rb.build()


def check_leibniz(b: BinaryTable) -> ValidationReport:
    """Right Leibniz identity ``[[x,y],z] = [[x,z],y] + [x,[y,z]]`` on basis triples."""
    n = b.dim
    B = b.sparse_bracket
    L = b._table
    rb = ReportBuilder()
    for x, y, z in iproduct(range(n), repeat=3):
        lhs = B(L[x][y], _unit(z))
        rhs = _combine((1, B(L[x][z], _unit(y))), (1, B(_unit(x), L[y][z])))
        if lhs != rhs:
            rb.expect_equal("leibniz", (x, y, z), _dense(lhs, n), _dense(rhs, n))
        else:
            rb.checked += 1
    return rb.build()


def check_antisymmetric(b: BinaryTable) -> ValidationReport:
    n = b.dim
    L = b._table
    rb = ReportBuilder()
    for x, y in iproduct(range(n), repeat=2):
        rb.expect_equal("antisymmetry", (x, y), _dense(_combine((1, L[x][y]), (1, L[y][x])), n),
                        (0,) * n)
    return rb.build()


def leibts_from_leibniz(b: BinaryTable, *, check: bool = True) -> TripleTable:
    """The triple product ``{xyz} = [[x, y], z]`` of a Leibniz algebra."""
    if check and not check_leibniz(b).passed:
        raise PreconditionError("bracket does not satisfy the Leibniz identity")
    n = b.dim
    products = {}
    for i, j, k in iproduct(range(n), repeat=3):
        val = b.sparse_bracket(b._table[i][j], _unit(k))
        if val:
            products[(i, j, k)] = val
    return TripleTable.from_products(b.names, products)


# ---------------------------------------------------------------------------
# Product spans, quotients and restrictions


def _require_ambient(n: int, *spaces: Subspace) -> None:
    for s in spaces:
        if s.ambient_dim != n:
            raise InputError(f"subspace in ambient {s.ambient_dim}, expected {n}")


def triple_span(t: TripleTable, A: Subspace, B: Subspace, C: Subspace) -> Subspace:
    """Span of ``{a b c}`` over basis vectors of ``A``, ``B``, ``C``."""
    _require_ambient(t.dim, A, B, C)
    if A.is_zero() or B.is_zero() or C.is_zero():
        return span([], t.dim)
    sa = [_sparse(v) for v in A.basis]
    sb = [_sparse(v) for v in B.basis]
    sc = [_sparse(v) for v in C.basis]
    vecs = []
    for x in sa:
        for y in sb:
            for z in sc:
                val = t.sparse_product(x, y, z)
                if val:
                    vecs.append(_dense(val, t.dim))
    return span(vecs, t.dim)


def bracket_span(b: BinaryTable, A: Subspace, B: Subspace) -> Subspace:
    """Span of ``[a, b]`` over basis vectors of ``A`` and ``B``."""
    _require_ambient(b.dim, A, B)
    sa = [_sparse(v) for v in A.basis]
    sb = [_sparse(v) for v in B.basis]
    vecs = []
    for x in sa:
        for y in sb:
            val = b.sparse_bracket(x, y)
            if val:
                vecs.append(_dense(val, b.dim))
    return span(vecs, b.dim)


def _coset_coords(I: Subspace, v: Sequence) -> Vector:
    red = I.reduce(v)
    return tuple(red[j] for j in I.complement_indices())


def quotient_system(t: TripleTable, I: Subspace) -> TripleTable:
    """Products of ``T/I`` on the standard vectors that are not pivots of ``I``."""
    from .ideals import is_ideal

    _require_ambient(t.dim, I)
    if not is_ideal(t, I):
        raise PreconditionError("quotient requires an ideal")
    comp = I.complement_indices()
    products = {}
    for (i, j, k) in iproduct(range(len(comp)), repeat=3):
        val = _coset_coords(I, t.product_basis(comp[i], comp[j], comp[k]))
        if any(val):
            products[(i, j, k)] = val
    q = TripleTable.from_products([t.names[c] for c in comp], products)
    # products of coset representatives must not depend on the representative
    for w in I.basis:
        for u, v in iproduct(range(t.dim), repeat=2):
            eu, ev = unit_vector(t.dim, u), unit_vector(t.dim, v)
            for val in (t.product(w, eu, ev), t.product(eu, w, ev), t.product(eu, ev, w)):
                if any(_coset_coords(I, val)):
                    raise PreconditionError("quotient product is not well defined")
    return q


def quotient_algebra(b: BinaryTable, I: Subspace) -> BinaryTable:
    """Bracket of ``L/I`` on the standard vectors that are not pivots of ``I``."""
    _require_ambient(b.dim, I)
    full = span([unit_vector(b.dim, i) for i in range(b.dim)], b.dim)
    if not (bracket_span(b, I, full) <= I and bracket_span(b, full, I) <= I):
        raise PreconditionError("quotient requires a two-sided ideal")
    comp = I.complement_indices()
    brackets = {}
    for i, j in iproduct(range(len(comp)), repeat=2):
        val = _coset_coords(I, b.bracket_basis(comp[i], comp[j]))
        if any(val):
            brackets[(i, j)] = val
    return BinaryTable.from_brackets([b.names[c] for c in comp], brackets)


def restrict_system(t: TripleTable, S: Subspace) -> TripleTable:
    """Induced product on a subsystem ``S`` in the coordinates of its RREF basis."""
    _require_ambient(t.dim, S)
    products = {}
    for i, j, k in iproduct(range(S.dim), repeat=3):
        val = t.product(S.basis[i], S.basis[j], S.basis[k])
        if any(val):
            try:
                products[(i, j, k)] = S.coordinates(val)
            except InputError:
                raise PreconditionError("subspace is not closed under the product") from None
    return TripleTable.from_products([t.names[p] for p in S.pivots], products)


def full(n: int) -> Subspace:
    return span([unit_vector(n, i) for i in range(n)], n)
