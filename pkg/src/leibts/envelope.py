"""The universal Leibniz envelope of a triple system and its grading automorphism.

``U(T)`` is spanned by ``T`` and the image of ``T (x) T``.  The bracket clauses
``[a, b] = a (x) b``, ``[a (x) b, c] = {abc}``, ``[a, b (x) c] = {abc} - {acb}`` and
``[a (x) b, c (x) d] = {abc} (x) d - {abd} (x) c`` do not by themselves satisfy
the Leibniz identity (already for the two-dimensional system ``{xyy} = {yyy} = x``),
so the tensor part is divided by the relations that the identity forces.

Basis order: ``e_1 .. e_n`` followed by the surviving pairs in lexicographic order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import product as iproduct

from .algebra import (
    BinaryTable,
    ReportBuilder,
    TripleTable,
    ValidationReport,
    _acc,
    _combine,
    _dense,
    bracket_span,
    check_antisymmetric,
    check_leibniz,
    check_leibts,
    check_lie_triple,
    quotient_algebra,
)
from .errors import InputError, PreconditionError, VerificationError
from .linalg import (
    Mat,
    Subspace,
    coordinate_subspace,
    is_invertible,
    kernel,
    span,
)


def pair_label(a: str, b: str) -> str:
    return f"{a}.{b}"


@dataclass(frozen=True)
class Envelope:
    """``U(T)``: ``T`` followed by the classes of the pairs ``e_i (x) e_j`` that survive.

    ``relations`` is the kernel of ``T (x) T -> U(T)`` in the ``n^2`` pair
    coordinates.  Surviving pairs are the non-pivot columns of ``relations``,
    kept in lexicographic order.
    """

    base: TripleTable
    bracket: BinaryTable
    relations: Subspace

    @property
    def n(self) -> int:
        return self.base.dim

    @property
    def dim(self) -> int:
        return self.bracket.dim

    @cached_property
    def pair_slots(self) -> tuple[tuple[int, int], ...]:
        return tuple(divmod(c, self.n) for c in self.relations.complement_indices())

    @cached_property
    def _slot_of(self) -> dict:
        return {p: self.n + k for k, p in enumerate(self.pair_slots)}

    def pair_index(self, i: int, j: int) -> int:
        """Slot of ``e_i (x) e_j``; pairs that reduce to other pairs have none."""
        try:
            return self._slot_of[(i, j)]
        except KeyError:
            raise InputError(f"pair ({i}, {j}) is not a basis element of U(T)") from None

    def pair_of(self, slot: int) -> tuple[int, int]:
        if not self.n <= slot < self.dim:
            raise InputError(f"slot {slot} is not a pair slot")
        return self.pair_slots[slot - self.n]

    @cached_property
    def t_part(self) -> Subspace:
        return coordinate_subspace(self.dim, range(self.n))

    @cached_property
    def pair_part(self) -> Subspace:
        return coordinate_subspace(self.dim, range(self.n, self.dim))

    @property
    def grading(self) -> tuple[Subspace, Subspace]:
        return (self.t_part, self.pair_part)

    @cached_property
    def full(self) -> Subspace:
        return coordinate_subspace(self.dim, range(self.dim))

    # coordinate changes between T, T(x)T and U(T)

    def reduce_pairs(self, w) -> tuple:
        """Image in ``U(T)`` of a vector of ``T (x) T`` given in ``n^2`` coordinates."""
        if len(w) != self.n * self.n:
            raise InputError("expected a vector of T (x) T")
        red = self.relations.reduce(w)
        return (0,) * self.n + tuple(red[c] for c in self.relations.complement_indices())

    def embed_t(self, S: Subspace) -> Subspace:
        if S.ambient_dim != self.n:
            raise InputError("expected a subspace of T")
        pad = (0,) * (self.dim - self.n)
        return span([tuple(v) + pad for v in S.basis], self.dim)

    def embed_pairs(self, S: Subspace) -> Subspace:
        """Image in ``U(T)`` of a subspace of ``T (x) T`` (``n^2`` coordinates)."""
        if S.ambient_dim != self.n * self.n:
            raise InputError("expected a subspace of T (x) T")
        return span([self.reduce_pairs(v) for v in S.basis], self.dim)

    def from_pair_coords(self, S: Subspace) -> Subspace:
        """A subspace given in the coordinates of the even part, placed in ``U(T)``."""
        if S.ambient_dim != self.dim - self.n:
            raise InputError("expected a subspace of the even part")
        pad = (0,) * self.n
        return span([pad + tuple(v) for v in S.basis], self.dim)

    def t_coords(self, S: Subspace) -> Subspace:
        """A subspace of the odd part, rewritten in coordinates of ``T``."""
        if S.ambient_dim != self.dim or not S <= self.t_part:
            raise InputError("expected a subspace of the odd part of U(T)")
        return span([v[: self.n] for v in S.basis], self.n)

    def tensor(self, a, b) -> tuple:
        """The element ``a (x) b`` of ``U(T)`` for vectors ``a, b`` of ``T``."""
        n = self.n
        w = [0] * (n * n)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        w[i * n + j] += x * y
        return self.reduce_pairs(w)


def formal_bracket(t: TripleTable) -> BinaryTable:
    """The four bracket clauses on ``T + (T (x) T)`` before imposing the Leibniz identity.

    ``e_i (x) e_j`` sits at slot ``n + i*n + j``.  This is generally not a
    Leibniz algebra; :func:`build_envelope` divides out the defect.
    """
    return _formal(t)


@lru_cache(maxsize=64)
def _formal(t: TripleTable) -> BinaryTable:
    n = t.dim
    T = t._table

    def pidx(i, j):
        return n + i * n + j

    brackets: dict = {}

    def put(key, sparse):
        if sparse:
            brackets[key] = dict(sparse)

    for a, b in iproduct(range(n), repeat=2):
        # [a, b] = a (x) b
        brackets[(a, b)] = {pidx(a, b): 1}
    for a, b, c in iproduct(range(n), repeat=3):
        # [a (x) b, c] = {abc}
        put((pidx(a, b), c), T[a][b][c])
        # [a, b (x) c] = {abc} - {acb}
        put((a, pidx(b, c)), _combine((1, T[a][b][c]), (-1, T[a][c][b])))
    for a, b, c, d in iproduct(range(n), repeat=4):
        # [a (x) b, c (x) d] = {abc} (x) d - {abd} (x) c
        val: dict = {}
        for l, q in T[a][b][c].items():
            _acc(val, q, {pidx(l, d): 1})
        for l, q in T[a][b][d].items():
            _acc(val, -q, {pidx(l, c): 1})
        put((pidx(a, b), pidx(c, d)), val)
    names = list(t.names) + [pair_label(t.names[i], t.names[j])
                             for i, j in iproduct(range(n), repeat=2)]
    if len(set(names)) != len(names):
        names = list(t.names) + [f"t{i + 1}_{j + 1}" for i, j in iproduct(range(n), repeat=2)]
    return BinaryTable.from_brackets(names, brackets)


def leibniz_defect(b: BinaryTable) -> Subspace:
    """Span of ``[[x,y],z] - [[x,z],y] - [x,[y,z]]`` over basis triples."""
    n = b.dim
    L = b._table
    B = b.sparse_bracket
    vecs = []
    for x, y, z in iproduct(range(n), repeat=3):
        d = _combine((1, B(L[x][y], {z: 1})), (-1, B(L[x][z], {y: 1})), (-1, B({x: 1}, L[y][z])))
        if d:
            vecs.append(_dense(d, n))
    return span(vecs, n)


def _two_sided_closure(b: BinaryTable, V: Subspace) -> Subspace:
    U = coordinate_subspace(b.dim, range(b.dim))
    while True:
        nxt = V + bracket_span(b, V, U) + bracket_span(b, U, V)
        if nxt == V:
            return V
        V = nxt


@lru_cache(maxsize=64)
def _build(t: TripleTable) -> Envelope:
    n = t.dim
    formal = _formal(t)
    W = _two_sided_closure(formal, leibniz_defect(formal))
    while True:
        # defects of the quotient, pulled back; one pass normally suffices
        q = quotient_algebra(formal, W)
        extra = leibniz_defect(q)
        if extra.is_zero():
            break
        comp = W.complement_indices()
        lifted = []
        for v in extra.basis:
            w = [0] * formal.dim
            for c, x in zip(comp, v):
                w[c] = x
            lifted.append(w)
        W = _two_sided_closure(formal, W + span(lifted, formal.dim))
    if any(v[i] for v in W.basis for i in range(n)):
        raise VerificationError("Leibniz relations reach T; T does not embed in U(T)")
    relations = span([v[n:] for v in W.basis], n * n)
    return Envelope(t, q, relations)


def build_envelope(t: TripleTable, *, check: bool = True) -> Envelope:
    """The universal Leibniz envelope of a Leibniz triple system.

    Built as the formal bracket on ``T + (T (x) T)`` divided by the two-sided
    ideal generated by its Leibniz defects.  That ideal lies in ``T (x) T``.
    """
    if check and not check_leibts(t).passed:
        raise PreconditionError("input is not a Leibniz triple system")
    return _build(t)


def theta(u: Envelope) -> Mat:
    """The involution acting by -1 on ``T`` and +1 on ``T (x) T``."""
    return Mat.diagonal([-1] * u.n + [1] * (u.dim - u.n))


def is_bracket_automorphism(b: BinaryTable, F: Mat) -> ValidationReport:
    """``F[e_i, e_j] = [F e_i, F e_j]`` on all basis pairs, plus invertibility."""
    rb = ReportBuilder()
    if F.shape != (b.dim, b.dim):
        raise InputError("matrix shape does not match the algebra")
    rb.expect("invertible", is_invertible(F))
    cols = F.columns()
    for i, j in iproduct(range(b.dim), repeat=2):
        lhs = F.apply(b.bracket_basis(i, j))
        rhs = b.bracket(cols[i], cols[j])
        rb.expect_equal("bracket-preserved", (i, j), lhs, rhs)
    return rb.build()


def is_triple_automorphism(t: TripleTable, f: Mat) -> ValidationReport:
    """``f{e_i e_j e_k} = {f e_i, f e_j, f e_k}`` on all basis triples."""
    rb = ReportBuilder()
    if f.shape != (t.dim, t.dim):
        raise InputError("matrix shape does not match the system")
    rb.expect("invertible", is_invertible(f))
    cols = f.columns()
    for i, j, k in iproduct(range(t.dim), repeat=3):
        lhs = f.apply(t.product_basis(i, j, k))
        rhs = t.product(cols[i], cols[j], cols[k])
        rb.expect_equal("product-preserved", (i, j, k), lhs, rhs)
    return rb.build()


def check_theta(u: Envelope) -> ValidationReport:
    """Involution, automorphism, eigenspaces, and determination by the generators."""
    th = theta(u)
    rb = ReportBuilder()
    ident = Mat.identity(u.dim)
    rb.expect("involution", th @ th == ident)
    rb.add(is_bracket_automorphism(u.bracket, th))
    minus = kernel(th + ident)
    plus = kernel(th - ident)
    rb.expect("odd-eigenspace", minus == u.t_part)
    rb.expect("even-eigenspace", plus == u.pair_part)
    cols = th.columns()
    for i, j in iproduct(range(u.n), repeat=2):
        # theta on [e_i, e_j] is fixed by theta on the generators
        rb.expect_equal("generated", (i, j), th.apply(u.bracket.bracket_basis(i, j)),
                        u.bracket.bracket(cols[i], cols[j]))
    return rb.build()


def lift_automorphism(t: TripleTable, f: Mat) -> Mat:
    """Extend an automorphism ``f`` of ``T`` to ``a + b (x) c -> f a + f b (x) f c`` on ``U(T)``."""
    if not is_triple_automorphism(t, f).passed:
        raise PreconditionError("matrix is not an automorphism of the triple system")
    u = build_envelope(t, check=False)
    fc = f.columns()
    cols = [tuple(c) + (0,) * (u.dim - u.n) for c in fc]
    cols += [u.tensor(fc[i], fc[j]) for i, j in u.pair_slots]
    F = Mat.from_columns(cols, u.dim)
    # f (x) f must preserve the relations for the lift to be well defined
    n = u.n
    for w in u.relations.basis:
        img = [0] * u.dim
        for k, x in enumerate(w):
            if x:
                i, j = divmod(k, n)
                img = [p + x * q for p, q in zip(img, u.tensor(fc[i], fc[j]))]
        if any(img):
            raise VerificationError("automorphism does not preserve the envelope relations")
    if not is_bracket_automorphism(u.bracket, F).passed:
        raise VerificationError("lift is not an automorphism of U(T)")
    return F


def restrict_automorphism(u: Envelope, F: Mat) -> Mat:
    """Restriction to ``T`` of a bracket automorphism commuting with the involution."""
    if F.shape != (u.dim, u.dim):
        raise InputError("matrix shape does not match the envelope")
    th = theta(u)
    if F @ th != th @ F:
        raise PreconditionError("automorphism does not commute with the involution")
    if not is_bracket_automorphism(u.bracket, F).passed:
        raise PreconditionError("matrix is not an automorphism of the envelope")
    n = u.n
    if not F.block(n, u.dim, 0, n).is_zero:
        raise PreconditionError("automorphism does not preserve T")
    f = F.block(0, n, 0, n)
    if not is_triple_automorphism(u.base, f).passed:
        raise PreconditionError("restriction is not an automorphism of T")
    return f


def compute_K(t: TripleTable) -> Subspace:
    """Elements of ``T (x) T`` whose brackets with ``T`` vanish on both sides.

    Returned in the ``n^2`` coordinates of the pair part.
    """
    n = t.dim
    T = t._table
    rows = []
    # unknown lambda_{ij} at column i*n + j
    for k in range(n):
        for l in range(n):
            rows.append(tuple(T[i][j][k].get(l, 0) for i, j in iproduct(range(n), repeat=2)))
            rows.append(tuple(T[k][i][j].get(l, 0) - T[k][j][i].get(l, 0)
                              for i, j in iproduct(range(n), repeat=2)))
    if not rows:
        return span([], n * n)
    return kernel(Mat(len(rows), n * n, tuple(rows)))


def envelope_K(u: Envelope) -> Subspace:
    """Image of ``K(T)`` in ``U(T)``: even elements annihilated by ``T`` on both sides."""
    return u.embed_pairs(compute_K(u.base))


def check_lie_envelope(t: TripleTable) -> ValidationReport:
    """Antisymmetry of the envelope bracket for a Lie triple system whose ``K`` vanishes in ``U(T)``.

    ``K(T)`` itself always contains ``a (x) a`` for a Lie triple system; those
    elements die in ``U(T)``, so the hypothesis is taken on the image.
    """
    if not check_lie_triple(t).passed:
        raise PreconditionError("input is not a Lie triple system")
    u = build_envelope(t)
    if not envelope_K(u).is_zero():
        raise PreconditionError("K(T) is nonzero in U(T)")
    return check_antisymmetric(u.bracket)


def check_grading(u: Envelope) -> ValidationReport:
    """Brackets of homogeneous basis elements land in the expected graded piece."""
    rb = ReportBuilder()
    n = u.n
    for i, j in iproduct(range(u.dim), repeat=2):
        val = u.bracket.bracket_basis(i, j)
        odd = (i < n) != (j < n)
        target = u.t_part if odd else u.pair_part
        rb.expect("graded", val in target, (i, j), val)
    return rb.build()


def check_envelope(u: Envelope) -> ValidationReport:
    """Leibniz identity, grading, even subalgebra, and recovery of the triple product."""
    rb = ReportBuilder()
    rb.add(check_leibniz(u.bracket))
    rb.add(check_grading(u))
    n = u.n
    B = u.bracket
    pad = (0,) * (u.dim - n)
    for a, b, c in iproduct(range(n), repeat=3):
        # {abc} = [[a, b], c]
        lhs = u.base.product_basis(a, b, c)
        val = B.sparse_bracket(B._table[a][b], {c: 1})
        rb.expect_equal("triple-recovered", (a, b, c), lhs + pad, _dense(val, u.dim))
    rb.expect("relations-in-K", u.relations <= compute_K(u.base))
    return rb.build()


__all__ = [
    "Envelope",
    "build_envelope",
    "check_envelope",
    "check_grading",
    "check_lie_envelope",
    "check_theta",
    "compute_K",
    "envelope_K",
    "formal_bracket",
    "leibniz_defect",
    "is_bracket_automorphism",
    "is_triple_automorphism",
    "lift_automorphism",
    "pair_label",
    "restrict_automorphism",
    "theta",
]
