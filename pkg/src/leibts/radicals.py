"""Series, radicals and structure theory of triple systems and their envelopes.

Every result that rests on a theorem is re-verified on the spot; a failed
self-check raises :class:`~leibts.errors.VerificationError`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable, Optional

from .algebra import (
    BinaryTable,
    ReportBuilder,
    TripleTable,
    ValidationReport,
    bracket_span,
    check_leibniz,
    check_leibts,
    check_lie_triple,
    full,
    quotient_algebra,
    quotient_system,
    restrict_system,
    triple_span,
)
from .envelope import build_envelope, envelope_K
from .errors import InputError, PreconditionError, UnsupportedInputError, VerificationError
from .ideals import (
    big_I,
    big_J,
    envelope_inventory,
    ideal_inventory,
    is_bracket_ideal,
    is_ideal,
    is_subsystem,
    theta_invariant_split,
    verify_ideal_operators,
)
from .linalg import Mat, Subspace, _norm, kernel, span, subspace_intersect, sum_all

DERIVED = "derived"
LOWER_CENTRAL = "lower_central"
SIMPLIFIED_LOWER = "simplified_lower"
LEIBNIZ_DERIVED = "leibniz_derived"
LEIBNIZ_LOWER = "leibniz_lower"


@dataclass(frozen=True)
class SeriesTrace:
    """Distinct terms of a descending series; the last term repeats forever."""

    kind: str
    terms: tuple
    stabilized: bool
    reaches_zero: bool

    def term(self, n: int) -> Subspace:
        return self.terms[min(n, len(self.terms) - 1)]

    @property
    def length(self) -> int:
        """Index of the first zero term, or ``None`` when the series never vanishes."""
        return len(self.terms) - 1 if self.reaches_zero else None


def _run_series(kind: str, start: Subspace, step: Callable[[Subspace], Subspace],
                is_ideal_check: Callable[[Subspace], bool] | None) -> SeriesTrace:
    terms = [start]
    while True:
        nxt = step(terms[-1])
        if nxt == terms[-1]:
            break
        if not nxt <= terms[-1]:
            raise VerificationError(f"{kind} series is not descending")
        if is_ideal_check is not None and not is_ideal_check(nxt):
            raise VerificationError(f"{kind} series term is not an ideal")
        terms.append(nxt)
    return SeriesTrace(kind, tuple(terms), True, terms[-1].is_zero())


def _ideal_or_whole(t: TripleTable, I: Optional[Subspace]) -> Subspace:
    if I is None:
        return full(t.dim)
    if I.ambient_dim != t.dim:
        raise InputError("subspace does not live in T")
    if not is_ideal(t, I):
        raise PreconditionError("subspace is not an ideal")
    return I


def derived_series(t: TripleTable, I: Optional[Subspace] = None) -> SeriesTrace:
    """``I^[n+1] = {T X X} + {X T X} + {X X T}`` with ``X = I^[n]``."""
    I = _ideal_or_whole(t, I)
    T = full(t.dim)

    def step(X):
        return triple_span(t, T, X, X) + triple_span(t, X, T, X) + triple_span(t, X, X, T)

    return _run_series(DERIVED, I, step, lambda S: is_ideal(t, S))


def lower_central_series(t: TripleTable, I: Optional[Subspace] = None) -> SeriesTrace:
    """The six-term series ``I^{n+1} = {X I T} + {X T I} + {I X T} + {I T X} + {T I X} + {T X I}``."""
    I = _ideal_or_whole(t, I)
    T = full(t.dim)

    def step(X):
        return sum_all([triple_span(t, X, I, T), triple_span(t, X, T, I),
                        triple_span(t, I, X, T), triple_span(t, I, T, X),
                        triple_span(t, T, I, X), triple_span(t, T, X, I)], t.dim)

    return _run_series(LOWER_CENTRAL, I, step, lambda S: is_ideal(t, S))


def simplified_lower(t: TripleTable) -> SeriesTrace:
    """``T^(n+1) = {T^(n) T T}``."""
    T = full(t.dim)
    return _run_series(SIMPLIFIED_LOWER, T, lambda X: triple_span(t, X, T, T), None)


def is_solvable(t: TripleTable, I: Optional[Subspace] = None) -> bool:
    return derived_series(t, I).reaches_zero


def is_nilpotent(t: TripleTable, I: Optional[Subspace] = None) -> bool:
    return lower_central_series(t, I).reaches_zero


# Leibniz algebras: ideals are nilpotent/solvable as algebras in their own right


def leibniz_derived_series(b: BinaryTable, V: Optional[Subspace] = None) -> SeriesTrace:
    V = full(b.dim) if V is None else V
    return _run_series(LEIBNIZ_DERIVED, V, lambda X: bracket_span(b, X, X), None)


def leibniz_lower_series(b: BinaryTable, V: Optional[Subspace] = None) -> SeriesTrace:
    """``V^{n+1} = [V^n, V] + [V, V^n]``."""
    V = full(b.dim) if V is None else V
    return _run_series(LEIBNIZ_LOWER, V,
                       lambda X: bracket_span(b, X, V) + bracket_span(b, V, X), None)


def is_solvable_leibniz(b: BinaryTable, V: Optional[Subspace] = None) -> bool:
    return leibniz_derived_series(b, V).reaches_zero


def is_nilpotent_leibniz(b: BinaryTable, V: Optional[Subspace] = None) -> bool:
    return leibniz_lower_series(b, V).reaches_zero


# ---------------------------------------------------------------------------
# Kernels


def kernel_ideal(t: TripleTable) -> Subspace:
    """Span of ``{abc} - {acb} + {bca}``, with its ideal properties re-checked."""
    n = t.dim
    vecs = []
    for a in range(n):
        for b in range(n):
            for c in range(n):
                abc, acb, bca = (t.product_basis(a, b, c), t.product_basis(a, c, b),
                                 t.product_basis(b, c, a))
                vecs.append(tuple(_norm(x - y + z) for x, y, z in zip(abc, acb, bca)))
    K = span(vecs, n)
    T = full(n)
    if not is_ideal(t, K):
        raise VerificationError("kernel is not an ideal")
    if not (triple_span(t, T, T, K).is_zero() and triple_span(t, T, K, T).is_zero()):
        raise VerificationError("kernel is not annihilated in the last two slots")
    if not check_lie_triple(quotient_system(t, K)).passed:
        raise VerificationError("quotient by the kernel is not a Lie triple system")
    return K


def leibniz_kernel(b: BinaryTable) -> Subspace:
    """Span of the squares ``[x, x]``, i.e. of ``[e_i, e_j] + [e_j, e_i]``."""
    if not check_leibniz(b).passed:
        raise PreconditionError("bracket does not satisfy the Leibniz identity")
    return _leibniz_kernel(b)


def _leibniz_kernel(b: BinaryTable) -> Subspace:
    n = b.dim
    vecs = []
    for i in range(n):
        for j in range(i, n):
            u, v = b.bracket_basis(i, j), b.bracket_basis(j, i)
            vecs.append(tuple(_norm(x + y) for x, y in zip(u, v)))
    return span(vecs, n)


def killing_form(lie: BinaryTable) -> Mat:
    """Gram matrix ``tr(ad e_i ad e_j)`` of a Lie bracket."""
    n = lie.dim
    ads = []
    for i in range(n):
        e = [0] * n
        e[i] = 1
        ads.append(lie.left_mult(e).data)
    rows = []
    for i in range(n):
        A = ads[i]
        row = []
        for j in range(n):
            B = ads[j]
            s = 0
            for p in range(n):
                Ap = A[p]
                for q in range(n):
                    if Ap[q]:
                        bq = B[q][p]
                        if bq:
                            s += Ap[q] * bq
            row.append(_norm(s))
        rows.append(tuple(row))
    return Mat(n, n, tuple(rows))


def _lie_radical(lie: BinaryTable) -> Subspace:
    """Radical of a Lie algebra: the Killing-orthogonal of its derived algebra."""
    n = lie.dim
    if n == 0:
        return span([], 0)
    G = killing_form(lie)
    D = bracket_span(lie, full(n), full(n))
    if D.is_zero():
        return full(n)
    rows = [G.apply(d) for d in D.basis]  # G is symmetric
    return kernel(Mat(len(rows), n, tuple(rows)))


def _leibniz_radical(b: BinaryTable) -> Subspace:
    K = _leibniz_kernel(b)
    if not is_bracket_ideal(b, K):
        raise VerificationError("span of squares is not a two-sided ideal")
    lie = quotient_algebra(b, K)
    from .algebra import check_antisymmetric

    if not check_antisymmetric(lie).passed:
        raise VerificationError("quotient by the squares is not antisymmetric")
    rbar = _lie_radical(lie)
    comp = K.complement_indices()
    lifted = []
    for r in rbar.basis:
        v = [0] * b.dim
        for c, x in zip(comp, r):
            v[c] = x
        lifted.append(v)
    return K + span(lifted, b.dim)


def leibniz_radical(b: BinaryTable, *, verify: bool = True) -> Subspace:
    """Largest solvable two-sided ideal of a Leibniz algebra."""
    if not check_leibniz(b).passed:
        raise PreconditionError("bracket does not satisfy the Leibniz identity")
    rad = _leibniz_radical(b)
    if verify:
        if not is_bracket_ideal(b, rad):
            raise VerificationError("radical is not a two-sided ideal")
        if not is_solvable_leibniz(b, rad):
            raise VerificationError("radical is not solvable")
        if not _leibniz_radical(quotient_algebra(b, rad)).is_zero():
            raise VerificationError("quotient by the radical has a nonzero radical")
    return rad


# ---------------------------------------------------------------------------
# Radicals of a triple system


@dataclass(frozen=True)
class RadicalBundle:
    """Radicals of ``T`` (coordinates of ``T``) and of ``U(T)`` (coordinates of ``U(T)``)."""

    R: Subspace
    KerT: Subspace
    RadU: Subspace
    N: Optional[Subspace] = None
    NilU: Optional[Subspace] = None


def _require_leibts(t: TripleTable) -> None:
    if not check_leibts(t).passed:
        raise PreconditionError("input is not a Leibniz triple system")


def solvable_radical(t: TripleTable, *, checked: bool = False) -> RadicalBundle:
    """Solvable radical through the envelope: ``R(T) = Rad(U(T))`` intersected with ``T``."""
    if not checked:
        _require_leibts(t)
    u = build_envelope(t, check=False)
    rad_u = leibniz_radical(u.bracket)
    R = u.t_coords(subspace_intersect(rad_u, u.t_part))
    ker = kernel_ideal(t)
    if not is_ideal(t, R) or not is_solvable(t, R):
        raise VerificationError("computed radical is not a solvable ideal")
    if not ker <= R:
        raise VerificationError("kernel is not contained in the radical")
    if rad_u != big_J(t, R):
        raise VerificationError("radical of the envelope differs from J(R)")
    return RadicalBundle(R=R, KerT=ker, RadU=rad_u)


def is_semisimple(t: TripleTable) -> bool:
    """``R(T) = Ker(T)``; also confirms that ``T/R(T)`` is a semisimple Lie triple system."""
    _require_leibts(t)
    bundle = solvable_radical(t, checked=True)
    q = quotient_system(t, bundle.R)
    if not solvable_radical(q, checked=True).R.is_zero() or not kernel_ideal(q).is_zero():
        raise VerificationError("quotient by the radical is not a semisimple Lie triple system")
    return bundle.R == bundle.KerT


class _IncrementalBasis:
    """Echelon basis that accepts vectors one at a time."""

    def __init__(self, n: int):
        self.n = n
        self.rows: dict[int, list] = {}

    def reduce(self, v) -> list:
        w = list(v)
        for p in sorted(self.rows):
            f = w[p]
            if f:
                row = self.rows[p]
                for j in range(p, self.n):
                    if row[j]:
                        w[j] = _norm(w[j] - f * row[j])
        return w

    def add(self, v) -> bool:
        w = self.reduce(v)
        piv = next((j for j, x in enumerate(w) if x), None)
        if piv is None:
            return False
        inv = Fraction(1) / w[piv]
        w = [_norm(x * inv) if x else 0 for x in w]
        for p, row in self.rows.items():
            f = row[piv]
            if f:
                for j in range(piv, self.n):
                    if w[j]:
                        row[j] = _norm(row[j] - f * w[j])
        self.rows[piv] = w
        return True

    def __len__(self) -> int:
        return len(self.rows)


def _associative_closure(gens: list[Mat], size: int) -> list[Mat]:
    """Basis of the (non-unital) associative algebra generated by ``gens``."""
    basis = _IncrementalBasis(size * size)
    elems: list[Mat] = []
    frontier: list[Mat] = []
    for g in gens:
        if basis.add(g.flat()):
            elems.append(g)
            frontier.append(g)
    while frontier:
        new = []
        for a in frontier:
            for g in gens:
                p = g @ a
                if not p.is_zero and basis.add(p.flat()):
                    elems.append(p)
                    new.append(p)
        frontier = new
    return elems


def _trace_product(A: Mat, B: Mat):
    s = 0
    n = A.rows
    for p in range(n):
        Ap = A.data[p]
        for q in range(n):
            a = Ap[q]
            if a:
                b = B.data[q][p]
                if b:
                    s += a * b
    return _norm(s)


def leibniz_nilradical(b: BinaryTable, rad: Optional[Subspace] = None) -> Subspace:
    """Candidate largest nilpotent ideal via the trace form of the multiplication algebra.

    Elements ``x`` of the radical whose left and right multiplications lie in
    the trace-form radical of the associative algebra generated by all such
    multiplications.  The output is checked to be a nilpotent two-sided ideal.
    """
    if rad is None:
        rad = leibniz_radical(b)
    n = b.dim
    if rad.is_zero():
        return rad
    lefts = [b.left_mult(v) for v in rad.basis]
    rights = [b.right_mult(v) for v in rad.basis]
    algebra = _associative_closure(lefts + rights, n)
    rows = []
    for a in algebra:
        rows.append(tuple(_trace_product(L, a) for L in lefts))
        rows.append(tuple(_trace_product(R, a) for R in rights))
    alpha = kernel(Mat(len(rows), rad.dim, tuple(rows)))
    vecs = []
    for coeffs in alpha.basis:
        v = [0] * n
        for c, r in zip(coeffs, rad.basis):
            if c:
                for j, x in enumerate(r):
                    if x:
                        v[j] += c * x
        vecs.append(v)
    nil = span(vecs, n)
    if not is_bracket_ideal(b, nil) or not is_nilpotent_leibniz(b, nil):
        raise UnsupportedInputError("trace-form candidate is not a nilpotent ideal")
    return nil


def nilpotent_radical(t: TripleTable, *, bundle: Optional[RadicalBundle] = None) -> RadicalBundle:
    """``N(T) = Nil(U(T))`` intersected with ``T``, with maximality cross-checks."""
    _require_leibts(t)
    if bundle is None:
        bundle = solvable_radical(t, checked=True)
    u = build_envelope(t, check=False)
    nil_u = leibniz_nilradical(u.bracket, bundle.RadU)
    N = u.t_coords(subspace_intersect(nil_u, u.t_part))
    if not is_ideal(t, N) or not is_nilpotent(t, N):
        raise VerificationError("intersection with T is not a nilpotent ideal")
    for I in ideal_inventory(t):
        if is_nilpotent(t, I) and not I <= N:
            raise UnsupportedInputError("a nilpotent inventory ideal escapes the computed radical")
    if t.dim <= 3:
        for V in envelope_inventory(u.bracket):
            if is_nilpotent_leibniz(u.bracket, V) and not V <= nil_u:
                raise UnsupportedInputError("a nilpotent envelope ideal escapes the computed radical")
    return RadicalBundle(R=bundle.R, KerT=bundle.KerT, RadU=bundle.RadU, N=N, NilU=nil_u)


def radicals(t: TripleTable) -> RadicalBundle:
    return nilpotent_radical(t)


# ---------------------------------------------------------------------------
# Levi decomposition


def check_levi(t: TripleTable, S: Subspace) -> ValidationReport:
    """Verify ``T = S (+) R(T)`` with ``S`` a semisimple Lie triple subsystem."""
    _require_leibts(t)
    if S.ambient_dim != t.dim:
        raise InputError("subspace does not live in T")
    R = solvable_radical(t, checked=True).R
    rb = ReportBuilder()
    sub = is_subsystem(t, S)
    rb.expect("subsystem", sub)
    rb.expect("trivial-intersection", subspace_intersect(S, R).is_zero())
    rb.expect("spanning", (S + R).is_full())
    if sub:
        s_table = restrict_system(t, S)
        lts = check_lie_triple(s_table)
        rb.expect("lie-triple", lts.passed)
        if lts.passed:
            rb.expect("semisimple", solvable_radical(s_table, checked=True).R.is_zero())
    return rb.build()


# ---------------------------------------------------------------------------
# Theorem suite


def _tensor_span(u, A: Subspace, B: Subspace) -> Subspace:
    return span([u.tensor(a, b) for a in A.basis for b in B.basis], u.dim)


def run_theorem_suite(t: TripleTable, *, depth: int = 4,
                      include_nilradical: bool = True) -> ValidationReport:
    """Instantiate the solvability, nilpotency and radical theorems on the ideal inventory."""
    _require_leibts(t)
    u = build_envelope(t, check=False)
    B = u.bracket
    n = t.dim
    T = full(n)
    inv = ideal_inventory(t)
    rb = ReportBuilder()
    rb.note(f"inventory size {len(inv)}")

    solv = [is_solvable(t, I) for I in inv]
    nilp = [is_nilpotent(t, I) for I in inv]
    dser = [derived_series(t, I) for I in inv]
    lser = [lower_central_series(t, I) for I in inv]

    for p, I in enumerate(inv):
        bi, bj = big_I(t, I), big_J(t, I)
        rb.add(verify_ideal_operators(t, I))
        for V in (bi, bj):
            _, _, rep = theta_invariant_split(u, V)
            rb.add(rep)
        # solvability transfers to and from the envelope
        si, sj = is_solvable_leibniz(B, bi), is_solvable_leibniz(B, bj)
        rb.expect("solvable-equivalence", solv[p] == si == sj, (p,))
        bi_der = leibniz_derived_series(B, bi)
        for k in range(1, depth + 1):
            Ik = dser[p].term(k)
            rb.expect("derived-upper", bi_der.term(2 * k) <= u.embed_t(Ik) + _tensor_span(u, Ik, T),
                      (p, k))
            rb.expect("derived-lower", u.embed_t(Ik) <= bi_der.term(k), (p, k))
        # nilpotency transfers
        bi_low = leibniz_lower_series(B, bi)
        rb.expect("nilpotent-equivalence", nilp[p] == bi_low.reaches_zero, (p,))
        for k in range(1, depth + 1):
            Ik, Ik1 = lser[p].term(k), lser[p].term(k - 1)
            rb.expect("lower-in-envelope", u.embed_t(Ik) <= bi_low.term(k), (p, k))
            rb.expect("envelope-odd-term",
                      bi_low.term(2 * k - 1) <= (u.embed_t(Ik) + _tensor_span(u, Ik1, I)
                                                 + _tensor_span(u, Ik, T)), (p, k))
            rb.expect("envelope-even-term",
                      bi_low.term(2 * k) <= u.embed_t(Ik) + _tensor_span(u, Ik, T), (p, k))
            rb.expect("derived-in-lower", dser[p].term(k) <= lser[p].term(k), (p, k))
        # intersections of envelope ideals with T
        for V in (bi, bj):
            VT = u.t_coords(subspace_intersect(V, u.t_part))
            rb.expect("intersection-ideal", is_ideal(t, VT), (p,))
            vt_low = lower_central_series(t, VT)
            v_low = leibniz_lower_series(B, V)
            for k in range(depth + 1):
                rb.expect("intersection-lower",
                          u.embed_t(vt_low.term(k)) <= subspace_intersect(v_low.term(k), u.t_part),
                          (p, k))
        if nilp[p]:
            rb.expect("nilpotent-implies-solvable", solv[p], (p,))

    for p, q in combinations(range(len(inv)), 2):
        I, J = inv[p], inv[q]
        S = I + J
        if solv[p] and solv[q]:
            rb.expect("solvable-sum", is_ideal(t, S) and is_solvable(t, S), (p, q))
        if nilp[p] and nilp[q]:
            rb.expect("nilpotent-sum", is_ideal(t, S) and is_nilpotent(t, S), (p, q))
        s_low = lower_central_series(t, S)
        for k in range(1, depth + 1):
            bound = lser[p].term(k) + lser[q].term(k)
            for j in range(k):
                bound = bound + subspace_intersect(lser[p].term(j), lser[q].term(k - 1 - j))
            rb.expect("sum-lower", s_low.term(k) <= bound, (p, q, k))

    # whole-system statements
    t_solv = is_solvable(t)
    t_nil = is_nilpotent(t)
    rb.expect("solvable-whole", t_solv == is_solvable_leibniz(B))
    rb.expect("nilpotent-whole", t_nil == is_nilpotent_leibniz(B))
    # on the whole system the six-term series collapses to {T^(n) T T}
    simple, six = simplified_lower(t), lower_central_series(t)
    for k in range(max(depth, 6) + 1):
        rb.expect("simplified-lower", simple.term(k) == six.term(k), (k,))
    if t_nil:
        rb.expect("nilpotent-whole-solvable", t_solv)
    if t_solv:
        T1 = triple_span(t, T, T, T)
        rb.expect("first-term-nilpotent", is_nilpotent(t, T1))

    bundle = solvable_radical(t, checked=True)
    R, ker, rad_u = bundle.R, bundle.KerT, bundle.RadU
    K = envelope_K(u)
    rb.expect("radical-intersection", R == u.t_coords(subspace_intersect(rad_u, u.t_part)))
    rb.expect("radical-J", rad_u == big_J(t, R))
    rb.expect("radical-I-plus-K", rad_u == big_I(t, R) + K)
    rb.expect("K-is-J0", K == big_J(t, span([], n)))
    for p, I in enumerate(inv):
        if solv[p]:
            rb.expect("radical-maximal", I <= R, (p,))

    ker_u = _leibniz_kernel(B)
    rb.expect("kernel-intersection", u.t_coords(subspace_intersect(ker_u, u.t_part)) == ker)
    rb.expect("kernel-sandwich", big_I(t, ker) <= ker_u <= big_J(t, ker))

    t_semi = is_semisimple(t)
    u_semi = rad_u == ker_u
    if u_semi:
        rb.expect("semisimple-down", t_semi)
    if t_semi and K.is_zero():
        rb.expect("semisimple-up", u_semi)
    rb.note(f"semisimple={t_semi} envelope-semisimple={u_semi} K-dim={K.dim}")

    if include_nilradical:
        nb = nilpotent_radical(t, bundle=bundle)
        rb.expect("nilradical-intersection",
                  nb.N == u.t_coords(subspace_intersect(nb.NilU, u.t_part)))
        rb.expect("nilradical-in-radical", nb.N <= R)
        for p, I in enumerate(inv):
            if nilp[p]:
                rb.expect("nilradical-maximal", I <= nb.N, (p,))
        if t_solv:
            rb.expect("first-term-in-nilradical", triple_span(t, T, T, T) <= nb.N)
    return rb.build()
