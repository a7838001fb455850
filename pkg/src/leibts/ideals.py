"""Ideals of a triple system and their companions inside the envelope.

For an ideal ``I`` of ``T``:

* ``small_i(I) = I (x) T + T (x) I``
* ``small_j(I)`` = elements ``u`` of ``T (x) T`` with ``[u, T] + [T, u]`` inside ``I``
* ``big_I(I) = I + small_i(I)`` and ``big_J(I) = I + small_j(I)``

All four are returned as subspaces of ``U(T)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct
from typing import Iterable, Sequence

from .algebra import (
    BinaryTable,
    ReportBuilder,
    TripleTable,
    ValidationReport,
    bracket_span,
    full,
    triple_span,
)
from .envelope import Envelope, build_envelope, theta
from .errors import InputError, PreconditionError
from .linalg import Mat, Subspace, image, kernel, span, subspace_intersect, vector


def is_subsystem(t: TripleTable, S: Subspace) -> bool:
    return triple_span(t, S, S, S) <= S


def is_ideal(t: TripleTable, I: Subspace) -> bool:
    T = full(t.dim)
    return (triple_span(t, I, T, T) <= I and triple_span(t, T, I, T) <= I
            and triple_span(t, T, T, I) <= I)


def is_bracket_ideal(b: BinaryTable, V: Subspace, within: Subspace | None = None) -> bool:
    """Two-sided ideal test of ``V`` inside the subalgebra ``within`` (default: all)."""
    W = full(b.dim) if within is None else within
    return bracket_span(b, V, W) <= V and bracket_span(b, W, V) <= V


def ideal_closure(t: TripleTable, gens: Iterable[Sequence]) -> Subspace:
    """Smallest ideal containing ``gens``."""
    T = full(t.dim)
    X = span(list(gens), t.dim)
    while True:
        nxt = X + triple_span(t, X, T, T) + triple_span(t, T, X, T) + triple_span(t, T, T, X)
        if nxt == X:
            return X
        X = nxt


@dataclass(frozen=True)
class IdealWitness:
    generators: tuple
    closure: Subspace
    is_subsystem: bool
    is_ideal: bool


def ideal_witness(t: TripleTable, gens: Iterable[Sequence]) -> IdealWitness:
    gens = tuple(vector(g) for g in gens)
    S = span(gens, t.dim)
    return IdealWitness(gens, ideal_closure(t, gens), is_subsystem(t, S), is_ideal(t, S))


def _require_ideal(t: TripleTable, I: Subspace) -> None:
    if I.ambient_dim != t.dim:
        raise InputError("subspace does not live in T")
    if not is_ideal(t, I):
        raise PreconditionError("subspace is not an ideal")


def small_i(t: TripleTable, I: Subspace) -> Subspace:
    _require_ideal(t, I)
    u = build_envelope(t)
    vecs = []
    n = t.dim
    for v in I.basis:
        for k in range(n):
            e = [0] * n
            e[k] = 1
            vecs.append(u.tensor(v, e))
            vecs.append(u.tensor(e, v))
    return span(vecs, u.dim)


def small_j(t: TripleTable, I: Subspace) -> Subspace:
    """Kernel of ``u -> ([u, e_k] mod I, [e_k, u] mod I)_k`` on the pair part."""
    _require_ideal(t, I)
    u = build_envelope(t)
    n = t.dim
    comp = I.complement_indices()
    B = u.bracket
    pair_slots = list(range(n, u.dim))
    rows = []
    for k in range(n):
        right = [I.reduce(B.bracket_basis(s, k)[:n]) for s in pair_slots]
        left = [I.reduce(B.bracket_basis(k, s)[:n]) for s in pair_slots]
        for c in comp:
            rows.append(tuple(v[c] for v in right))
            rows.append(tuple(v[c] for v in left))
    if not rows:
        return u.pair_part
    sol = kernel(Mat(len(rows), u.dim - n, tuple(rows)))
    return u.from_pair_coords(sol)


def big_I(t: TripleTable, I: Subspace) -> Subspace:
    return build_envelope(t).embed_t(I) + small_i(t, I)


def big_J(t: TripleTable, I: Subspace) -> Subspace:
    return build_envelope(t).embed_t(I) + small_j(t, I)


def verify_ideal_operators(t: TripleTable, I: Subspace) -> ValidationReport:
    """Inclusions and ideal properties of the four companion subspaces."""
    _require_ideal(t, I)
    u = build_envelope(t)
    si, sj, bi, bj = small_i(t, I), small_j(t, I), big_I(t, I), big_J(t, I)
    rb = ReportBuilder()
    rb.expect("i-in-j", si <= sj)
    rb.expect("I-in-J", bi <= bj)
    rb.expect("i-ideal-of-pairs", is_bracket_ideal(u.bracket, si, u.pair_part))
    rb.expect("j-ideal-of-pairs", is_bracket_ideal(u.bracket, sj, u.pair_part))
    rb.expect("I-ideal", is_bracket_ideal(u.bracket, bi))
    rb.expect("J-ideal", is_bracket_ideal(u.bracket, bj))
    return rb.build()


def is_theta_invariant(u: Envelope, V: Subspace) -> bool:
    return image(theta(u), V) == V


def is_graded(u: Envelope, V: Subspace) -> bool:
    return V == subspace_intersect(V, u.t_part) + subspace_intersect(V, u.pair_part)


def theta_invariant_split(u: Envelope, V: Subspace) -> tuple[Subspace, Subspace, ValidationReport]:
    """Split an involution-stable ideal ``V`` of ``U(T)`` into ``I`` (in ``T``) and ``M``.

    ``I`` is returned in the coordinates of ``T``; ``M`` as a subspace of ``U(T)``.
    """
    if V.ambient_dim != u.dim:
        raise InputError("subspace does not live in U(T)")
    if not is_theta_invariant(u, V):
        raise PreconditionError("subspace is not invariant under the involution")
    if not is_bracket_ideal(u.bracket, V):
        raise PreconditionError("subspace is not an ideal of U(T)")
    t = u.base
    I_u = subspace_intersect(V, u.t_part)
    M = subspace_intersect(V, u.pair_part)
    I = u.t_coords(I_u)
    rb = ReportBuilder()
    rb.expect("graded", V == I_u + M)
    ideal = is_ideal(t, I)
    rb.expect("I-ideal", ideal)
    rb.expect("M-ideal-of-pairs", is_bracket_ideal(u.bracket, M, u.pair_part))
    if ideal:
        rb.expect("i-in-M", small_i(t, I) <= M)
        rb.expect("M-in-j", M <= small_j(t, I))
        rb.expect("I-in-V", big_I(t, I) <= V)
        rb.expect("V-in-J", V <= big_J(t, I))
    return I, M, rb.build()


def ideal_inventory(t: TripleTable) -> list[Subspace]:
    """Closures of single basis vectors, their pairwise sums, ``0`` and ``T``.

    Deduplicated and sorted by dimension, then by basis.
    """
    n = t.dim
    singles = []
    for i in range(n):
        e = [0] * n
        e[i] = 1
        singles.append(ideal_closure(t, [e]))
    found = {span([], n), full(n)}
    found.update(singles)
    for a, b in iproduct(range(n), repeat=2):
        if a < b:
            found.add(singles[a] + singles[b])
    return sorted(found, key=lambda s: (s.dim, s.basis))


def envelope_inventory(b: BinaryTable) -> list[Subspace]:
    """The same inventory for two-sided ideals of a Leibniz algebra."""
    n = b.dim
    U = full(n)

    def closure(vecs):
        X = span(vecs, n)
        while True:
            nxt = X + bracket_span(b, X, U) + bracket_span(b, U, X)
            if nxt == X:
                return X
            X = nxt

    singles = []
    for i in range(n):
        e = [0] * n
        e[i] = 1
        singles.append(closure([e]))
    found = {span([], n), U}
    found.update(singles)
    for a, c in iproduct(range(n), repeat=2):
        if a < c:
            found.add(singles[a] + singles[c])
    return sorted(found, key=lambda s: (s.dim, s.basis))
