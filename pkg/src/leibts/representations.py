"""Representations ``(l, m, r)`` of a Leibniz triple system on a vector space ``V``.

Operators are ``d x d`` matrices stored per basis pair.  Matching a module
``T + V``: ``l(a, b) v = {abv}``, ``m(a, b) v = {avb}``, ``r(a, b) v = {vab}``.
A product of operators such as ``m(a, d) l(b, c)`` is the matrix product, so
the right factor acts first.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct
from typing import Mapping, Optional, Sequence

from .algebra import (
    ReportBuilder,
    TripleTable,
    ValidationReport,
    check_leibts,
    check_lie_triple,
    quotient_system,
)
from .errors import InputError, PreconditionError, VerificationError
from .ideals import is_ideal
from .linalg import (
    Mat,
    Subspace,
    commutator,
    coordinate_subspace,
    is_nilpotent_operator,
    kernel,
    span,
    subspace_intersect,
    zero_subspace,
)

FAMILIES = ("l", "m", "r")


def _grid(n: int, d: int, data: Mapping | None) -> tuple:
    zero = Mat.zeros(d, d)
    grid = [[zero] * n for _ in range(n)]
    for key, mat in (data or {}).items():
        i, j = key
        if not (0 <= i < n and 0 <= j < n):
            raise InputError(f"pair {key} out of range")
        mat = mat if isinstance(mat, Mat) else Mat.from_rows(mat)
        if mat.shape != (d, d):
            raise InputError(f"operator at {key} has shape {mat.shape}, expected {(d, d)}")
        grid[i][j] = mat
    return tuple(tuple(row) for row in grid)


def _lin(grid, n: int, d: int, x: Sequence, y: Sequence) -> Mat:
    """Bilinear extension of a per-basis-pair operator family."""
    acc = Mat.zeros(d, d)
    for i, xi in enumerate(x):
        if xi:
            for j, yj in enumerate(y):
                if yj:
                    acc = acc + grid[i][j].scale(xi * yj)
    return acc


@dataclass(frozen=True)
class RepTriple:
    base: TripleTable
    vdim: int
    vnames: tuple
    l: tuple
    m: tuple
    r: tuple

    @classmethod
    def build(cls, base: TripleTable, vdim: int | Sequence[str], l: Mapping | None = None,
              m: Mapping | None = None, r: Mapping | None = None) -> "RepTriple":
        """``l``, ``m``, ``r`` map basis pairs ``(i, j)`` to ``d x d`` matrices; absent pairs are zero."""
        if isinstance(vdim, int):
            vnames = tuple(f"v{k + 1}" for k in range(vdim))
        else:
            vnames = tuple(vdim)
        if len(set(vnames)) != len(vnames):
            raise InputError("module basis labels must be distinct")
        d, n = len(vnames), base.dim
        return cls(base, d, vnames, _grid(n, d, l), _grid(n, d, m), _grid(n, d, r))

    @property
    def n(self) -> int:
        return self.base.dim

    def family(self, name: str) -> tuple:
        return {"l": self.l, "m": self.m, "r": self.r}[name]

    def op(self, name: str, x: Sequence, y: Sequence) -> Mat:
        return _lin(self.family(name), self.n, self.vdim, x, y)

    def R(self, i: int, j: int) -> Mat:
        """``R(e_i, e_j) = r(e_i, e_j) - r(e_j, e_i)``."""
        return self.r[i][j] - self.r[j][i]

    def operators(self) -> list[Mat]:
        return [g[i][j] for g in (self.l, self.m, self.r)
                for i in range(self.n) for j in range(self.n)]

    def is_zero(self) -> bool:
        return all(op.is_zero for op in self.operators())


@dataclass(frozen=True)
class SplitExtensionTable:
    """A triple system on ``T + V``: the first ``n`` basis vectors span ``T``."""

    table: TripleTable
    n: int

    @property
    def vdim(self) -> int:
        return self.table.dim - self.n

    def check_clauses(self) -> ValidationReport:
        """``T`` is a subsystem, one ``V`` argument lands in ``V``, two or more give zero."""
        rb = ReportBuilder()
        n, N = self.n, self.table.dim
        for key in iproduct(range(N), repeat=3):
            val = self.table.product_basis(*key)
            inV = sum(1 for k in key if k >= n)
            if inV == 0:
                rb.expect("T-subsystem", not any(val[n:]), key, val)
            elif inV == 1:
                rb.expect("V-valued", not any(val[:n]), key, val)
            else:
                rb.expect("V-square-zero", not any(val), key, val)
        return rb.build()

    @property
    def base(self) -> TripleTable:
        n = self.n
        products = {}
        for i, j, k in iproduct(range(n), repeat=3):
            val = self.table.product_basis(i, j, k)[:n]
            if any(val):
                products[(i, j, k)] = val
        return TripleTable.from_products(self.table.names[:n], products)


@dataclass(frozen=True)
class LtsDeltaPair:
    """A Lie triple system with ``delta(a, b)`` acting on ``V``; ``D(a, b) = delta(b, a) - delta(a, b)``."""

    base: TripleTable
    vdim: int
    delta: tuple

    @classmethod
    def build(cls, base: TripleTable, vdim: int, delta: Mapping | None = None) -> "LtsDeltaPair":
        return cls(base, vdim, _grid(base.dim, vdim, delta))

    def D(self, i: int, j: int) -> Mat:
        return self.delta[j][i] - self.delta[i][j]


@dataclass(frozen=True)
class CompositionWitness:
    """Descending chain ``V = V_0 > V_1 > ... > V_k = 0`` of submodules."""

    chain: tuple

    @property
    def length(self) -> int:
        return len(self.chain) - 1


# ---------------------------------------------------------------------------
# The ten identities


class _Ops:
    """Memoized operators of a representation, including those at product arguments."""

    def __init__(self, rep: RepTriple):
        self.rep = rep
        self.n = rep.n
        self.d = rep.vdim
        self._at: dict = {}
        self._prod: dict = {}

    def __call__(self, fam: str, i: int, j: int) -> Mat:
        return self.rep.family(fam)[i][j]

    def P(self, i: int, j: int, k: int) -> tuple:
        key = (i, j, k)
        if key not in self._prod:
            self._prod[key] = self.rep.base.product_basis(i, j, k)
        return self._prod[key]

    def first(self, fam: str, triple: tuple, d: int) -> Mat:
        """Family operator at ``({triple}, e_d)``."""
        key = (fam, 0, triple, d)
        if key not in self._at:
            g = self.rep.family(fam)
            acc = Mat.zeros(self.d, self.d)
            for i, x in enumerate(self.P(*triple)):
                if x:
                    acc = acc + g[i][d].scale(x)
            self._at[key] = acc
        return self._at[key]

    def second(self, fam: str, a: int, triple: tuple) -> Mat:
        """Family operator at ``(e_a, {triple})``."""
        key = (fam, 1, a, triple)
        if key not in self._at:
            g = self.rep.family(fam)
            acc = Mat.zeros(self.d, self.d)
            for j, x in enumerate(self.P(*triple)):
                if x:
                    acc = acc + g[a][j].scale(x)
            self._at[key] = acc
        return self._at[key]


def _identities(o: _Ops, a: int, b: int, c: int, d: int):
    """The ten defining identities at one basis quadruple, as ``(id, lhs, rhs)``."""
    l = lambda i, j: o("l", i, j)  # noqa: E731
    m = lambda i, j: o("m", i, j)  # noqa: E731
    r = lambda i, j: o("r", i, j)  # noqa: E731
    F, S = o.first, o.second
    yield ("l-second-product", S("l", a, (b, c, d)),
           F("l", (a, b, c), d) - F("l", (a, c, b), d) - F("l", (a, d, b), c) + F("l", (a, d, c), b))
    yield ("m-times-l", m(a, d) @ l(b, c),
           F("m", (a, b, c), d) - F("m", (a, c, b), d) - r(c, d) @ m(a, b) + r(b, d) @ m(a, c))
    yield ("m-times-m", m(a, d) @ m(b, c),
           r(c, d) @ l(a, b) - r(c, d) @ m(a, b) - F("m", (a, c, b), d) + r(b, d) @ l(a, c))
    yield ("m-times-r", m(a, d) @ r(b, c),
           r(c, d) @ m(a, b) - r(c, d) @ l(a, b) - r(b, d) @ l(a, c) + F("m", (a, c, b), d))
    yield ("r-first-product", F("r", (a, b, c), d),
           r(c, d) @ r(a, b) - r(c, d) @ r(b, a) - r(b, d) @ r(c, a) + r(a, d) @ r(c, b))
    yield ("l-times-l", l(a, b) @ l(c, d),
           F("l", (a, b, c), d) - F("l", (a, b, d), c) - r(c, d) @ l(a, b) + r(d, c) @ l(a, b))
    yield ("l-times-m", l(a, b) @ m(c, d),
           F("m", (a, b, c), d) - r(c, d) @ l(a, b) - F("l", (a, b, d), c) + F("m", (a, b, d), c))
    yield ("l-times-r", l(a, b) @ r(c, d),
           r(c, d) @ l(a, b) - F("m", (a, b, c), d) - F("m", (a, b, d), c) + F("l", (a, b, d), c))
    yield ("m-second-product", S("m", a, (b, c, d)),
           r(c, d) @ m(a, b) - r(b, d) @ m(a, c) - r(b, c) @ m(a, d) + r(c, b) @ m(a, d))
    yield ("r-second-product", S("r", a, (b, c, d)),
           r(c, d) @ r(a, b) - r(b, d) @ r(a, c) - r(b, c) @ r(a, d) + r(c, b) @ r(a, d))


IDENTITY_NAMES = (
    "l-second-product", "m-times-l", "m-times-m", "m-times-r", "r-first-product",
    "l-times-l", "l-times-m", "l-times-r", "m-second-product", "r-second-product",
)


def check_representation(rep: RepTriple) -> ValidationReport:
    """All ten identities on every basis quadruple, as matrix equations."""
    o = _Ops(rep)
    rb = ReportBuilder()
    for a, b, c, d in iproduct(range(rep.n), repeat=4):
        for name, lhs, rhs in _identities(o, a, b, c, d):
            rb.expect_equal(name, (a, b, c, d), lhs.flat(), rhs.flat())
    return rb.build()


def _require_rep(rep: RepTriple) -> None:
    if not check_representation(rep).passed:
        raise PreconditionError("data is not a representation")


# ---------------------------------------------------------------------------
# Modules and representations


def rep_to_module(rep: RepTriple) -> SplitExtensionTable:
    """The split extension ``T + V`` with ``{abv} = l(a,b)v``, ``{avb} = m(a,b)v``, ``{vab} = r(a,b)v``."""
    _require_rep(rep)
    return _split(rep)


def _split(rep: RepTriple) -> SplitExtensionTable:
    n, d = rep.n, rep.vdim
    names = tuple(rep.base.names) + tuple(rep.vnames)
    if len(set(names)) != len(names):
        raise InputError("module labels clash with system labels")
    products = {}
    for (i, j, k), vec in rep.base.entries:
        products[(i, j, k)] = tuple(vec) + (0,) * d
    for a, b in iproduct(range(n), repeat=2):
        for fam, slot in (("l", 2), ("m", 1), ("r", 0)):
            op = rep.family(fam)[a][b]
            if op.is_zero:
                continue
            for v in range(d):
                col = op.column(v)
                if any(col):
                    key = {2: (a, b, n + v), 1: (a, n + v, b), 0: (n + v, a, b)}[slot]
                    products[key] = (0,) * n + tuple(col)
    return SplitExtensionTable(TripleTable.from_products(names, products), n)


def module_to_rep(s: SplitExtensionTable) -> RepTriple:
    if not s.check_clauses().passed:
        raise PreconditionError("table is not a split extension")
    if not check_leibts(s.table).passed:
        raise PreconditionError("split extension is not a Leibniz triple system")
    n, d = s.n, s.vdim
    t = s.table
    grids = {}
    for fam in FAMILIES:
        data = {}
        for a, b in iproduct(range(n), repeat=2):
            cols = []
            for v in range(d):
                key = {"l": (a, b, n + v), "m": (a, n + v, b), "r": (n + v, a, b)}[fam]
                cols.append(t.product_basis(*key)[n:])
            M = Mat.from_columns(cols, d)
            if not M.is_zero:
                data[(a, b)] = M
        grids[fam] = data
    return RepTriple.build(s.base, t.names[n:], grids["l"], grids["m"], grids["r"])


def regular_rep(t: TripleTable) -> RepTriple:
    """``V = T`` with the operators read off from the product."""
    n = t.dim
    grids = {fam: {} for fam in FAMILIES}
    for a, b in iproduct(range(n), repeat=2):
        for fam in FAMILIES:
            cols = []
            for v in range(n):
                key = {"l": (a, b, v), "m": (a, v, b), "r": (v, a, b)}[fam]
                cols.append(t.product_basis(*key))
            M = Mat.from_columns(cols, n)
            if not M.is_zero:
                grids[fam][(a, b)] = M
    vnames = tuple(f"{x}'" for x in t.names)
    return RepTriple.build(t, vnames, grids["l"], grids["m"], grids["r"])


def zero_rep(t: TripleTable, vdim: int) -> RepTriple:
    return RepTriple.build(t, vdim)


# ---------------------------------------------------------------------------
# Lie triple system modules


def _lts_split(p: LtsDeltaPair) -> TripleTable:
    """``[v a b] = delta(a,b) v``, ``[a v b] = -delta(a,b) v``, ``[a b v] = D(a,b) v``."""
    n, d = p.base.dim, p.vdim
    names = tuple(p.base.names) + tuple(f"v{k + 1}" for k in range(d))
    if len(set(names)) != len(names):
        names = tuple(f"t{k + 1}" for k in range(n)) + names[n:]
    products = {}
    for (i, j, k), vec in p.base.entries:
        products[(i, j, k)] = tuple(vec) + (0,) * d
    for a, b in iproduct(range(n), repeat=2):
        dl, Dab = p.delta[a][b], p.D(a, b)
        for v in range(d):
            for key, col in (((n + v, a, b), dl.column(v)),
                             ((a, n + v, b), tuple(-x for x in dl.column(v))),
                             ((a, b, n + v), Dab.column(v))):
                if any(col):
                    products[key] = (0,) * n + tuple(col)
    return TripleTable.from_products(names, products)


def check_lts_module(p: LtsDeltaPair) -> ValidationReport:
    """Both delta identities on basis quadruples, cross-checked against the split extension."""
    t = p.base
    if not check_lie_triple(t).passed:
        raise PreconditionError("base is not a Lie triple system")
    n, dd = t.dim, p.vdim
    de = p.delta

    def at_first(triple, d):
        acc = Mat.zeros(dd, dd)
        for i, x in enumerate(t.product_basis(*triple)):
            if x:
                acc = acc + de[i][d].scale(x)
        return acc

    def at_second(a, triple):
        acc = Mat.zeros(dd, dd)
        for j, x in enumerate(t.product_basis(*triple)):
            if x:
                acc = acc + de[a][j].scale(x)
        return acc

    rb = ReportBuilder()
    for a, b, c, d in iproduct(range(n), repeat=4):
        first = (de[c][d] @ de[a][b] - de[b][d] @ de[a][c] - at_second(a, (b, c, d))
                 + p.D(b, c) @ de[a][d])
        rb.expect("delta-first", first.is_zero, (a, b, c, d), first.flat())
        second = (de[c][d] @ p.D(a, b) - p.D(a, b) @ de[c][d] + at_first((a, b, c), d)
                  + at_second(c, (a, b, d)))
        rb.expect("delta-second", second.is_zero, (a, b, c, d), second.flat())
    identities_hold = rb.total == 0
    split_ok = check_lie_triple(_lts_split(p)).passed
    rb.expect("split-extension-agrees", identities_hold == split_ok)
    rb.note(f"split extension is a Lie triple system: {split_ok}")
    return rb.build()


def adjoint_delta(t: TripleTable) -> LtsDeltaPair:
    """``delta(a, b) v = [v a b]`` on ``V = T``."""
    n = t.dim
    data = {}
    for a, b in iproduct(range(n), repeat=2):
        M = Mat.from_columns([t.product_basis(v, a, b) for v in range(n)], n)
        if not M.is_zero:
            data[(a, b)] = M
    return LtsDeltaPair.build(t, n, data)


# ---------------------------------------------------------------------------
# Structure of a representation


def power_identities(rep: RepTriple, *, max_power: Optional[int] = None) -> ValidationReport:
    """``m^{k+1} = (-1)^k m r^k`` and ``l^{k+1} = (-1)^k l R^k`` at every basis pair."""
    _require_rep(rep)
    K = 2 * rep.vdim if max_power is None else max_power
    rb = ReportBuilder()
    for a, b in iproduct(range(rep.n), repeat=2):
        m, r, l, R = rep.m[a][b], rep.r[a][b], rep.l[a][b], rep.R(a, b)
        mp, rp, lp, Rp = m, Mat.identity(rep.vdim), l, Mat.identity(rep.vdim)
        for k in range(0, K + 1):
            sign = 1 if k % 2 == 0 else -1
            # mp = m^{k+1}, rp = r^k
            rb.expect_equal("m-power", (a, b, k), mp.flat(), (m @ rp).scale(sign).flat())
            rb.expect_equal("l-power", (a, b, k), lp.flat(), (l @ Rp).scale(sign).flat())
            mp, rp, lp, Rp = mp @ m, rp @ r, lp @ l, Rp @ R
        if is_nilpotent_operator(r):
            rb.expect("r-nilpotent-implies-m", is_nilpotent_operator(m), (a, b))
        if is_nilpotent_operator(R):
            rb.expect("R-nilpotent-implies-l", is_nilpotent_operator(l), (a, b))
    return rb.build()


def R_structure_checks(rep: RepTriple) -> ValidationReport:
    """Commutators of ``R(T, T)`` with itself and with the ``l``, ``m``, ``r`` families."""
    _require_rep(rep)
    o = _Ops(rep)
    n = rep.n

    def R_second(c, triple):
        return o.second("r", c, triple) - o.first("r", triple, c)

    rb = ReportBuilder()
    for a, b, c, dd in iproduct(range(n), repeat=4):
        lhs = commutator(rep.R(a, b), rep.R(c, dd))
        rhs = (R_second(c, (dd, a, b)) - R_second(c, (dd, b, a)) - R_second(dd, (c, a, b))
               + R_second(dd, (c, b, a)))
        rb.expect_equal("R-closed", (a, b, c, dd), lhs.flat(), rhs.flat())
        lhs = commutator(rep.R(c, dd), rep.l[a][b])
        rhs = o.first("l", (a, b, c), dd) - o.first("l", (a, b, dd), c)
        rb.expect_equal("R-on-l", (a, b, c, dd), lhs.flat(), rhs.flat())
        lhs = commutator(rep.R(b, c), rep.m[a][dd])
        rhs = (o.second("m", a, (b, c, dd)).scale(-1) - o.first("m", (a, c, b), dd)
               + o.first("m", (a, b, c), dd))
        rb.expect_equal("R-on-m", (a, b, c, dd), lhs.flat(), rhs.flat())
        lhs = commutator(rep.R(a, b), rep.r[c][dd])
        rhs = o.second("r", c, (a, b, dd)).scale(-1) - o.first("r", (a, b, c), dd)
        rb.expect_equal("R-on-r", (a, b, c, dd), lhs.flat(), rhs.flat())
    return rb.build()


def compute_Z(rep: RepTriple) -> Subspace:
    """``x`` with ``l, m, r`` vanishing whenever ``x`` occupies either argument."""
    _require_rep(rep)
    return _Z(rep)


def _Z(rep: RepTriple) -> Subspace:
    n = rep.n
    rows = []
    for fam in FAMILIES:
        g = rep.family(fam)
        for j in range(n):
            for first in (True, False):
                mats = [g[i][j] if first else g[j][i] for i in range(n)]
                flats = [M.flat() for M in mats]
                for pos in range(rep.vdim * rep.vdim):
                    row = tuple(f[pos] for f in flats)
                    if any(row):
                        rows.append(row)
    if not rows:
        return coordinate_subspace(n, range(n))
    return kernel(Mat(len(rows), n, tuple(rows)))


def Z_from_extension(s: SplitExtensionTable) -> Subspace:
    """``Z_T(V)`` read directly from the products of a split extension."""
    n, N = s.n, s.table.dim
    t = s.table
    rows = []
    for j in range(n):
        for v in range(n, N):
            # {xTV}, {xVT}, {TxV}, {VxT}, {VTx}, {TVx}
            for pattern in ((None, j, v), (None, v, j), (j, None, v), (v, None, j),
                            (v, j, None), (j, v, None)):
                cols = []
                for x in range(n):
                    key = tuple(x if p is None else p for p in pattern)
                    cols.append(t.product_basis(*key))
                for pos in range(N):
                    row = tuple(c[pos] for c in cols)
                    if any(row):
                        rows.append(row)
    if not rows:
        return coordinate_subspace(n, range(n))
    return kernel(Mat(len(rows), n, tuple(rows)))


# ---------------------------------------------------------------------------
# Submodules


def spin(rep: RepTriple, vectors, within: Optional[Subspace] = None) -> Subspace:
    """Smallest submodule containing ``vectors`` (plus ``within``, itself assumed invariant)."""
    ops = [op for op in rep.operators() if not op.is_zero]
    X = span(list(vectors), rep.vdim)
    if within is not None:
        X = X + within
    frontier = list(X.basis)
    while frontier:
        new = []
        for v in frontier:
            for op in ops:
                w = op.apply(v)
                if any(w) and w not in X:
                    X = X + span([w], rep.vdim)
                    new.append(w)
        frontier = new
    return X


def is_submodule(rep: RepTriple, W: Subspace) -> bool:
    return all(op.apply(w) in W for op in rep.operators() for w in W.basis)


def spinning_check(rep: RepTriple) -> bool:
    """Every standard basis vector spins to all of ``V``; necessary for irreducibility only."""
    d = rep.vdim
    if d == 0:
        return False
    return all(spin(rep, [tuple(1 if i == k else 0 for i in range(d))]).is_full() for k in range(d))


def _candidates(rep: RepTriple, lower: Subspace, upper: Subspace) -> list:
    """Vectors of ``upper`` outside ``lower``: kernel vectors first, then basis vectors."""
    out = []
    for op in rep.operators():
        K = subspace_intersect(kernel(op), upper)
        out.extend(v for v in K.basis if v not in lower)
    out.extend(v for v in upper.basis if v not in lower)
    return out


def _minimal_step(rep: RepTriple, lower: Subspace, upper: Subspace) -> Subspace:
    """A submodule strictly between ``lower`` and ``upper`` whose factor spins irreducibly."""
    best = upper
    while True:
        shrunk = False
        for v in _candidates(rep, lower, best):
            S = spin(rep, [v], lower)
            if S.dim < best.dim:
                best, shrunk = S, True
                break
        if not shrunk:
            return best


def composition_series(rep: RepTriple) -> CompositionWitness:
    """Chain ``V = V_0 > ... > 0`` built bottom-up by spinning in a fixed order."""
    d = rep.vdim
    V = coordinate_subspace(d, range(d))
    chain = [zero_subspace(d)]
    while chain[-1] != V:
        chain.append(_minimal_step(rep, chain[-1], V))
    return CompositionWitness(tuple(reversed(chain)))


def check_composition(rep: RepTriple, w: CompositionWitness) -> ValidationReport:
    rb = ReportBuilder()
    ch = w.chain
    rb.expect("starts-at-V", bool(ch) and ch[0].is_full())
    rb.expect("ends-at-zero", bool(ch) and ch[-1].is_zero())
    for k, S in enumerate(ch):
        rb.expect("submodule", is_submodule(rep, S), (k,))
    for k in range(len(ch) - 1):
        upper, lower = ch[k], ch[k + 1]
        rb.expect("descending", lower <= upper and lower != upper, (k,))
        for v in _candidates(rep, lower, upper):
            rb.expect("factor-spins", spin(rep, [v], lower) == upper, (k,))
    return rb.build()


def restrict_rep(rep: RepTriple, W: Subspace) -> RepTriple:
    """The representation on a submodule, in the coordinates of its RREF basis."""
    if not is_submodule(rep, W):
        raise PreconditionError("subspace is not a submodule")

    def restrict(op: Mat) -> Mat:
        return Mat.from_columns([W.coordinates(op.apply(w)) for w in W.basis], W.dim)

    grids = {}
    for fam in FAMILIES:
        g = rep.family(fam)
        grids[fam] = {(i, j): restrict(g[i][j]) for i, j in iproduct(range(rep.n), repeat=2)
                      if not g[i][j].is_zero}
    return RepTriple.build(rep.base, tuple(rep.vnames[p] for p in W.pivots),
                           grids["l"], grids["m"], grids["r"])


# ---------------------------------------------------------------------------
# Dichotomy and Engel vectors


def dichotomy_check(rep: RepTriple, *, irreducible: bool = True) -> ValidationReport:
    """For an irreducible module with ``Z`` an ideal: ``T/Z`` is Lie, and one of two branches holds.

    Branch one: ``l = m = 0``.  Branch two: ``l(x,y) = -l(y,x) = -R(x,y)`` and
    ``r(x,y) = -m(x,y)``.  Irreducibility is the caller's assertion; a failed
    spinning test is reported as a violation.
    """
    if not irreducible:
        raise PreconditionError("the dichotomy needs an irreducible module")
    _require_rep(rep)
    Z = _Z(rep)
    if not is_ideal(rep.base, Z):
        raise PreconditionError("Z_T(V) is not an ideal")
    n = rep.n
    rb = ReportBuilder()
    rb.expect("spinning", spinning_check(rep))
    rb.expect("quotient-lie", check_lie_triple(quotient_system(rep.base, Z)).passed)
    pairs = list(iproduct(range(n), repeat=2))
    branch1 = all(rep.l[i][j].is_zero and rep.m[i][j].is_zero for i, j in pairs)
    branch2 = all(rep.l[i][j] == -rep.l[j][i] and rep.l[i][j] == -rep.R(i, j)
                  and rep.r[i][j] == -rep.m[i][j] for i, j in pairs)
    rb.expect("dichotomy", branch1 or branch2)
    rb.note(f"branch one: {branch1}; branch two: {branch2}; dim Z = {Z.dim}")
    return rb.build()


def _lie_closure(mats: list[Mat], d: int) -> list[Mat]:
    """Spanning set of the Lie algebra generated by ``mats`` under commutators."""
    from .radicals import _IncrementalBasis

    basis = _IncrementalBasis(d * d)
    out = []
    for M in mats:
        if basis.add(M.flat()):
            out.append(M)
    frontier = list(out)
    while frontier:
        new = []
        for A in frontier:
            for B in list(out):
                C = commutator(A, B)
                if not C.is_zero and basis.add(C.flat()):
                    out.append(C)
                    new.append(C)
        frontier = new
    return out


def engel_vector(rep: RepTriple, *, check_z_ideals: bool = True) -> tuple:
    """A nonzero ``v`` with ``R(x, y) v = l(x, y) v = 0`` for all ``x, y``.

    Requires every ``R(e_i, e_j)`` nilpotent.  The hypothesis that ``Z_T(V_0)``
    is an ideal is checked on the submodules of a composition series.
    """
    _require_rep(rep)
    n, d = rep.n, rep.vdim
    if d == 0:
        raise PreconditionError("module is zero")
    pairs = list(iproduct(range(n), repeat=2))
    for i, j in pairs:
        if not is_nilpotent_operator(rep.R(i, j)):
            raise PreconditionError(f"R({rep.base.names[i]}, {rep.base.names[j]}) is not nilpotent")
    if check_z_ideals:
        for W in composition_series(rep).chain[:-1]:
            if not is_ideal(rep.base, _Z(restrict_rep(rep, W))):
                raise PreconditionError("Z_T(V_0) is not an ideal for a constructed submodule")
    ops = _lie_closure([rep.R(i, j) for i, j in pairs], d) + [rep.l[i][j] for i, j in pairs]
    common = coordinate_subspace(d, range(d))
    for op in ops:
        common = subspace_intersect(common, kernel(op))
    if common.is_zero():
        raise PreconditionError("no common annihilated vector: the hypotheses fail")
    v = common.basis[0]
    for i, j in pairs:
        if any(rep.R(i, j).apply(v)) or any(rep.l[i][j].apply(v)):
            raise VerificationError("engel vector is not annihilated")
    return v


__all__ = [
    "CompositionWitness",
    "IDENTITY_NAMES",
    "LtsDeltaPair",
    "RepTriple",
    "R_structure_checks",
    "SplitExtensionTable",
    "Z_from_extension",
    "adjoint_delta",
    "check_composition",
    "check_lts_module",
    "check_representation",
    "composition_series",
    "compute_Z",
    "dichotomy_check",
    "engel_vector",
    "is_submodule",
    "module_to_rep",
    "power_identities",
    "regular_rep",
    "rep_to_module",
    "restrict_rep",
    "spin",
    "spinning_check",
    "zero_rep",
]
