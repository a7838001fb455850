"""Brute-force reference implementations.

Nothing here imports the package's linear algebra or checkers.  Systems are
handed over as plain dictionaries ``{(i, j, k): [coefficients]}`` and every
computation is dense Fraction arithmetic, written for clarity rather than speed.
"""

from fractions import Fraction
from itertools import product


def dense_products(t):
    """Plain dict view of a TripleTable: every basis triple to a dense list."""
    n = t.dim
    return n, {key: [Fraction(x) for x in t.product_basis(*key)]
               for key in product(range(n), repeat=3)}


def dense_brackets(b):
    n = b.dim
    return n, {key: [Fraction(x) for x in b.bracket_basis(*key)]
               for key in product(range(n), repeat=2)}


def _support(v):
    return [(i, x) for i, x in enumerate(v) if x]


def tri(P, n, a, b, c):
    out = [Fraction(0)] * n
    for (i, x), (j, y), (k, z) in product(_support(a), _support(b), _support(c)):
        w = x * y * z
        for s, v in enumerate(P[(i, j, k)]):
            out[s] += w * v
    return out


def bra(B, n, a, b):
    out = [Fraction(0)] * n
    for (i, x), (j, y) in product(_support(a), _support(b)):
        w = x * y
        for s, v in enumerate(B[(i, j)]):
            out[s] += w * v
    return out


def unit(n, i):
    return [Fraction(int(k == i)) for k in range(n)]


def lin(*terms):
    """``lin((1, u), (-1, v))`` is ``u - v``."""
    n = len(terms[0][1])
    return [sum(c * v[s] for c, v in terms) for s in range(n)]


def leibts_violations(t):
    """Number of basis five-tuples at which either defining identity fails."""
    n, P = dense_products(t)
    e = [unit(n, i) for i in range(n)]
    p = lambda a, b, c: tri(P, n, a, b, c)
    bad = 0
    for a, b, c, d, x in product(e, repeat=5):
        lhs1 = p(a, p(b, c, d), x)
        rhs1 = lin((1, p(p(a, b, c), d, x)), (-1, p(p(a, c, b), d, x)),
                   (-1, p(p(a, d, b), c, x)), (1, p(p(a, d, c), b, x)))
        lhs2 = p(a, b, p(c, d, x))
        rhs2 = lin((1, p(p(a, b, c), d, x)), (-1, p(p(a, b, d), c, x)),
                   (-1, p(p(a, b, x), c, d)), (1, p(p(a, b, x), d, c)))
        bad += (lhs1 != rhs1) + (lhs2 != rhs2)
    return bad


def leibniz_violations(b):
    """Right Leibniz identity ``[[x,y],z] = [[x,z],y] + [x,[y,z]]`` on basis triples."""
    n, B = dense_brackets(b)
    e = [unit(n, i) for i in range(n)]
    br = lambda u, v: bra(B, n, u, v)
    return sum(br(br(x, y), z) != lin((1, br(br(x, z), y)), (1, br(x, br(y, z))))
               for x, y, z in product(e, repeat=3))


# ---------------------------------------------------------------------------
# subspaces as lists of rows


def echelon(rows):
    """Nonzero rows of the reduced echelon form of ``rows``."""
    m = [list(map(Fraction, r)) for r in rows]
    if not m:
        return []
    r, cols = 0, len(m[0])
    for c in range(cols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        m[r] = [x / m[r][c] for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        r += 1
    return m[:r]


def rank(rows):
    return len(echelon(rows))


def same_span(A, B):
    return rank(A) == rank(B) == rank(list(A) + list(B))


def inside(A, B):
    return rank(list(B)) == rank(list(A) + list(B))


def products_of(t, A, B, C):
    n, P = dense_products(t)
    return [tri(P, n, a, b, c) for a, b, c in product(A, B, C)]


def ideal_closure(t, gens):
    n = t.dim
    T = [unit(n, i) for i in range(n)]
    X = echelon(gens)
    while True:
        new = echelon(X + products_of(t, X, T, T) + products_of(t, T, X, T) + products_of(t, T, T, X))
        if len(new) == len(X):
            return new
        X = new


def inventory(t):
    """``0``, ``T``, closures of basis vectors and their pairwise sums."""
    n = t.dim
    singles = [ideal_closure(t, [unit(n, i)]) for i in range(n)]
    found = [[], [unit(n, i) for i in range(n)]] + singles
    found += [echelon(a + b) for i, a in enumerate(singles) for b in singles[i + 1:]]
    out = []
    for S in found:
        if not any(same_span(S, R) for R in out):
            out.append(S)
    return out


def derived_reaches_zero(t, I, steps=12):
    n = t.dim
    T = [unit(n, i) for i in range(n)]
    X = echelon(I)
    for _ in range(steps):
        if not X:
            return True
        X = echelon(products_of(t, T, X, X) + products_of(t, X, T, X) + products_of(t, X, X, T))
    return not X


def lower_reaches_zero(t, I, steps=12):
    n = t.dim
    T = [unit(n, i) for i in range(n)]
    X = echelon(I)
    for _ in range(steps):
        if not X:
            return True
        X = echelon(products_of(t, X, I, T) + products_of(t, X, T, I) + products_of(t, I, X, T)
                    + products_of(t, I, T, X) + products_of(t, T, I, X) + products_of(t, T, X, I))
    return not X


def solvable_radical(t):
    """Sum of the solvable ideals in the inventory."""
    return echelon([v for I in inventory(t) if derived_reaches_zero(t, I) for v in I])


def nilpotent_radical(t):
    return echelon([v for I in inventory(t) if lower_reaches_zero(t, I) for v in I])


def ker(t):
    """Span of ``{abc} - {acb} + {bca}`` over basis triples."""
    n, P = dense_products(t)
    e = [unit(n, i) for i in range(n)]
    return echelon([lin((1, tri(P, n, a, b, c)), (-1, tri(P, n, a, c, b)), (1, tri(P, n, b, c, a)))
                    for a, b, c in product(e, repeat=3)])
