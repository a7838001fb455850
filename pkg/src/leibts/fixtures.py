"""Named triple systems used throughout the tests and demos."""

from __future__ import annotations

from .algebra import BinaryTable, TripleTable, leibts_from_leibniz
from .linalg import Mat
from .representations import RepTriple


def ex1() -> TripleTable:
    """Two dimensions, ``{xyy} = {yyy} = x``."""
    return TripleTable.from_products(["x", "y"], {(0, 1, 1): {0: 1}, (1, 1, 1): {0: 1}})


def ex2() -> TripleTable:
    """Three dimensions, ``{xzz} = {yzz} = {zzz} = x``."""
    return TripleTable.from_products(
        ["x", "y", "z"], {(0, 2, 2): {0: 1}, (1, 2, 2): {0: 1}, (2, 2, 2): {0: 1}})


def ex3() -> TripleTable:
    """Five dimensions on ``x, a, b, c, d``."""
    x, a, b, c, d = range(5)
    return TripleTable.from_products(["x", "a", "b", "c", "d"], {
        (a, x, x): {a: 1},
        (x, a, x): {a: -1},
        (b, a, x): {c: 1},
        (c, x, x): {c: 1},
        (a, b, x): {d: 1},
        (x, a, b): {d: 1},
        (a, x, b): {d: 1},
        (x, c, x): {d: 1},
        (x, d, x): {d: 1},
        (d, x, x): {d: 1},
    })


def ex3fix() -> TripleTable:
    """EX3 with ``{xab} = {xdx} = -d``.

    The published constants fail the identities.  Among all tables with the same
    ten supports and coefficients in ``{-1, 0, 1}``, this is the only one that
    differs from the published signs in two places, and none differs in one.
    """
    x, a, b, c, d = range(5)
    return TripleTable.from_products(["x", "a", "b", "c", "d"], {
        (a, x, x): {a: 1},
        (x, a, x): {a: -1},
        (b, a, x): {c: 1},
        (c, x, x): {c: 1},
        (a, b, x): {d: 1},
        (x, a, b): {d: -1},
        (a, x, b): {d: 1},
        (x, c, x): {d: 1},
        (x, d, x): {d: -1},
        (d, x, x): {d: 1},
    })


def z1() -> TripleTable:
    """One dimension, zero product."""
    return TripleTable.from_products(["z"], {})


def sl2() -> BinaryTable:
    h, e, f = range(3)
    return BinaryTable.from_brackets(["h", "e", "f"], {
        (h, e): {e: 2}, (e, h): {e: -2},
        (h, f): {f: -2}, (f, h): {f: 2},
        (e, f): {h: 1}, (f, e): {h: -1},
    })


def sl2_lts() -> TripleTable:
    """``{abc} = [[a, b], c]`` on sl2, a semisimple Lie triple system."""
    return leibts_from_leibniz(sl2())


def nil2() -> BinaryTable:
    """Two-dimensional nilpotent Leibniz algebra, ``[y, y] = x``; not Lie."""
    return BinaryTable.from_brackets(["x", "y"], {(1, 1): {0: 1}})


def cyclic2() -> BinaryTable:
    """``[x, y] = x``, ``[y, y] = x``: a non-nilpotent, non-Lie Leibniz algebra."""
    return BinaryTable.from_brackets(["x", "y"], {(0, 1): {0: 1}, (1, 1): {0: 1}})


def heis3() -> BinaryTable:
    """Three-dimensional Heisenberg Lie algebra ``[p, q] = z``."""
    return BinaryTable.from_brackets(["p", "q", "z"], {(0, 1): {2: 1}, (1, 0): {2: -1}})


def ex1_automorphism() -> Mat:
    """``x -> 2x, y -> x + y``; columns are images of the basis vectors."""
    return Mat.from_rows([[2, 1], [0, 1]])


def ex1_line_rep():
    """One-dimensional module of EX1: the submodule spanned by ``x'`` in the regular module.

    Only ``r(y, y) = 1`` is nonzero.
    """
    return RepTriple.build(ex1(), ["x'"], r={(1, 1): Mat.from_rows([[1]])})


def ex1_triangular_rep():
    """Two-dimensional module of EX1 with ``l(y,y) = m(y,y) = r(y,y)`` strictly upper triangular."""
    N = Mat.from_rows([[0, 1], [0, 0]])
    return RepTriple.build(ex1(), ["v1", "v2"], l={(1, 1): N}, m={(1, 1): N}, r={(1, 1): N})


CORPUS = {
    "ex1": ex1,
    "ex2": ex2,
    "ex3": ex3,
    "ex3fix": ex3fix,
    "z1": z1,
    "sl2lts": sl2_lts,
}

LEIBNIZ = {
    "sl2": sl2,
    "nil2": nil2,
    "cyclic2": cyclic2,
    "heis3": heis3,
}

VALID = ("ex1", "ex2", "ex3fix", "z1", "sl2lts")
"""Corpus systems that satisfy the defining identities; ``ex3`` does not."""
