# %% [markdown]
# # Series, radicals and a Levi decomposition

# %%
from leibts.algebra import TripleTable
from leibts.fixtures import CORPUS, VALID, ex1, sl2_lts
from leibts.linalg import span
from leibts.radicals import (
    check_levi,
    derived_series,
    is_semisimple,
    lower_central_series,
    radicals,
    run_theorem_suite,
)


def show(S, names):
    rows = [" + ".join(f"{c}*{n}" if c != 1 else n for c, n in zip(r, names) if c) for r in S.basis]
    return "{" + ", ".join(rows) + "}"


for name in VALID:
    t = CORPUS[name]()
    b = radicals(t)
    print(f"{name:7s} R={show(b.R, t.names):22s} Ker={show(b.KerT, t.names):10s}"
          f" N={show(b.N, t.names):18s} semisimple={is_semisimple(t)}")

# %%
t = CORPUS["ex2"]()
print("derived dims", [S.dim for S in derived_series(t).terms])
print("lower dims  ", [S.dim for S in lower_central_series(t).terms])

# %% [markdown]
# A system with both a semisimple and a solvable part: sl2 next to EX1.

# %%
a, c = sl2_lts(), ex1()
products = {k: {i: x for i, x in enumerate(v) if x} for k, v in a.as_dict().items()}
for (i, j, k), v in c.as_dict().items():
    products[(i + 3, j + 3, k + 3)] = {s + 3: x for s, x in enumerate(v) if x}
T = TripleTable.from_products(list(a.names) + list(c.names), products)

b = radicals(T)
print("R =", show(b.R, T.names))
S = span([(1, 0, 0, 0, 0), (0, 1, 0, 0, 0), (0, 0, 1, 0, 0)], 5)
print("Levi complement h, e, f:", check_levi(T, S).passed)

# %%
r = run_theorem_suite(T, include_nilradical=False)
print(f"theorem suite: {r.checked} checks, {r.total_violations} violations")
