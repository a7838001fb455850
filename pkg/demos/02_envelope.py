# %% [markdown]
# # The universal Leibniz envelope
#
# The bracket on `T + T (x) T` is written down clause by clause.  On EX1 the
# result is not yet a Leibniz algebra; dividing the tensor part by the ideal
# generated by the Leibniz defects repairs it.

# %%
from leibts.algebra import check_leibniz
from leibts.envelope import (
    build_envelope,
    check_envelope,
    check_theta,
    compute_K,
    formal_bracket,
    leibniz_defect,
    lift_automorphism,
    restrict_automorphism,
    theta,
)
from leibts.fixtures import CORPUS, VALID, ex1, ex1_automorphism

b = formal_bracket(ex1())
print("formal bracket dim", b.dim, " Leibniz:", check_leibniz(b).passed,
      " defects span dim", leibniz_defect(b).dim)

# %%
for name in VALID:
    t = CORPUS[name]()
    u = build_envelope(t)
    print(f"{name:7s} n={u.n}  dim U={u.dim:2d}  relations={u.relations.dim:2d}"
          f"  K={compute_K(t).dim:2d}  sound={check_envelope(u).passed}"
          f"  theta={check_theta(u).passed}")

# %% [markdown]
# The surviving pair basis of EX1 and its bracket table:

# %%
u = build_envelope(ex1())
print(u.bracket.names)
for (i, j), vec in sorted(u.bracket.as_dict().items()):
    print(f"  [{u.bracket.names[i]}, {u.bracket.names[j]}] = {vec}")

# %% [markdown]
# An automorphism of EX1 lifts to the envelope, commutes with theta and
# restricts back to itself.

# %%
f = ex1_automorphism()
F = lift_automorphism(ex1(), f)
print(F)
print("commutes with theta:", F @ theta(u) == theta(u) @ F)
print("restricts to f:", restrict_automorphism(u, F) == f)
