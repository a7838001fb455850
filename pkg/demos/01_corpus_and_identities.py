# %% [markdown]
# # The corpus and the defining identities
#
# Every system in the bundled corpus is checked against both five-variable
# identities on all basis tuples.  A failure comes with a witness: the tuple,
# the identity and the two sides.

# %%
from leibts.algebra import check_derived_identities, check_leibts, check_lie_triple
from leibts.fixtures import CORPUS, LEIBNIZ, ex3, ex3fix
from leibts.algebra import leibts_from_leibniz

for name, make in CORPUS.items():
    t = make()
    r = check_leibts(t)
    print(f"{name:7s} dim {t.dim}  identities {'ok' if r.passed else 'FAIL'}"
          f"  ({r.total_violations} violations of {r.checked})"
          f"  Lie triple system: {check_lie_triple(t).passed}")

# %% [markdown]
# The five-dimensional example fails as transcribed.  Its first witness:

# %%
r = check_leibts(ex3())
v = r.violations[0]
names = ex3().names
print(v.identity, "at", tuple(names[i] for i in v.witness))
print("  lhs", v.lhs, " rhs", v.rhs)

# %% [markdown]
# Flipping two signs, `{xab}` and `{xdx}`, gives a valid system, and the derived
# identities follow from the defining ones as they must.

# %%
print("ex3fix identities:", check_leibts(ex3fix()).passed,
      " derived:", check_derived_identities(ex3fix()).passed)

# %% [markdown]
# Any Leibniz algebra gives a triple system through `{xyz} = [[x, y], z]`.

# %%
for name, make in LEIBNIZ.items():
    t = leibts_from_leibniz(make())
    print(f"{name:8s} -> {check_leibts(t).passed}")
