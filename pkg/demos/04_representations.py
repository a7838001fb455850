# %% [markdown]
# # Representations
#
# A representation is three families of operators `l`, `m`, `r` subject to ten
# identities.  The regular representation reads them off the product.

# %%
from leibts.fixtures import VALID, CORPUS, ex1_line_rep, ex1_triangular_rep, sl2_lts
from leibts.errors import PreconditionError
from leibts.representations import (
    check_representation,
    composition_series,
    compute_Z,
    dichotomy_check,
    engel_vector,
    module_to_rep,
    regular_rep,
    rep_to_module,
)

for name in VALID:
    rep = regular_rep(CORPUS[name]())
    round_trip = module_to_rep(rep_to_module(rep)) == rep
    print(f"{name:7s} regular: {check_representation(rep).passed}  round trip: {round_trip}")

# %% [markdown]
# The adjoint module of sl2 is irreducible, and its operators satisfy
# `l(x,y) = -l(y,x) = -R(x,y)` and `r = -m`.

# %%
r = dichotomy_check(regular_rep(sl2_lts()))
print(r.passed, r.notes)

# %% [markdown]
# A two-dimensional module of EX1 with strictly triangular operators has a
# common annihilated vector.

# %%
rep = ex1_triangular_rep()
print("Z =", compute_Z(rep))
print("composition series dims", [W.dim for W in composition_series(rep).chain])
print("Engel vector", engel_vector(rep))
print("line module", ex1_line_rep().vnames, check_representation(ex1_line_rep()).passed)

# %%
try:
    engel_vector(regular_rep(sl2_lts()))
except PreconditionError as e:
    print("sl2:", e)
