# %% [markdown]
# # Scanning a rank-4 seed
#
# Linear orientation 1 -> 2 -> 3 -> 4: 42 clusters.  All monomials with
# exponents up to 2 are checked.  A clean scan is evidence for this seed
# and bound only.

# %%
from clustermono import Seed, scan_conjecture
from clustermono.reference import LINEAR_A4_MATRIX

rep = scan_conjecture(Seed.initial(LINEAR_A4_MATRIX), max_exponent=2, workers=2,
                      unimodality="fiberwise")
print(rep.label)
for k, v in rep.summary.items():
    print(f"{k}: {v}")
