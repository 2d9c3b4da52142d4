# %% [markdown]
# # Log-concavity, unimodality, internal zeros
#
# Checks run on dense coefficient arrays, one axis at a time.  A failing
# report carries a witness: axis, cell and the offending values.

# %%
from clustermono import coefficient_array, has_internal_zeros, is_log_concave, is_unimodal, parse
from clustermono.reference import PRODUCT_FACTORS

f, g = (parse(t, rank=2) for t in PRODUCT_FACTORS)
for name, p in (("f", f), ("g", g), ("f*g", f * g)):
    arr = coefficient_array(p.normalize().numerator)
    print(name, is_log_concave(arr).to_record())

# %% [markdown]
# Both factors are log-concave, but their product is not: along x2 at
# x1^3 the coefficients 23, 8, 4 give 8^2 = 64 < 92.

# %%
# Two readings of unimodality for arrays: one peak per axis shared by every
# fiber (uniform), or a peak chosen per fiber.
arr = coefficient_array(parse("(x1*x3 + x2 + 1)^4"))
print(is_unimodal(arr, uniform=True).to_record())
print(is_unimodal(arr, uniform=False).to_record())
print(has_internal_zeros(arr).to_record())

# %%
from clustermono import convolve, check_shifted_products

a, b = [1, 3, 2], [2, 2, 1]
print(convolve(a, b))
print(check_shifted_products([1, 4, 6, 4, 1]).to_record())
