# %% [markdown]
# # Laurent polynomials and seed mutation
#
# Cluster variables are Laurent polynomials in the initial variables.
# Everything here is exact: integer coefficients, exact division.

# %%
from clustermono import LaurentPolynomial, Seed, ExchangeMatrix, mutate_seed, normalize, parse

x1, x2, x3 = (LaurentPolynomial.variable(i, 3) for i in range(3))
p = (x1 * x3 + x2 + 1) * (x1 * x3 + 1)
print(p)
print(p / (x1 * x3 + 1))          # exact division; a remainder raises DivisionError

# %%
# Normal form: a polynomial numerator and a denominator exponent vector.
nf = normalize(parse("(x1*x3 + (x2 + 1)^2)/(x1*x2*x3)"))
print(nf.numerator, nf.dvector)
print(nf.to_text())

# %% [markdown]
# ## Mutation
# Arrows 1 -> 2 <- 3.  Mutating at vertex 2 (index 1) gives the exchange
# relation x2 * x2' = x1*x3 + 1.

# %%
seed = Seed.initial(ExchangeMatrix([[0, 1, 0], [-1, 0, -1], [0, 1, 0]]))
s = mutate_seed(seed, 1)
print(s.cluster_text())
print(s.matrix.rows)

# %%
# Mutation is an involution.
assert mutate_seed(s, 1) == seed
for k in range(3):
    print(k + 1, mutate_seed(s, k).cluster_text())
