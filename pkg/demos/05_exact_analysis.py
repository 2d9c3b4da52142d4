# %% [markdown]
# # Sturm chains, terminating 2F1, Jacobi polynomials
#
# Root counting is exact: Sturm chains over rationals, no floating point.

# %%
from fractions import Fraction
from clustermono.analytic import (
    UnivariatePolynomial as U, is_real_rooted, jacobi_poly, pfaff_check, q_poly,
    q_representations, sturm_real_root_count, s_sequence, t_sequence, theta_sequence,
)

p = q_poly(6, 5, 4)
print(p.coeffs, "real roots:", sturm_real_root_count(p), is_real_rooted(p).verdict)

# %%
# Three ways to compute the same polynomial value.
print(q_representations(6, 5, 4, Fraction(2, 3)))

# %%
P = jacobi_poly(4, 2, 1)
print("roots in (-1, 1]:", sturm_real_root_count(P, -1, 1), "degree", P.degree)
print(pfaff_check(-3, Fraction(1, 2), 4, Fraction(-2, 5)).to_record())

# %%
print(s_sequence(3, 2, 1, 2))
print(t_sequence(3, 2, 1, 2))
print(theta_sequence(3, 2, 1, 2))
