# %% [markdown]
# # Checking every cluster monomial up to an exponent bound
#
# For each of the 14 clusters and each exponent vector in [0, M]^3 the
# monomial is expanded, its numerator array is built and all checks run.

# %%
from clustermono import verify_theorem

for case in ("inward", "straightforward", "cyclic"):
    rep = verify_theorem(case, max_exponent=2, unimodality="fiberwise")
    print(case, rep.summary)

# %% [markdown]
# Under the uniform-peak reading some monomials fail even with small
# exponents; the report says where.

# %%
rep = verify_theorem("inward", max_exponent=1, unimodality="uniform")
print(rep.summary["unimodal_uniform_failures"], "uniform failures")
print(next(r for r in rep.records if " witness " in r))

# %%
# A single monomial in detail: row 13 of the straightforward table, (1,1,1).
from clustermono.harness import match_reference_table
from clustermono import Seed, cluster_monomial, coefficient_array

graph, matches, _, _ = match_reference_table("straightforward")
node, cluster = matches[13]
mono = cluster_monomial(Seed(graph.seeds[node].matrix, cluster), (1, 1, 1))
print(mono.normalize().to_text())
print(coefficient_array(mono.normalize().numerator).data)
