# %% [markdown]
# # Running the oracle suites
#
# Each suite compares identities with brute force over a parameter grid and
# returns a report.  Notes record the two places where the closed forms need
# care: the power-reduction sign and the even-m partial sums.

# %%
from seqid.verifier import run_suite

for report in run_suite("all"):
    print(report.summary())

# %% [markdown]
# Reports serialize deterministically.

# %%
print(run_suite("power-reduction", 2, 3)[0].to_json())
