# %% [markdown]
# # Sums of odd powers of even-indexed Pell numbers
#
# sum_{k=1}^n P_{2k}^{2m+1} is a polynomial in X = P_{2n+1}.  Multiplying by
# Q_1 Q_3 ... Q_{2m+1} clears every denominator.

# %%
from seqid import PELL, melham_sum_poly, poly_eval, term
from seqid.emit import melham_text

for m in range(4):
    ident = melham_sum_poly(m)
    print(melham_text(ident))
    print(melham_text(ident, cleared=True))
    print()

# %% [markdown]
# Check m = 2 against direct summation for a few n.

# %%
ident = melham_sum_poly(2)
for n in range(6):
    direct = sum(term(PELL, 2 * k) ** 5 for k in range(1, n + 1))
    x = term(PELL, 2 * n + 1)
    print(n, direct, poly_eval(ident.rational_poly, x), ident.multiplier * direct == poly_eval(ident.cleared_poly, x))

# %% [markdown]
# The power reduction underneath has a sign (-1)^{j(n+1)}.  The competing
# exponent j(n+m) breaks already at m = 2, n = 1.

# %%
from seqid import power_reduction

print("j(n+1):", power_reduction(2).evaluate(1))
print("j(n+m):", power_reduction(2, "j(n+m)").evaluate(1), "(should be P_1^5 = 1)")
