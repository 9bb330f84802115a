# %% [markdown]
# # P_{(2m+1)n} as a polynomial in P_n
#
# The signs depend on the parity of n, so each identity is a pair of
# polynomials.

# %%
from seqid import PELL, odd_multiple_poly, poly_eval, term
from seqid.emit import odd_multiple_text

for m in range(5):
    ident = odd_multiple_poly(m)
    print(odd_multiple_text(ident, "odd"))
    print(odd_multiple_text(ident, "even"))

# %% [markdown]
# LaTeX output, ready to paste.

# %%
print(odd_multiple_text(odd_multiple_poly(3), "odd", "latex"))

# %% [markdown]
# Spot check: P_{9n} from the m = 4 identity at n = 7.

# %%
n = 7
ident = odd_multiple_poly(4)
lhs = term(PELL, 9 * n)
rhs = poly_eval(ident.pair.for_index(n), term(PELL, n))
print(f"P_{9 * n} = {lhs}\npolynomial  = {rhs}\nequal: {lhs == rhs}")

# %% [markdown]
# The leading coefficient is 8^m and the linear one is +-(2m+1).

# %%
for m in range(8):
    p = odd_multiple_poly(m).pair.odd_n
    print(m, p[2 * m + 1] == 8**m, abs(p[1]) == 2 * m + 1)
