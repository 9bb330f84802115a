# %% [markdown]
# # The whole family a(n+2) = s*a(n+1) + a(n)
#
# s = 1 is Fibonacci, s = 2 is Pell.  The odd-multiple identities carry over
# with 8 replaced by s^2 + 4.

# %%
from seqid import SequenceSpec, general_odd_multiple_poly, poly_eval, spoly_substitute, term
from seqid.emit import odd_multiple_text

for s in (1, 2, 3):
    print(f"s={s}:", [term(SequenceSpec(s), n) for n in range(10)])

# %%
for m in range(3):
    print(odd_multiple_text(general_odd_multiple_poly(m), "odd"))

# %% [markdown]
# Specialize at s = 1 and test F_{3n} = 5F_n^3 + 3(-1)^n F_n.

# %%
ident = general_odd_multiple_poly(1)
print("s=1, n odd :", spoly_substitute(ident.pair.odd_n, 1))
for n in range(1, 9):
    f = term(1, n)
    print(n, term(1, 3 * n), poly_eval(ident.polynomial(n, 1), f))
