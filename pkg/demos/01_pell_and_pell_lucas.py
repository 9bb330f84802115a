# %% [markdown]
# # Pell and Pell-Lucas numbers, exactly
#
# P_n and Q_n satisfy x(n+2) = 2x(n+1) + x(n), with P starting 0, 1 and Q
# starting 2, 2.  Everything below is integer arithmetic; nothing is rounded.

# %%
from seqid import PELL, companion, matrix_term, silver_power, term, term_naive

print("P_0..P_12:", [term(PELL, n) for n in range(13)])
print("Q_0..Q_12:", [companion(PELL, n) for n in range(13)])

# %% [markdown]
# Three independent routes to the same number: walking the recurrence,
# powering the matrix [[0, 1], [1, 2]], and fast doubling.

# %%
n = 5000
a, b, c = term_naive(PELL, n), matrix_term(PELL, n), term(PELL, n)
print(f"P_{n} has {len(str(c))} digits; all three routes agree: {a == b == c}")

# %% [markdown]
# The silver ratio 1 + sqrt(2) is stored as (a + b*sqrt(8))/2.  Its n-th
# power carries Q_n in the rational part and P_n in the irrational part.

# %%
for n in range(6):
    w = silver_power(PELL, n)
    print(f"gamma^{n} = {w}   Q_{n}={companion(PELL, n)}  P_{n}={term(PELL, n)}")

# %% [markdown]
# Each (Q_n / 2, P_n) solves x^2 - 2y^2 = +-1, and Cassini holds.

# %%
for n in range(1, 8):
    x, y = companion(PELL, n) // 2, term(PELL, n)
    cassini = term(PELL, n - 1) * term(PELL, n + 1) - y * y
    print(f"n={n}: ({x}, {y})  x^2-2y^2={x * x - 2 * y * y:+d}  cassini={cassini:+d}")
