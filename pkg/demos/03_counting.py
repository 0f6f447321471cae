"""Exact counts: convolution, closed form, and a count table."""
# %%
from polyplateau.counting import (
    build_table,
    count_dpp_closed,
    count_dpp_convolution,
    induction_step,
    vandermonde_lhs,
)

# %% The convolution and the closed form agree
for d in range(3, 7):
    print(d, [count_dpp_convolution(d, 2, n) for n in range(4, 16)])
    print(d, [count_dpp_closed(d, 2, n) for n in range(4, 16)])

# %% Going from dimension d to d + 1 one lateral axis at a time
print(induction_step(4, 2, 14), count_dpp_closed(5, 2, 14))

# %% The binomial convolution identity behind that step
print(vandermonde_lhs(2, 3, 4))

# %% Arbitrary precision: an entry well past 64 bits
print(count_dpp_closed(3, 10, 60))

# %% A table in CSV form (header row holds n; one row per width k)
print(build_table(3, 3, 12).to_csv())
