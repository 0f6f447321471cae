"""Rational generating functions and their power-series expansions."""
# %%
from polyplateau.counting import count_dpp_closed
from polyplateau.genfun import bivariate_width_slice, gf_fixed_width, gf_total, series_expand

# %% Fixed width: t^(k(d-1)) / (1-t)^((2k-1)(d-1))
f = gf_fixed_width(3, 2)
print(f.numerator, f.denominator)
print(series_expand(f, 12).to_text())
print(" ".join(str(count_dpp_closed(3, 2, n)) for n in range(13)))

# %% The x^k slice of the width/area series is the same formal series
print(bivariate_width_slice(3, 2).same_series(f))

# %% All widths together
for d in (3, 4, 5):
    print(d, series_expand(gf_total(d), 15).to_text())
