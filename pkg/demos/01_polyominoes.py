"""Directed column-convex polyominoes: generation, checking and counting."""
# %% [markdown]
# A column-convex polyomino is stored column by column: each column is a
# vertical segment with a bottom row and a height.  The generator builds the
# directed ones directly; the checkers work on raw cell sets.

# %%
from polyplateau.polyomino import (
    brute_force_dccp,
    count_dccp,
    enumerate_dccp,
    is_column_convex,
    is_directed,
    rasterize,
)


def draw(cells):
    cols = [c for c, _ in cells]
    rows = [r for _, r in cells]
    lines = []
    for r in range(max(rows), min(rows) - 1, -1):
        lines.append("".join("#" if (c, r) in cells else "." for c in range(min(cols), max(cols) + 1)))
    return "\n".join(lines)


# %% The three width-2 polyominoes of area 3
for p in enumerate_dccp(2, 3):
    print(f"heights={p.heights} bottoms={p.bottoms}")
    print(draw(rasterize(p)), end="\n\n")

# %% The generic checkers on two small cell sets
print(is_column_convex({(1, 0), (1, 2)}))         # gap in the column
print(is_directed({(1, 1), (2, 1), (2, 0)}))      # bottom-right cell unreachable

# %% Closed-form counts agree with brute force over every fixed polyomino
for n in range(1, 8):
    groups = brute_force_dccp(n)
    row = [(len(groups.get(k, ())), count_dccp(k, n)) for k in range(1, n + 1)]
    print(n, row)
