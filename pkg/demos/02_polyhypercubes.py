"""Directed plateau polyhypercubes, their projections, and the brute-force oracle."""
# %% [markdown]
# Each stratum (slab along axis 1) is a box.  Projecting onto the plane of
# axis 1 and a lateral axis gives a directed column-convex polyomino, and the
# lateral area is the total area of these projections.

# %%
from polyplateau.counting import count_dpp_closed
from polyplateau.polyhypercube import (
    enumerate_dpp,
    generic_is_valid_dpp,
    lateral_area,
    oracle_count_dpp,
    projections,
    rasterize_dpp,
)

# %% All width-2 objects in dimension 3 with lateral area 5
for P in enumerate_dpp(3, 2, 5):
    boxes = [(s.extents, s.offsets) for s in P.strata]
    shapes = [(p.heights, p.bottoms) for p in projections(P)]
    print(f"strata={boxes}  projections={shapes}  lateral area={lateral_area(P)}")

# %% Rasterized objects pass the definition-level checker
P = enumerate_dpp(4, 2, 8)[17]
cells = rasterize_dpp(P)
print(len(cells), "cells; valid:", generic_is_valid_dpp(cells))

# %% The exhaustive oracle against the closed form
for d, k, n in [(3, 1, 6), (3, 2, 7), (3, 3, 8), (4, 2, 8)]:
    print((d, k, n), oracle_count_dpp(d, k, n), count_dpp_closed(d, k, n))
