"""Exact enumeration of directed plateau polyhypercubes by width and lateral area."""
from .counting import (
    CountTable,
    build_table,
    count_dpp_closed,
    count_dpp_convolution,
    induction_step,
    vandermonde_lhs,
)
from .errors import BudgetExceeded, DomainError
from .genfun import (
    IntPolynomial,
    RationalGF,
    SeriesPrefix,
    bivariate_width_slice,
    gf_fixed_width,
    gf_total,
    series_expand,
)
from .polyhypercube import (
    DirectedPlateauPolyhypercube,
    Plateau,
    enumerate_dpp,
    generic_is_valid_dpp,
    lateral_area,
    oracle_count_dpp,
    project,
    rasterize_dpp,
)
from .polyomino import (
    ColumnConvexPolyomino,
    ColumnSegment,
    binomial,
    count_dccp,
    enumerate_dccp,
    is_column_convex,
    is_directed,
    rasterize,
)

__version__ = "0.1.0"
