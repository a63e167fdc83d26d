"""Exact computations of stable twisted cohomology.

Dimensions of H^|lam|(Aut(F_n); S_lam(H)) and H^|lam|(Out(F_n); S_lam(H))
for n large, by two independent routes (symmetric group characters of set
partition modules, and stable plethysm multiplicities), together with
generator degrees for surface mapping class groups.
"""

from .errors import ConsistencyError, DomainError, ResourceLimitError
from .mcg import SurfaceVariant, generator_series
from .partitions import Partition, conjugate, enumerate_partitions, parse_partition, remove_boxes_rho
from .stablecohom import (
    GroupFamily,
    Method,
    Statement,
    build_table,
    dim_exterior,
    dim_schur,
    dim_symmetric,
    stable_range,
)
from .symfunc import nu, nu_infinity, plethysm_h_h

__version__ = "0.1.0"
