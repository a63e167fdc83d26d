"""Generator degrees of twisted cohomology for surface mapping class groups.

For a closed surface, or one with a single boundary component, the twisted
cohomology with coefficients S_lam(H) is stably free over the untwisted
cohomology ring. This prints where the generators sit.
"""

from stabletwist.mcg import SurfaceVariant, generator_series
from stabletwist.partitions import format_partition

for variant in SurfaceVariant:
    print(f"{variant.value} surface")
    for lam in [(1,), (1, 1), (2,), (2, 1), (3,)]:
        series = generator_series(variant, lam, 20)
        listing = ", ".join(f"{d}^{m}" if m > 1 else str(d) for d, m in series.items())
        print(f"  S_{format_partition(lam):8s} degrees: {listing}")
    print()
