"""Part-frequency matrices of integer partitions.

Glaisher's bijection as matrix transposition, the antidiagonal rotation
action and its orbit statistics, a generalized Andrews-Dixit-Yee bijection,
and exact q-series checks of the related generating-function identities.
"""

from .ady import ady_counts, ady_forward, ady_inverse, check_ady
from .identities import (
    Verdict,
    check_congruence_statistics,
    check_corollary8,
    check_orbit1_gf,
    check_orbit2_gf,
    check_pmm,
    check_remark4,
    check_theorem4,
)
from .partitions import (
    Partition,
    enumerate_partitions,
    is_ady_class,
    is_distinct_parts,
    is_odd_parts,
    is_parts_appear_fewer_than,
    is_parts_not_div_by,
    is_upper_left_filling,
    partition_count,
    partition_counts,
    weight,
)
from .pfm import (
    OrbitTable,
    PartFrequencyMatrices,
    from_partition,
    glaisher,
    glaisher_transpose,
    orbit,
    orbit_size,
    orbit_table,
    orbit_weight_decomposition,
    rotate,
    to_partition,
)
from .qseries import ProductSpec, Series, expand, parse_product

__version__ = "0.1.0"
