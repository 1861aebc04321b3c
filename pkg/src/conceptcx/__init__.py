"""Complexity metrics for Boolean category structures.

Information complexity (min and mean aggregators), minimal-DNF Boolean
complexity, the GIST structural manifold, enumeration of the D[P]
catalog up to symmetry, and order/correlation statistics.
"""

from .boolcomp import BoolComplexityResult, Implicant, boolean_complexity, prime_implicants
from .errors import DataError, ParseError, RangeError
from .gist import StructuralManifold, structural_manifold
from .infocomp import (
    MEAN,
    MIN,
    Aggregator,
    LevelProfile,
    aggregate_metric,
    cell_entropy,
    entropy_term,
    level_metric,
    level_uncertainties,
    u_hat,
    weighted_two_level,
)
from .stats import (
    HumanDataset,
    OrderedPartition,
    compare_orders,
    induced_order,
    r_squared,
    read_dataset,
    spearman_rho,
)
from .structures import (
    CategoryStructure,
    StructureClassId,
    canonical_form,
    complement,
    enumerate_classes,
    parse_structure,
    symmetry_orbit,
)

__version__ = "0.1.0"
