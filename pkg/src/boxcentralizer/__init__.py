"""Orbit bases and dimensions of the S_n-centralizer of the symmetric power V^{⊠k}."""

from .boxspace import (
    BoxBasis,
    SparseEndo,
    ValuePermutation,
    apply_value_permutation_to_endo,
    box_basis,
    box_dimension,
    compose,
    identity_endo,
    matrix_unit,
    place_act,
    value_act,
    zero_endo,
)
from .centralizer import (
    CentralizerCheck,
    OrbitBasisElement,
    OrbitConstancyError,
    PairShape,
    build_T,
    canonical_pair_shape,
    centralizer_dimension_by_orbits,
    expand_in_orbit_basis,
    is_centralized,
    orbit_basis,
    structure_constants,
)
from .diagrams import (
    BlockShapeMultiset,
    SetPartitionDiagram,
    enumerate_diagram_classes,
    enumerate_set_partitions,
    lambda_mu_of,
    lozenge_canonical,
    m_matrix,
    parse_diagram,
    phi,
)
from .dimension import (
    CrosscheckReport,
    PartialMatching,
    dimension_crosscheck,
    dimension_formula,
    distinct_parts,
    enumerate_matchings,
)
from .partitions import (
    Partition,
    PartitionConstraint,
    enumerate_constrained,
    enumerate_partitions_of,
    multiplicity,
    sort_to_partition,
    transpose,
)

__version__ = "0.1.0"
