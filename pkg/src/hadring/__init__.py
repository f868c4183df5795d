"""Weight-class Schur-ring algebra over the {+1,-1} sequence group and a
reduced exhaustive search for circulant Hadamard matrices."""

from .correlation import (
    AutocorrelationVector,
    autocorrelation_vector,
    correlation_sum_check,
    periodic_correlation,
    shift_index,
)
from .errors import InputError, InvariantViolation
from .hadsearch import (
    DifferenceSetCheck,
    DifferenceSetClaim,
    FoundOrbit,
    HalfShiftWitness,
    SearchConfig,
    SearchReport,
    SearchSpaceSize,
    SplitConstraint,
    admissible_splits,
    admissible_weights,
    hadamard_to_difference_set,
    half_shift_exclusion,
    is_circulant_hadamard,
    merge_reports,
    run_parallel,
    search,
    search_space_size,
    verify_difference_set,
)
from .schur import (
    MaximalSSet,
    ParityPartition,
    ProductSupport,
    StructureConstantQuery,
    admissible_weight_band,
    complete_maximal_ssets,
    half_split_pairs,
    partition_parity_sets,
    product_support,
    structure_constant,
    structure_constant_by_weights,
)
from .seqcore import (
    BitSequence,
    Orbit,
    WeightClass,
    class_size,
    cyclic_shift,
    enumerate_weight_class,
    format_sequence,
    format_sequence_hex,
    from_plus_support,
    negate,
    orbit_of,
    parse_sequence,
    plus_support,
    pointwise_mul,
    rank_of,
    unrank,
    weight,
)

__version__ = "0.1.0"
