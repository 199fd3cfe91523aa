"""Regular LDPC codes from nonprimitive narrow-sense BCH parameters.

Two constructions: circulant expansion of a BCH exponent matrix (type 1) and
concatenated cyclotomic-coset circulants (type 2), plus structural analysis
(rank, girth, stopping sets), iterative decoders, and a deterministic Monte
Carlo BER/FER harness.
"""

from ._kernels import active_backend, available_backends, get_kernels, set_backend
from .alist import read_alist, write_alist
from .analysis import (
    FourCycleWitness,
    QcStoppingReport,
    StoppingSearchResult,
    StructureReport,
    check_regularity,
    code_dimension_and_rates,
    find_four_cycle,
    gf2_rank,
    girth,
    is_stopping_set,
    min_distance_exhaustive,
    stopping_distance,
    stopping_distance_via_peeling,
    structure_report,
    type1_stopping_claim_check,
)
from .bch import (
    BchSpec,
    DistanceBounds,
    ExponentMatrix,
    bch_dimension,
    bch_dimension_oracle,
    bch_distance_bounds,
    bch_spec,
    delta_max,
    symbolic_parity_check,
)
from .channel_decode import (
    ERASURE,
    Bec,
    BiAwgn,
    Bsc,
    DecodeOutcome,
    bit_flip_decode,
    bp_decode,
    channel_transmit,
    null_space_basis,
    peel_decode,
    syndrome,
)
from .construct import (
    CosetValidation,
    LdpcCode,
    build_type1,
    build_type2,
    circulant,
    coset_circulant,
    coset_row,
    location_vector,
    select_cosets,
    validate_coset_for_type2,
)
from .errors import (
    BudgetTooLarge,
    ConsistencyError,
    DeltaOutOfRange,
    InvalidCoset,
    NotEnoughCosets,
    NotRegular,
    ParseError,
)
from .galois import (
    MAX_N,
    CodeFieldParams,
    CyclotomicCoset,
    coset_leaders,
    coset_size_bound_holds,
    cyclotomic_coset,
    field_params,
    find_prime_lengths,
    multiplicative_order,
)
from .matrix import BinaryMatrix
from .sim import (
    CSV_HEADER,
    FIG1_GRID,
    SimPlan,
    SimPoint,
    SimResult,
    emit_csv,
    per_trial_seed,
    run_sweep,
    to_json,
)

__version__ = "0.1.0"
