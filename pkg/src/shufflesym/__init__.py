"""Exact tools for (alpha, beta, gamma) shuffles, signed RSK and extended Schur functions."""
from .combinatorics import (
    compose,
    cycle_type,
    descent_stats,
    hook_length_count,
    inverse,
    moebius,
    partitions,
    q_binomial,
    reverse_deck,
    z_lambda,
)
from .cycles import (
    CycleTypeDistribution,
    cycle_type_distribution,
    exact_distances,
    expected_fixed_points,
    limit_cycle_pmf,
    mixed_riffle_cycle_index,
    separation_bound,
)
from .errors import ShuffleSymError
from .pointprocess import (
    PointConfig,
    br_partition,
    br_partition_bruteforce,
    br_shape_probability,
    points_to_permutation,
    sample_br,
)
from .rsk import brkv_insert, brkv_inverse, maj_measure, rsk, rsk_shape
from .series import (
    TruncatedSeries,
    br_gap_probability,
    cauchy_residual,
    gessel_lhs,
    gessel_rhs,
    toeplitz_det,
)
from .shuffles import (
    ExactDistribution,
    convolve,
    exact_shuffle_distribution,
    inverse_shuffle_sample,
    sample_shuffle,
    sample_word,
    word_to_permutation,
)
from .symmetric import (
    ShuffleParams,
    extended_h_sequence,
    extended_power_sum,
    extended_schur,
    power_sum_at,
    principal_specialization,
    schur_at,
)

__version__ = "0.1.0"
