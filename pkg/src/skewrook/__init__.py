"""Bruhat-interval Poincare polynomials through q-rook theory on skew boards.

Exact integer and Laurent-polynomial arithmetic throughout; every closed form
ships with a brute-force oracle and a verification sweep (see the verify
module and the `skewrook verify` command).
"""

from .boards import (
    Board,
    RookConfig,
    all_skew_ferrers_boards,
    block_sharp,
    col_lengths,
    covers,
    enumerate_rook_configs,
    intersect,
    is_ferrers,
    is_skew_ferrers,
    left_hull,
    max_configs,
    ones,
    right_hull,
    row_lengths,
    triangular,
    zeros,
)
from .intervals import (
    CosetRepA,
    PatternViolationError,
    SignedPermutation,
    aztec_interval_size,
    coset_reps_A,
    count_lower_interval_dp,
    hull_interval_elements,
    is_hull_interval,
    max_coset_rep_A,
    max_coset_rep_B,
    poincare_B_brute,
    poincare_via_rook,
    rank_B,
    reduce_coset_rep,
    symmetric_permutations,
    theoremA_poincare,
    theoremB_poincare,
    theorem8_counts,
)
from .permutations import (
    FORBIDDEN_PATTERNS,
    Permutation,
    all_permutations,
    avoids_forbidden,
    bruhat_interval,
    bruhat_leq,
    contains_pattern,
    descent_number,
    eulerian_gf,
    inversions,
    poincare_brute,
    rank_count,
)
from .qalgebra import (
    BiPoly,
    LaurentPoly,
    evaluate_at_one,
    poly_bernoulli,
    q_factorial,
    q_falling,
    q_int,
    q_stirling,
    stirling2,
    substitute_q_inverse,
)
from .rooks import (
    full_placement_q_poly,
    garsia_remmel_product,
    gjw_product,
    inv_stat,
    q_rook_number,
    q_rook_number_brute,
    q_rook_poly,
    rb_polynomial,
    rook_number,
    sharp_q_rook,
    sharp_rb,
    t_board_q_rook,
)
from .verify import CheckResult, bjorner_ekedahl_violation, run_suite

__version__ = "0.1.0"
