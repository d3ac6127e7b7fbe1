"""Exact combinatorics of colored permutations: statistics, orderings,
bijections, and coefficientwise verification of their generating-function
identities over an exact truncated multivariate series ring."""

from .bijections import (
    BipartitePartition,
    bipartite_members,
    bipartite_merge,
    bipartite_split,
    block_decode,
    block_encode,
    is_bipartite_member,
    is_block_form,
    phi,
    phi_inverse,
    psi,
)
from .core import (
    ColoredEntry,
    ColoredPermutation,
    Composition,
    OrderSpec,
    col,
    compare,
    des,
    des_set,
    ground_set,
    inv,
    inverse,
    is_positive_dominant,
    length,
    maj,
    order_from_json,
    order_to_json,
    parse_entries,
    parse_entry,
    random_positive_dominant,
    rank,
    reorder,
    subset_inv,
    swap_entries,
)
from .identities import (
    VerificationReport,
    dist_table,
    verify_bipartite_gf,
    verify_carlitz,
    verify_fiber_identity,
    verify_four_variate,
    verify_gg1,
    verify_gg2,
    verify_lemma43,
    verify_six_variate,
)
from .sequences import (
    ColoredSequence,
    Partition,
    arrange,
    composition_of,
    enumerate_by_composition,
    enumerate_compositions,
    enumerate_group,
    enumerate_partitions,
    enumerate_sequences,
    gamma_of,
    is_compatible,
    lambda_of,
    seq_col,
    seq_max,
    seq_weight,
)
from .series import (
    TruncatedSeries,
    colored_q_factorial,
    colored_q_number,
    geometric_inverse,
    q_factorial,
    q_multinomial,
    q_number,
)

__version__ = "0.1.0"
