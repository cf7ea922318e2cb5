"""
Left cells, weak order and skew tableaux in the symmetric group.

The package exposes four layers: permutations with length, descents and
the weak/Bruhat orders (`perms`), standard parabolic subgroups and coset
representatives (`parabolic`), left cells by closure and by
Robinson-Schensted fibers (`cells`), skew shapes, canonical fillings and
the column-squashing normal form (`tableaux`), and the classification
pipeline tying them together (`classify`).  `cli` is the command-line
front end.
"""

from .cells import (
    CellPartition,
    CellOracleMismatch,
    StandardPairing,
    approx_cells,
    cross_validated_cells,
    is_union_of_left_cells,
    local_union_check,
    rs_cells,
    rs_insert,
)
from .classify import (
    FiberUnionReport,
    IntervalClassification,
    PairRecord,
    VerificationReport,
    a5_ideal_check,
    enumerate_basic_shapes,
    exceptional_tableaux,
    interval_classification_check,
    is_cell_ideal_generating,
    is_maximal_tableau,
    verify_main_theorem,
    weak_interval,
)
from .parabolic import (
    CosetDecomposition,
    double_coset_reps,
    in_DJ,
    left_decompose,
    longest_element,
    min_left_coset_reps,
)
from .perms import (
    Perm,
    bruhat_leq,
    enumerate_group,
    identity,
    inverse,
    is_weak_ideal,
    left_descents,
    left_weak_leq,
    length,
    multiply,
    principal_weak_ideal,
    right_descents,
)
from .tableaux import (
    Partition,
    SkewShape,
    SkewTableau,
    canonical_tableau,
    conjugate,
    enumerate_std,
    is_squashed,
    is_standard,
    perm_of,
    restrict_above,
    restrict_below,
    shape_genset,
    slide_bound,
    squash,
    tau_col,
    tau_top,
    word_of,
)

__version__ = "0.1.0"
