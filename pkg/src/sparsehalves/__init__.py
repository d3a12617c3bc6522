"""Exact tools for sparse halves in blow-ups of generalised Andrasfai graphs."""

__version__ = "0.1.0"

from .andrasfai import BlowUp, andrasfai, blow_up, generalized_andrasfai
from .circle import (
    CircularArrangement,
    lambda_count,
    represent_blow_up,
    verify_angle_property,
    z_xi,
)
from .density import (
    DensityVerdict,
    SearchBudget,
    SweepReport,
    arc_sweep,
    beta_table,
    is_dense,
    min_edges_over_subsets,
)
from .errors import BudgetExceeded, CapExceeded, PreconditionError, SparseHalvesError
from .exact import (
    CircularInterval,
    angle_fraction,
    arc,
    format_rational,
    interval_contains,
    interval_length,
    rational,
)
from .graphs import (
    Graph,
    chromatic_number,
    complete_bipartite,
    cycle,
    independence_number,
    induced_edge_count,
    named_graph,
    odd_girth,
    petersen,
)
from .homomorphism import (
    Homomorphism,
    find_homomorphism,
    min_andrasfai_index,
    verify_homomorphism,
)
from .prooflab import (
    CheckReport,
    Prop32Report,
    WindingTrace,
    check_useful_lemma,
    partition_identity_check,
    prop32_geometry,
    winding_trace,
)
