"""Character degrees of GL_n(F_q) and S_n, and Stiefel-Whitney classes of
self-dual representations of GL_2(F_q)."""

from .fqpoly import BudgetExceeded, FqPoly, irreducibles, reciprocal
from .gl2 import (
    Cuspidal,
    OneDim,
    PrincipalSeries,
    SteinbergTwist,
    density,
    enumerate_self_dual_reps,
    global_average,
    summary_table,
    sw_decision,
)
from .green import GreenLabel, enumerate_labels, enumerate_self_dual, exact_degree, v2_degree
from .partitions import Partition, chiral_count_closed_form, enumerate_partitions, specht_dimension

__version__ = "0.1.0"
