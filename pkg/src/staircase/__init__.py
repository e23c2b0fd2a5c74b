"""Exact staircase hook-length, Jacobi, Grothendieck and excited-diagram toolkit.

Everything here works over integers and :class:`fractions.Fraction`; nothing
touches floating point.
"""

from __future__ import annotations

from staircase.numerics import (
    double_factorial_odd,
    factorial,
    format_rational,
    generalized_binomial,
    pochhammer,
    to_rational,
)
from staircase.shapes import (
    Box,
    Partition,
    StrictPartition,
    content,
    hook_length,
    hook_product,
    parse_shape,
    skew_boxes,
    staircase,
    staircase_content_product,
    strict_staircase,
)
from staircase.tableaux import (
    Entry,
    SetValuedTableau,
    count_sst,
    count_svt_formula,
    enumerate_ssvt_p,
    enumerate_sst,
    enumerate_svt,
    format_tableau,
    weight_vector,
)
from staircase.polyring import (
    MultiPoly,
    format_poly,
    gp_poly,
    grothendieck_poly,
    schur_poly,
    specialize,
)
from staircase.hyper import (
    PoleSide,
    RegularizationReport,
    hyp2f1_at1_regularized,
    hyp2f1_terminating,
    jacobi_at_minus1_closed,
    jacobi_poly,
    sst_ratio,
)
from staircase.holman import (
    HolmanSpec,
    check_gauss_summation_corollary,
    check_holman_identity,
    holman_f,
)
from staircase.excited import (
    Ambient,
    ExcitedDiagram,
    broken_boxes,
    generate_excited,
    g_via_eyd,
    gp_via_eyd,
    three_adic_check,
    weight_type_a,
    weight_type_b,
)
from staircase.config import Caps, CapExceeded

__version__ = "0.1.0"
