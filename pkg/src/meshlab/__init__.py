"""
Exact distributions of quadrant marked mesh patterns over alternating
permutations: an enumeration oracle, positional recursions and truncated
EGF arithmetic, cross-verified against each other and against published
tables, coefficient laws and closed forms.
"""
from .algebra import (
    EgfSeries,
    Poly,
    fit_polynomial,
    sec_series,
    secant_number,
    solve_linear_ode,
    tan_series,
    tangent_number,
    zigzag_numbers,
)
from .coeff_laws import (
    double_factorial,
    falling_factorial,
    level_set,
    level_set_brute,
    p_value,
    p_values,
    q_value,
    q_values,
    r_value,
    r_values,
    s_value,
    s_values,
)
from .distributions import (
    MMP_Q1,
    BruteForceLimitError,
    Family,
    a_poly,
    b_poly,
    brute_force_limit,
    c_poly,
    d_poly,
    dist_brute,
    egf_family,
    family_polynomial,
    sec_t_power_of_x,
    sec_xt_power,
)
from .permutations import (
    DOWN_UP,
    UP_DOWN,
    AlternatingClass,
    QuadrantSpec,
    classify,
    complement,
    enumerate_alternating,
    is_down_up,
    is_up_down,
    matches,
    mmp_count,
    quadrant_counts,
    reduce,
    reverse,
)

__version__ = "0.1.0"
