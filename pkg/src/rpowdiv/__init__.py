"""Find every p with p^r | N by lattice search over short intervals."""

from .coppersmith import SearchParams, search_one_interval, search_window
from .errors import InputError, InvariantError
from .lattice import LatticeBasis, lll_reduce, verify_reduction
from .poly import IntPoly, ModPoly, integer_kth_root
from .rootfind import find_good_prime, heuristic_gcd, hensel_lift, integer_roots
from .scheduler import (
    DivisorReport,
    compute_interval_params,
    find_r_power_divisors,
    plan,
    search_range,
    smallest_r_power_divisor,
)

__all__ = [
    "DivisorReport",
    "InputError",
    "IntPoly",
    "InvariantError",
    "LatticeBasis",
    "ModPoly",
    "SearchParams",
    "compute_interval_params",
    "find_good_prime",
    "find_r_power_divisors",
    "heuristic_gcd",
    "hensel_lift",
    "integer_kth_root",
    "integer_roots",
    "lll_reduce",
    "plan",
    "search_one_interval",
    "search_range",
    "search_window",
    "smallest_r_power_divisor",
    "verify_reduction",
]
