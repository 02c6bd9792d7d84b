"""Exact measure theory of sums of bounded real sets.

Sets are finite unions of closed rational intervals; every measure,
diameter, profile and zone is computed in exact rational arithmetic.
"""

from .bounds import BoundReport, diam_bound_implications, f_of_k, lower_bounds, ruzsa_params
from .density import build_g_h, cumulative_profile, run_decomposition, zone_partition
from .errors import PreconditionError
from .generators import gen_asymmetric, gen_freiman_large, gen_random, gen_small_extremal
from .linear_sets import (
    EmptySetError,
    Interval,
    IntervalSet,
    SetParseError,
    format_set,
    measure,
    minkowski_sum,
    parse_set,
    set_from_json,
    set_to_json,
)
from .oracle import gap_points, grid_measure, grid_set, grid_sumset
from .structure import (
    extremal_large_decompose,
    freiman_verify,
    lemma_mes_check,
    relaxed_verify,
    small_extremal_recognize,
)
from .torus import fold, max_multiplicity, modular_split

__version__ = "0.1.0"

__all__ = [
    "BoundReport", "diam_bound_implications", "f_of_k", "lower_bounds", "ruzsa_params",
    "build_g_h", "cumulative_profile", "run_decomposition", "zone_partition",
    "PreconditionError",
    "gen_asymmetric", "gen_freiman_large", "gen_random", "gen_small_extremal",
    "EmptySetError", "Interval", "IntervalSet", "SetParseError", "format_set", "measure",
    "minkowski_sum", "parse_set", "set_from_json", "set_to_json",
    "gap_points", "grid_measure", "grid_set", "grid_sumset",
    "extremal_large_decompose", "freiman_verify", "lemma_mes_check", "relaxed_verify",
    "small_extremal_recognize",
    "fold", "max_multiplicity", "modular_split",
]
