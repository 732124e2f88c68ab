"""Interlaced greedy maximization of non-monotone submodular functions."""

from .algorithms import (
    AlgorithmOutcome,
    InterlaceState,
    TraceEntry,
    add_subroutine,
    brute_force_opt,
    double_greedy_usm,
    fast_interlace_greedy,
    fast_random_greedy,
    gupta_iterated_greedy,
    interlace_greedy,
    pools_from_trace,
    solve_extended,
    standard_greedy,
    steal,
)
from .core import (
    CountingOracle,
    SubmodularOracle,
    evaluate,
    map_back,
    marginal_gain,
    with_dummy_extension,
)
from .instances import (
    gen_ba,
    gen_er,
    gen_tight,
    load_edge_list,
    random_weights,
    write_edge_list,
)
from .objectives import (
    CutGraph,
    CutOracle,
    TightInstance,
    TightOracle,
    cut_value,
    max_singleton,
    tight_value,
    weighted_cut_value,
)
from .verification import (
    audit_query_bound,
    calibrate_fig_constant,
    certify_ratio,
    check_submodular,
    fig_query_limit,
    ig_query_limit,
)

__all__ = [
    "AlgorithmOutcome",
    "CountingOracle",
    "CutGraph",
    "CutOracle",
    "InterlaceState",
    "SubmodularOracle",
    "TightInstance",
    "TightOracle",
    "TraceEntry",
    "add_subroutine",
    "audit_query_bound",
    "brute_force_opt",
    "calibrate_fig_constant",
    "certify_ratio",
    "check_submodular",
    "cut_value",
    "double_greedy_usm",
    "evaluate",
    "fast_interlace_greedy",
    "fast_random_greedy",
    "fig_query_limit",
    "gen_ba",
    "gen_er",
    "gen_tight",
    "gupta_iterated_greedy",
    "ig_query_limit",
    "interlace_greedy",
    "load_edge_list",
    "map_back",
    "marginal_gain",
    "max_singleton",
    "pools_from_trace",
    "random_weights",
    "solve_extended",
    "standard_greedy",
    "steal",
    "tight_value",
    "weighted_cut_value",
    "with_dummy_extension",
    "write_edge_list",
]
