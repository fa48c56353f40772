from .single_tier import \
    SingleTierSolution, \
    solve_fractional, \
    solve_filters_only, \
    optimality_certificate, \
    order_by_efficiency

from .two_tier_dp import \
    DpConfig, \
    GoodputTable, \
    DpSolution, \
    CorruptTableError, \
    build_table, \
    reconstruct, \
    solve_dp, \
    attacker_tier_optimum, \
    gateway_tier_optimum

from .heuristic import \
    solve_h1

from .baselines import \
    Seed, \
    uniform_rate_limit, \
    random_filtering, \
    maxmin_shares, \
    maxmin_rate_limit
