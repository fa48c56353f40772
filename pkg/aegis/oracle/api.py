from .brute_force import \
    OracleSizeError, \
    OracleSolution, \
    OracleSelection, \
    brute_force_two_tier, \
    brute_force_single_tier_01, \
    random_scenario, \
    random_nodes
