from .traffic import \
    TrafficNode, \
    Gateway, \
    Scenario, \
    Blocked, \
    BLOCKED, \
    Allowed, \
    PASS, \
    Allocation, \
    Metrics, \
    Solution, \
    Infeasible, \
    ScenarioError, \
    UnknownGatewayError, \
    is_feasible, \
    validate, \
    require_valid, \
    drop_idle, \
    prune_nodes, \
    evaluate, \
    unfiltered_metrics

from .scenario_file import \
    parse_scenario, \
    dump_scenario, \
    load_scenario, \
    save_scenario
