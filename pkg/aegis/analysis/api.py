from .experiment import \
    ConfigError, \
    ExperimentConfig, \
    PolicySet, \
    PolicyContext, \
    ResultRow, \
    Refused, \
    apply_policy, \
    result_row, \
    run_policy, \
    run_sweep, \
    compare_policies, \
    build_scenario, \
    verify_solvers

from .results import \
    HEADER, \
    rows_to_csv, \
    save_csv, \
    describe_row
