from .share_tables import \
    ShareTableName, \
    ShareTable, \
    load_table

from .generators import \
    ParameterError, \
    SyntheticParams, \
    gen_synthetic, \
    capacity_fraction, \
    gen_provisioned, \
    gen_from_table, \
    gen_two_tier, \
    gen_flash_crowd, \
    gen_spread
