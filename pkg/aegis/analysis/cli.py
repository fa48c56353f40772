"""
Command-line interface.

    aegis gen GENERATOR [--set KEY=VALUE ...] [--seed S] [--out FILE]
    aegis solve SCENARIO [--policy P] [--filters F] [--table-out FILE]
    aegis sweep CONFIG [--out FILE]
    aegis compare SCENARIO [--filters F] [--out FILE]
    aegis verify [--instances N] [--seed S]

License:
  Copyright (C) 2026 the aegis developers.  All Rights Reserved.

  This file is part of aegis.

  aegis is free software; you can redistribute it and/or modify
  it under the terms of the GNU General Public License as published by
  the Free Software Foundation; either version 3 of the License, or
  (at your option) any later version.

  This program is distributed in the hope that it will be useful,
  but WITHOUT ANY WARRANTY; without even the implied warranty of
  MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
  GNU General Public License for more details.

  You should have received a copy of the GNU General Public License
  along with this program.  If not, see <http://www.gnu.org/licenses/>.

"""

import argparse
import json
import sys
from dataclasses import replace

from aegis.analysis.experiment import (GENERATORS, ConfigError, ExperimentConfig,
                                       PolicyContext, PolicySet, apply_policy, build_scenario,
                                       compare_policies, result_row, run_sweep,
                                       verify_solvers)
from aegis.analysis.results import describe_row, save_csv, write_csv
from aegis.config import aecfg
from aegis.data_objects.scenario_file import dump_scenario, load_scenario
from aegis.data_objects.traffic import ScenarioError
from aegis.scenarios.generators import ParameterError
from aegis.solvers.two_tier_dp import DpConfig, DpSolution
from aegis.utils.logger import mylog, set_loglevel
from aegis.utils.parallelism import com_sys
from aegis.utils.table_io import save_table
from aegis.utils.timer import timer


def _parse_value(text):
    try:
        return json.loads(text)
    except json.JSONDecodeError:
        return text


def _parse_settings(items):
    params = {}
    for item in items or []:
        key, sep, value = item.partition('=')
        if not sep:
            raise ConfigError("--set expects KEY=VALUE, got %r" % item)
        params[key] = _parse_value(value)
    return params


def _scenario(args):
    scenario = load_scenario(args.scenario)
    if args.capacity is not None:
        scenario = scenario.with_capacity(args.capacity)
    return scenario


def _context(args):
    return PolicyContext(filter_budget=args.filters, seed=args.seed,
                         dp_config=DpConfig(capacity_granularity=args.granularity),
                         allow_expensive_dp=args.allow_expensive_dp)


def _emit_csv(rows, out):
    if com_sys.myproc != 0:
        return
    if out:
        save_csv(rows, out)
        mylog.info("wrote %i rows to %s" % (len(rows), out))
    else:
        write_csv(rows, sys.stdout)


def cmd_gen(args):
    params = _parse_settings(args.set)
    if args.capacity is not None:
        params['capacity'] = args.capacity
    scenario = build_scenario({'generator': args.generator, 'params': params}, args.seed)
    text = dump_scenario(scenario)
    if args.out:
        with open(args.out, 'w') as f:
            f.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_solve(args):
    scenario = _scenario(args)
    context = _context(args)
    if args.table_out and args.policy != 'dp':
        raise ConfigError("--table-out needs --policy dp")
    result = apply_policy(args.policy, scenario, context)
    if args.table_out and isinstance(result, DpSolution):
        save_table(result.table, args.table_out)
    row = result_row(args.policy, scenario, context, result)
    print(describe_row(row))
    return 0


def cmd_sweep(args):
    config = ExperimentConfig.load(args.config)
    if args.allow_expensive_dp:
        config = replace(config, allow_expensive_dp=True)
    rows = run_sweep(config)
    _emit_csv(rows, args.out or config.output)
    return 0


def cmd_compare(args):
    scenario = _scenario(args)
    rows = compare_policies(scenario, args.filters, args.seed,
                            dp_config=DpConfig(capacity_granularity=args.granularity),
                            allow_expensive_dp=args.allow_expensive_dp)
    _emit_csv(rows, args.out)
    return 0


def cmd_verify(args):
    failures = verify_solvers(args.instances, args.seed)
    for message in failures:
        mylog.error(message)
    return 1 if failures else 0


def build_parser():
    default_seed = aecfg.getint('harness', 'default_seed')

    parser = argparse.ArgumentParser(prog='aegis',
                                     description="Filter allocation against DDoS floods.")
    parser.add_argument('--timings', action='store_true',
                        help="log cumulative solver timings at exit")
    parser.add_argument('--loglevel', choices=('debug', 'info', 'warning', 'error'),
                        help="override [utils] loglevel")
    sub = parser.add_subparsers(dest='command', required=True)

    def solver_flags(p):
        p.add_argument('scenario', help="scenario JSON file")
        p.add_argument('--capacity', type=int, help="override the scenario capacity")
        p.add_argument('--filters', type=int, default=0, help="filter budget F")
        p.add_argument('--seed', type=int, default=default_seed)
        p.add_argument('--granularity', type=int, default=aecfg.getint('dp', 'capacity_granularity'),
                       help="DP capacity step in units")
        p.add_argument('--allow-expensive-dp', action='store_true',
                       help="run the DP even above the configured cost bound")

    p = sub.add_parser('gen', help="write a scenario JSON from a generator")
    p.add_argument('generator', choices=GENERATORS)
    p.add_argument('--set', action='append', metavar='KEY=VALUE',
                   help="generator parameter (JSON value)")
    p.add_argument('--capacity', type=int)
    p.add_argument('--seed', type=int, default=default_seed)
    p.add_argument('--out')
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser('solve', help="solve one scenario with one policy")
    solver_flags(p)
    p.add_argument('--policy', default='dp', choices=PolicySet.names())
    p.add_argument('--table-out', help="save the DP goodput table (HDF5)")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser('sweep', help="run an experiment config, emit CSV")
    p.add_argument('config', help="experiment config JSON")
    p.add_argument('--out')
    p.add_argument('--allow-expensive-dp', action='store_true')
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser('compare', help="run every policy on one scenario, emit CSV")
    solver_flags(p)
    p.add_argument('--out')
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser('verify', help="check solvers against the brute-force oracle")
    p.add_argument('--instances', type=int, default=500)
    p.add_argument('--seed', type=int, default=default_seed)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    if args.loglevel:
        set_loglevel(args.loglevel)
    try:
        status = args.func(args)
    except (ConfigError, ScenarioError, ParameterError, OSError) as err:
        mylog.error(str(err))
        status = 2
    if args.timings:
        timer.print_stats()
    return status


if __name__ == "__main__":
    sys.exit(main())
