# -*- coding: utf-8 -*-
"""
Command line of maglap: eigenvalue branches, spectra, Polya scans, Riesz
ratios, strong-field remainders and oracle checks as CSV or JSON tables.

Exit codes: 0 ok, 2 invalid arguments, 3 numerical failure, 4 scan safety.
"""

import argparse
import math
import sys
import warnings
from pathlib import Path

import numpy as np
import pandas as pd
import yaml

from maglap.core.domain import BranchId, DiskSystem
from maglap.core.exceptions import (
    InvalidParam, IndexOutOfRange, NumericalFailure, ScanSafetyError, ConvergenceFailure
)
from maglap.metrics import (
    LambdaGridSpec, critical_field, min_polya_ratio, remainder_table, riesz_ratio_scan
)
from maglap.models.disk import KummerDiskSolver, branch_eigenvalue
from maglap.models.oracle import OracleConfig, radial_eigenvalues_fd
from maglap.utils.data import UNIT_AREA_RADIUS
from maglap.utils.io import RunManifest, write_table
from maglap.utils.utility import linear_grid, parse_float_list, parse_grid


DEFAULT_CONFIG = Path(__file__).with_name('configs.yaml')

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NUMERIC = 3
EXIT_SCAN = 4


def load_config(path=None):
    """Per-command defaults from a yaml file, {} for a missing section."""
    path = Path(path) if path is not None else DEFAULT_CONFIG
    if not path.exists():
        raise InvalidParam(f'config file {path} does not exist')
    with open(path, 'r', encoding='utf-8') as f:
        config = yaml.safe_load(f) or {}
    if not isinstance(config, dict):
        raise InvalidParam(f'config file {path} must hold a mapping of commands')
    return config


def _setting(args, name, fallback=None):
    value = getattr(args, name, None)
    if value is not None:
        return value
    return args.defaults.get(name, fallback)


def _system(args):
    radii = args.radius if args.radius else [UNIT_AREA_RADIUS]
    return DiskSystem.from_radii(*radii)


def _positive_fields(values, what='field'):
    values = np.asarray(values, dtype=float)
    if values.size == 0 or not np.all(values > 0):
        raise InvalidParam(f'{what} values must be positive, got {values.tolist()}')
    return values


def _emit(args, frame, tolerances):
    params = {k: v for k, v in vars(args).items() if k not in ('func', 'defaults')}
    manifest = RunManifest(command=args.command, parameters=params, tolerances=tolerances)
    write_table(frame, manifest, fmt=_setting(args, 'format', 'csv'), out=args.out)


def cmd_branch(args):
    tol = float(_setting(args, 'tol', 1e-12))
    branch = BranchId(args.m, args.l)
    fields = _positive_fields(linear_grid(args.b_min, args.b_max, args.b_steps))
    rows = []
    for B in fields:
        lam = branch_eigenvalue(branch, float(B), args.radius, tol=tol)
        rows.append((branch.m, branch.l, float(B), args.radius, lam, lam / B))
    frame = pd.DataFrame(rows, columns=['m', 'l', 'B', 'R', 'lambda', 'lambda_over_B'])
    _emit(args, frame, {'tol': tol})
    return EXIT_OK


def cmd_spectrum(args):
    tol = float(_setting(args, 'tol', 1e-12))
    system = _system(args)
    B = float(_positive_fields([args.field])[0])
    solver = KummerDiskSolver(tol=tol, n_jobs=args.n_jobs, verbose=args.verbose)
    if args.count is not None:
        spectrum = solver.lowest(system, B, args.count)
    else:
        spectrum = solver.spectrum(system, B, args.threshold)
    frame = spectrum.to_frame()
    frame['polya_ratio'] = frame['lambda'] * system.total_area / (4 * math.pi * frame['n'])
    frame = frame[['n', 'disk_index', 'm', 'l', 'lambda', 'polya_ratio']]
    _emit(args, frame, {'tol': tol})
    return EXIT_OK


def cmd_polya(args):
    tol = float(_setting(args, 'tol', 1e-12))
    margin = float(_setting(args, 'search_margin', 3.0))
    system = _system(args)
    if args.action == 'scan':
        fields = _positive_fields(parse_grid(_setting(args, 'b_grid')))
        rows = []
        for B in fields:
            with warnings.catch_warnings():
                if args.verbose < 1:
                    warnings.simplefilter('ignore')
                scan = min_polya_ratio(system, float(B), search_margin=margin, tol=tol,
                                       n_jobs=args.n_jobs, verbose=args.verbose)
            rows.append((scan.B, scan.min_ratio, scan.argmin_n))
        frame = pd.DataFrame(rows, columns=['B', 'min_ratio', 'argmin_n'])
        _emit(args, frame, {'tol': tol, 'search_margin': margin})
    else:
        tol_b = float(_setting(args, 'tol_b', 0.01))
        lo, hi = args.bracket
        B_crit, n_crit = critical_field(system, lo, hi, tol_B=tol_b, search_margin=margin, tol=tol,
                                        n_jobs=args.n_jobs, verbose=args.verbose)
        frame = pd.DataFrame([(B_crit, n_crit)], columns=['B_crit', 'n_crit'])
        _emit(args, frame, {'tol': tol, 'search_margin': margin, 'tol_b': tol_b})
    return EXIT_OK


def cmd_riesz(args):
    tol = float(_setting(args, 'tol', 1e-12))
    gamma = float(_setting(args, 'gamma', 0.0))
    system = _system(args)
    B = float(_positive_fields([args.field])[0])
    grid = LambdaGridSpec(factor=float(_setting(args, 'factor', 10.0)),
                          points=int(_setting(args, 'points', 200)),
                          lambda_max=args.lambda_max)
    scan = riesz_ratio_scan(system, B, gamma, grid=grid, tol=tol, n_jobs=args.n_jobs)
    if args.verbose >= 1:
        print(f'riesz: max ratio {scan.max_ratio:.6f} at lambda={scan.best_lambda:.6f}', file=sys.stderr)
    _emit(args, scan.table[['lambda', 'value', 'ratio', 'R_gamma']], {'tol': tol})
    return EXIT_OK


def cmd_asympt(args):
    tol = float(_setting(args, 'tol', 1e-12))
    z_values = parse_float_list(_setting(args, 'z_list'))
    reports = remainder_table(BranchId(args.m, args.l), z_values, radius=args.radius, tol=tol)
    frame = pd.DataFrame([(r.z, r.computed, r.predicted, r.ratio) for r in reports],
                         columns=['z', 'computed', 'predicted', 'ratio'])
    _emit(args, frame, {'tol': tol})
    return EXIT_OK


def cmd_oracle_check(args):
    tol = float(_setting(args, 'tol', 1e-12))
    grid_points = int(_setting(args, 'grid_points', 4000))
    levels = int(_setting(args, 'richardson_levels', 2))
    m_max = int(_setting(args, 'm_max', 2))
    max_dev = float(_setting(args, 'max_dev', 1e-4))
    fields = _positive_fields(parse_float_list(_setting(args, 'fields')))
    radii = parse_float_list(_setting(args, 'radii'))
    l_min, l_max = int(_setting(args, 'l_min', -4)), int(_setting(args, 'l_max', 2))
    if l_max < l_min:
        raise InvalidParam(f'l_max={l_max} lies below l_min={l_min}')

    rows = []
    for B in fields:
        for R in radii:
            for l in range(l_min, l_max + 1):
                config = OracleConfig(l=l, B=float(B), R=R, m_max=m_max, grid_points=grid_points,
                                      richardson_levels=levels)
                fd = radial_eigenvalues_fd(config)
                for m in range(1, m_max + 1):
                    exact = branch_eigenvalue(BranchId(m, l), float(B), R, tol=tol)
                    rows.append((m, l, float(B), R, exact, float(fd[m - 1]),
                                 abs(fd[m - 1] - exact) / exact))
    frame = pd.DataFrame(rows, columns=['m', 'l', 'B', 'R', 'kummer', 'oracle', 'rel_dev'])
    _emit(args, frame, {'tol': tol, 'max_dev': max_dev})
    worst = float(frame['rel_dev'].max())
    if worst > max_dev:
        raise ConvergenceFailure(f'largest oracle deviation {worst:.2e} exceeds {max_dev:g}')
    return EXIT_OK


def cmd_sweep(args):
    tol = float(_setting(args, 'tol', 1e-12))
    count = int(_setting(args, 'count', 20))
    system = _system(args)
    fields = _positive_fields(parse_grid(_setting(args, 'b_grid')))
    solver = KummerDiskSolver(tol=tol, n_jobs=args.n_jobs, verbose=args.verbose)
    rows = []
    for B in fields:
        lambdas = solver.lowest(system, float(B), count).lambdas
        for n, lam in enumerate(lambdas, start=1):
            rows.append((float(B), n, lam, lam / B, lam * system.total_area / (4 * math.pi * n)))
    frame = pd.DataFrame(rows, columns=['B', 'n', 'lambda', 'lambda_over_B', 'polya_ratio'])
    _emit(args, frame, {'tol': tol})
    return EXIT_OK


def _add_output(p):
    p.add_argument('--format', choices=['csv', 'json'], default=None, help='output format')
    p.add_argument('--out', type=str, default=None, help='output file, stdout when omitted')
    p.add_argument('--tol', type=float, default=None, help='relative root tolerance')


def _add_radius(p, repeatable=True):
    if repeatable:
        p.add_argument('--radius', type=float, action='append', default=None,
                       help='disk radius, repeat for a disjoint union (default: unit-area disk)')
    else:
        p.add_argument('--radius', type=float, default=1.0, help='disk radius')


def build_parser():
    parser = argparse.ArgumentParser(prog='maglap', description=__doc__.strip().splitlines()[0])
    parser.add_argument('--config', type=str, default=None, help='yaml file with per-command defaults')
    parser.add_argument('--n-jobs', dest='n_jobs', type=int, default=1, help='parallel workers over sectors')
    parser.add_argument('--verbose', type=int, default=0, help='verbosity mode')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('branch', help='one eigenvalue branch over a field grid')
    p.add_argument('--m', type=int, required=True)
    p.add_argument('--l', type=int, required=True)
    _add_radius(p, repeatable=False)
    p.add_argument('--b-min', dest='b_min', type=float, required=True)
    p.add_argument('--b-max', dest='b_max', type=float, required=True)
    p.add_argument('--b-steps', dest='b_steps', type=int, default=1)
    _add_output(p)
    p.set_defaults(func=cmd_branch)

    p = sub.add_parser('spectrum', help='sorted spectrum of a disk system')
    _add_radius(p)
    p.add_argument('--field', type=float, required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument('--threshold', type=float)
    group.add_argument('--count', type=int)
    _add_output(p)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser('polya', help='minimum Polya ratios and the critical field')
    p.add_argument('action', choices=['scan', 'critical'])
    _add_radius(p)
    p.add_argument('--b-grid', dest='b_grid', type=str, default=None, help='start:stop:count or comma list')
    p.add_argument('--bracket', type=float, nargs=2, default=[50.0, 200.0], metavar=('LO', 'HI'))
    p.add_argument('--tol-b', dest='tol_b', type=float, default=None)
    p.add_argument('--search-margin', dest='search_margin', type=float, default=None)
    _add_output(p)
    p.set_defaults(func=cmd_polya)

    p = sub.add_parser('riesz', help='Riesz mean ratios on a lambda grid')
    _add_radius(p)
    p.add_argument('--gamma', type=float, default=None)
    p.add_argument('--field', type=float, required=True)
    p.add_argument('--lambda-max', dest='lambda_max', type=float, default=None)
    p.add_argument('--points', type=int, default=None)
    _add_output(p)
    p.set_defaults(func=cmd_riesz)

    p = sub.add_parser('asympt', help='strong-field remainder against its prediction')
    p.add_argument('--m', type=int, required=True)
    p.add_argument('--l', type=int, required=True)
    _add_radius(p, repeatable=False)
    p.add_argument('--z-list', dest='z_list', type=str, default=None)
    _add_output(p)
    p.set_defaults(func=cmd_asympt)

    p = sub.add_parser('oracle-check', help='finite-difference oracle against the Kummer path')
    p.add_argument('--grid-points', dest='grid_points', type=int, default=None)
    p.add_argument('--richardson-levels', dest='richardson_levels', type=int, default=None)
    p.add_argument('--fields', type=str, default=None)
    p.add_argument('--radii', type=str, default=None)
    p.add_argument('--m-max', dest='m_max', type=int, default=None)
    p.add_argument('--l-min', dest='l_min', type=int, default=None)
    p.add_argument('--l-max', dest='l_max', type=int, default=None)
    p.add_argument('--max-dev', dest='max_dev', type=float, default=None)
    _add_output(p)
    p.set_defaults(func=cmd_oracle_check)

    p = sub.add_parser('sweep', help='lowest eigenvalues over a field grid')
    _add_radius(p)
    p.add_argument('--b-grid', dest='b_grid', type=str, default=None)
    p.add_argument('--count', type=int, default=None)
    _add_output(p)
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    name = args.command if args.command != 'polya' else f'polya {args.action}'
    try:
        args.defaults = load_config(args.config).get(args.command, {}) or {}
        return args.func(args)
    except (InvalidParam, IndexOutOfRange) as e:
        print(f'maglap {name}: {type(e).__name__}: {e}', file=sys.stderr)
        return EXIT_USAGE
    except NumericalFailure as e:
        print(f'maglap {name}: {type(e).__name__}: {e}', file=sys.stderr)
        return EXIT_NUMERIC
    except ScanSafetyError as e:
        print(f'maglap {name}: {type(e).__name__}: {e}', file=sys.stderr)
        return EXIT_SCAN


if __name__ == '__main__':
    sys.exit(main())
