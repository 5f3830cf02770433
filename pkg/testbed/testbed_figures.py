# -*- coding: utf-8 -*-
"""
testbed of the eigenvalue figures and strong-field remainder tables
"""

import os
import time
import argparse
import warnings

import yaml
import numpy as np
import pandas as pd

from maglap.core.domain import BranchId
from maglap.metrics import critical_field, min_polya_ratio, remainder_table, riesz_ratio_scan, LambdaGridSpec
from maglap.models.disk import KummerDiskSolver
from maglap.utils.data import unit_area_system
from maglap.utils.io import RunManifest, write_table
from maglap.utils.utility import parse_grid


parser = argparse.ArgumentParser()
parser.add_argument("--output_dir", type=str, default='@record/',
                    help="the output file path")
parser.add_argument("--config", type=str, default='configs.yaml',
                    help="yaml file with one section per experiment")
parser.add_argument("--experiment", type=str, default='FULL',
                    help="FULL runs every section of the config, "
                         "or a list of section names split by comma")
parser.add_argument("--n_jobs", type=int, default=1)
parser.add_argument("--verbose", type=int, default=1)
parser.add_argument("--flag", type=str, default='')
args = parser.parse_args()


def low_eigenvalues(cfg):
    system = unit_area_system()
    solver = KummerDiskSolver(n_jobs=args.n_jobs)
    rows = []
    for B in parse_grid(cfg['b_grid']):
        lambdas = solver.lowest(system, float(B), cfg['count']).lambdas
        for n, lam in enumerate(lambdas, start=1):
            rows.append((float(B), n, lam, lam / B, lam / (4 * np.pi * n)))
    return pd.DataFrame(rows, columns=['B', 'n', 'lambda', 'lambda_over_B', 'polya_ratio'])


def polya_scan(cfg):
    system = unit_area_system()
    rows = []
    for B in parse_grid(cfg['b_grid']):
        with warnings.catch_warnings():
            warnings.simplefilter('ignore')
            scan = min_polya_ratio(system, float(B), search_margin=cfg['search_margin'], n_jobs=args.n_jobs)
        rows.append((scan.B, scan.min_ratio, scan.argmin_n, scan.weyl_limited))
    return pd.DataFrame(rows, columns=['B', 'min_ratio', 'argmin_n', 'weyl_limited'])


def critical(cfg):
    lo, hi = cfg['bracket']
    B_crit, n_crit = critical_field(unit_area_system(), lo, hi, tol_B=cfg['tol_b'],
                                    n_jobs=args.n_jobs, verbose=args.verbose)
    return pd.DataFrame([(B_crit, n_crit)], columns=['B_crit', 'n_crit'])


def riesz(cfg):
    frames = []
    for gamma in cfg['gammas']:
        scan = riesz_ratio_scan(unit_area_system(), cfg['field'], gamma,
                                grid=LambdaGridSpec(factor=cfg['factor'], points=cfg['points']),
                                n_jobs=args.n_jobs)
        print(f'gamma={gamma:g}: max ratio {scan.max_ratio:.6f} at lambda={scan.best_lambda:.4f}')
        frames.append(scan.table.assign(gamma=gamma))
    return pd.concat(frames, ignore_index=True)


def remainders(cfg):
    rows = []
    for m, l in cfg['branches']:
        for r in remainder_table(BranchId(m, l), cfg['z_list']):
            rows.append((m, l, r.z, r.computed, r.predicted, r.ratio))
    return pd.DataFrame(rows, columns=['m', 'l', 'z', 'computed', 'predicted', 'ratio'])


experiments = {
    'low_eigenvalues': low_eigenvalues,
    'polya_scan': polya_scan,
    'critical_field': critical,
    'riesz': riesz,
    'remainders': remainders,
}

with open(args.config, 'r') as f:
    configs = yaml.safe_load(f)

if args.experiment == 'FULL':
    names = list(configs.keys())
else:
    names = args.experiment.split(',')

os.makedirs(args.output_dir, exist_ok=True)
cur_time = time.strftime("%m-%d %H.%M.%S", time.localtime())

for name in names:
    print(f'\n-------------------------{name}-----------------------')
    cfg = configs[name]
    start_time = time.time()
    frame = experiments[name](cfg)
    done_time = time.time()

    result_file = os.path.join(args.output_dir, f'{name}.{args.flag}.csv')
    manifest = RunManifest(command=f'testbed {name}', parameters=cfg, tolerances={'tol': 1e-12})
    write_table(frame, manifest, fmt='csv', out=result_file)
    print(f'{name}: {len(frame)} rows, {done_time - start_time:.1f}s, started {cur_time} -> {result_file}')
