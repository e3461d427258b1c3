# -*- coding: utf-8 -*-
#
# This file is part of tedual.
# Copyright (c) 2026 the tedual authors. All rights reserved.
# Distributed under the BSD license, see README.md.


import argparse
import logging
import os

import appdirs

import tedual

logger = logging.getLogger(__name__)

COMMANDS = ('sweep', 'roots', 'detect', 'eigfun', 'verify')

# (flag, configuration key, type, help)
FIELD_FLAGS = (
    ('--n', 'n', float, 'refractive index of the disk'),
    ('--R', 'R', float, 'disk radius'),
    ('--rho', 'rho', float, 'background coefficient, n_b = rho/k^2'),
    ('--k-lo', 'k_lo', float, 'lower end of the wavenumber window'),
    ('--k-hi', 'k_hi', float, 'upper end of the wavenumber window'),
    ('--n-points', 'n_points', int, 'number of sweep wavenumbers'),
    ('--m-max', 'm_max', int, 'highest Fourier mode'),
    ('--scan-step', 'scan_step', float, 'determinant scan step (at most 1e-2)'),
    ('--detection-band', 'detection_band', float, 'phase band near 0/2pi that counts as a reset'),
    ('--match-tol', 'match_tol', float, 'detection-to-root matching tolerance'),
    ('--mode', 'mode', int, 'Fourier mode for eigfun'),
    ('--root-index', 'root_index', int, 'index of the root of that mode for eigfun'),
    ('--n-r', 'n_r', int, 'radial samples for eigfun (odd)'),
    ('--verify-points', 'verify_points', int, 'grid size of the verify suites'),
    ('--verify-tolerance', 'verify_tolerance', float, 'pass threshold of the verify suites'),
)


class BaseConfig(object):

    def __init__(self, pkgname, config_dir, config, verbose):
        self.pkgname = pkgname
        self.config_dir = config_dir
        self.config = config
        self.verbose = verbose


class CommandConfig(BaseConfig):

    def __init__(self, args=None, config_dir=None):
        if config_dir is None:
            config_dir = appdirs.user_config_dir(tedual.pkgname)
        default_config = os.path.join(config_dir, tedual.pkgname + '.yaml')
        if not os.path.exists(default_config):
            default_config = None
        super().__init__(tedual.pkgname, config_dir, default_config, False)

        self.command = None
        self.out = None
        self.workers = None
        self.quiet = False
        self.color = False
        self.refine = None
        self.ladder = None
        self.features = False

        self.parse_args(args)

    def _parent_parser(self):
        parser = argparse.ArgumentParser(add_help=False)
        group = parser.add_argument_group('files and directories')
        group.add_argument('--config', metavar='FILE', help='read configuration from FILE',
                           default=self.config)
        group.add_argument('--out', metavar='DIR', help='write CSV files to DIR (overrides output_path)')

        group = parser.add_argument_group('execution')
        group.add_argument('--workers', metavar='N', type=int,
                           help='thread pool size (default: $TEDUAL_WORKERS or CPU count)')
        group.add_argument('-v', '--verbose', action='store_true', help='show debug output')
        group.add_argument('-q', '--quiet', action='store_true', help='do not report progress')
        group.add_argument('--color', action='store_true', help='color the verify report on a terminal')
        group.add_argument('--features', action='store_true', help='list verify suites and output tables, then exit')

        group = parser.add_argument_group('configuration overrides')
        for flag, key, kind, help_text in FIELD_FLAGS:
            group.add_argument(flag, dest=key, type=kind, metavar=key.upper(), help=help_text)
        group.add_argument('--refine', dest='refine', action='store_true', default=None,
                           help='bisect detected phase resets')
        group.add_argument('--ladder', dest='ladder', type=float, nargs='+', metavar='OFFSET',
                           help='eigfun ladder offsets')
        return parser

    def parse_args(self, args=None):
        parent = self._parent_parser()
        parser = argparse.ArgumentParser(prog=self.pkgname, description=tedual.__doc__,
                                         formatter_class=argparse.RawDescriptionHelpFormatter)
        parser.add_argument('--version', action='version', version='%(prog)s {}'.format(tedual.__version__))

        subparsers = parser.add_subparsers(dest='command', metavar='COMMAND')
        subparsers.required = True
        subparsers.add_parser('sweep', parents=[parent], help='tabulate phases and delta_star over k')
        subparsers.add_parser('roots', parents=[parent], help='transmission eigenvalues from the determinant')
        subparsers.add_parser('detect', parents=[parent], help='phase-reset events, cross-validated')
        subparsers.add_parser('eigfun', parents=[parent], help='eigenfunction profile at a root')
        subparsers.add_parser('verify', parents=[parent], help='run the invariant suites')

        args = parser.parse_args(args)

        for arg in vars(args):
            setattr(self, arg, getattr(args, arg))

    def overrides(self):
        """Configuration keys given on the command line"""
        result = {}
        for _, key, _, _ in FIELD_FLAGS:
            value = getattr(self, key, None)
            if value is not None:
                result[key] = value
        if self.refine is not None:
            result['refine'] = self.refine
        if self.ladder is not None:
            result['ladder'] = list(self.ladder)
        if self.out is not None:
            result['output_path'] = self.out
        return result
