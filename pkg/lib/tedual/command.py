# -*- coding: utf-8 -*-
#
# This file is part of tedual.
# Copyright (c) 2026 the tedual authors. All rights reserved.
# Distributed under the BSD license, see README.md.


import logging
import sys

from .checks import CheckBase
from .config import CommandConfig
from .main import TEDual
from .reporters import TableWriter
from .scaled import NumericalError
from .storage import ConfigError, YamlConfigStorage

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_CONFIG = 2
EXIT_NUMERIC = 3


class TEDualCommand:
    def __init__(self, tedual_app):

        self.tedual_app = tedual_app
        self.tedual_config = tedual_app.tedual_config

    def progress(self, done, total):
        if not self.tedual_config.quiet:
            print('%s: %3d%% (%d/%d)' % (self.tedual_config.command, 100 * done // total, done, total),
                  file=sys.stderr)

    def write(self, kind, data):
        self.tedual_app.check_directories()
        filename = TableWriter.get(kind, data).write(self.tedual_app.run_config.output_path)
        print('Wrote', filename)

    def cmd_sweep(self):
        result = self.tedual_app.sweep(self.progress)
        self.write('phases', result)
        self.write('star', result)
        return EXIT_OK

    def cmd_roots(self):
        self.write('roots', self.tedual_app.roots())
        return EXIT_OK

    def cmd_detect(self):
        report = self.tedual_app.detect(self.progress)
        self.write('detected', report)
        print(report.verdict)
        return EXIT_OK

    def cmd_eigfun(self):
        self.write('profile', self.tedual_app.eigfun())
        return EXIT_OK

    def cmd_verify(self):
        report = self.tedual_app.verify()
        return EXIT_OK if report.finish() else EXIT_VERIFY_FAILED

    def show_features(self):
        print()
        print('Verify suites:\n')
        print(CheckBase.check_documentation())
        print()
        print('Output tables:\n')
        print(TableWriter.writer_documentation())
        print()
        return EXIT_OK

    def run(self):
        if self.tedual_config.features:
            return self.show_features()
        handler = getattr(self, 'cmd_' + self.tedual_config.command)
        try:
            return handler()
        except (NumericalError, ArithmeticError) as e:
            print('%s: numerical failure: %s' % (self.tedual_config.pkgname, e), file=sys.stderr)
            return EXIT_NUMERIC
        except ValueError as e:
            print('%s: %s' % (self.tedual_config.pkgname, e), file=sys.stderr)
            return EXIT_CONFIG


def setup_logging(verbose):
    if verbose:
        logging.basicConfig(level=logging.DEBUG, format='%(asctime)s %(module)s %(levelname)s: %(message)s')
    else:
        logging.basicConfig(level=logging.WARNING, format='%(module)s %(levelname)s: %(message)s')


def main(argv=None):
    command_config = CommandConfig(argv)
    setup_logging(command_config.verbose)

    try:
        if command_config.config is None:
            config_storage = YamlConfigStorage.defaults()
        else:
            config_storage = YamlConfigStorage(command_config.config)
        tedual_app = TEDual(command_config, config_storage)
    except ConfigError as e:
        print('%s: configuration error: %s' % (command_config.pkgname, e), file=sys.stderr)
        return EXIT_CONFIG

    return TEDualCommand(tedual_app).run()
