# -*- coding: utf-8 -*-
#
# This file is part of tedual.
# Copyright (c) 2026 the tedual authors. All rights reserved.
# Distributed under the BSD license, see README.md.


import logging
import os

from .checks import CheckBase, VerifyContext
from .duality import cross_validate, detect_tes, detected_roots, eigenfunction_profile, sweep
from .handler import Report
from .solver import all_tes, find_roots, recommended_modes
from .storage import ConfigError
from .worker import run_checks, worker_count

logger = logging.getLogger(__name__)


class TEDual(object):
    def __init__(self, tedual_config, config_storage):

        self.tedual_config = tedual_config
        self.config_storage = config_storage

        logger.info('Using %s as configuration file', self.config_storage.filename or '(built-in defaults)')

        self.run_config = self.config_storage.run_config(self.tedual_config.overrides())
        try:
            self.workers = worker_count(self.tedual_config.workers)
        except ValueError as e:
            raise ConfigError(str(e), 'workers')
        logger.info('Using %d worker threads', self.workers)

    @property
    def medium(self):
        return self.run_config.medium

    def check_directories(self):
        if not os.path.isdir(self.run_config.output_path):
            os.makedirs(self.run_config.output_path)

    def sweep(self, progress=None):
        rc = self.run_config
        return sweep(self.medium, rc.k_lo, rc.k_hi, rc.n_points, M=rc.m_max, workers=self.workers,
                     progress=progress)

    def roots(self):
        rc = self.run_config
        m_roots = min(rc.m_max, recommended_modes(self.medium, rc.k_hi))
        return all_tes(self.medium, rc.k_lo, rc.k_hi, m_roots, rc.scan_step, workers=self.workers)

    def detect(self, progress=None):
        rc = self.run_config
        events = detect_tes(self.sweep(progress), rc.detection_band, rc.refine)
        for root in detected_roots(self.medium, events):
            logger.info('Detected mode %d near k=%r, determinant residual %g', root.m, root.k, root.residual)
        return cross_validate(events, self.roots(), rc.effective_match_tol)

    def eigfun(self):
        rc = self.run_config
        roots = find_roots(self.medium, rc.mode, rc.k_lo, rc.k_hi, rc.scan_step)
        if rc.root_index >= len(roots):
            raise ConfigError('mode %d has %d roots in (%r, %r), no root number %d' % (
                rc.mode, len(roots), rc.k_lo, rc.k_hi, rc.root_index), 'root_index')
        root = roots[rc.root_index]
        logger.info('Eigenfunction of mode %d at k=%r', root.m, root.k)
        return eigenfunction_profile(self.medium, root, rc.n_r, tuple(rc.ladder))

    def verify(self):
        rc = self.run_config
        context = VerifyContext(self.medium, rc.k_lo, rc.k_hi, rc.verify_points, rc.m_max, rc.verify_tolerance,
                                self.roots())
        report = Report(color=self.tedual_config.color)
        run_checks(report, CheckBase.all_checks(context), self.workers)
        return report
