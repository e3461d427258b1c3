# -*- coding: utf-8 -*-
#
# This file is part of tedual.
# Copyright (c) 2026 the tedual authors. All rights reserved.
# Distributed under the BSD license, see README.md.


"""Invariant suites run by the verify command"""

import logging
import math

import numpy as np

from . import specfun
from .disk import Regime
from .phases import TWO_PI
from .spectral import cayley_spectrum, delta_star, phase_table, scattering_eigenvalue
from .util import TrackSubClasses

logger = logging.getLogger(__name__)

WRONSKIAN_ORDERS = 310
WRONSKIAN_ARGUMENTS = (0.1, 60.0)

# Accumulation is checked on modes from here up
ACCUMULATION_ORDER = 100
ACCUMULATION_MARGIN = 0.05


class VerifyContext(object):
    """Phase tables and roots on the verification grid, computed once"""

    def __init__(self, cfg, k_lo, k_hi, n_points, M, tolerance, roots):
        self.cfg = cfg
        self.tolerance = tolerance
        self.M = M
        self.n_points = n_points
        self.k_grid = np.linspace(k_lo, k_hi, n_points)
        self.roots = roots
        self.tables = [phase_table(cfg, k, M) for k in self.k_grid]
        self.regimes = [cfg.regime(k) for k in self.k_grid]


class CheckBase(object, metaclass=TrackSubClasses):
    __subclasses__ = {}

    def __init__(self, context):
        self.context = context

    def __repr__(self):
        return '<%s>' % (self.__kind__,)

    @classmethod
    def check_documentation(cls):
        return '\n'.join('  * %s - %s' % (sc.__kind__, sc.__doc__) for sc in TrackSubClasses.sorted_by_kind(cls))

    @classmethod
    def all_checks(cls, context):
        return [subclass(context) for subclass in TrackSubClasses.sorted_by_kind(cls)]

    def evaluate(self):
        """Return (worst error, detail)"""
        raise NotImplementedError()


class WronskianCheck(CheckBase):
    """J_m Y'_m - J'_m Y_m = 2/(pi x) for m <= 310"""

    __kind__ = 'wronskian'

    def evaluate(self):
        worst = 0.0
        for x in np.linspace(WRONSKIAN_ARGUMENTS[0], WRONSKIAN_ARGUMENTS[1], self.context.n_points):
            j, y = specfun.jy_sequences(WRONSKIAN_ORDERS + 1, x)
            jp, yp = specfun.derivative(j, x), specfun.derivative(y, x)
            j, y = j[:WRONSKIAN_ORDERS + 1], y[:WRONSKIAN_ORDERS + 1]
            wronskian = (j * yp - jp * y).to_float()
            worst = max(worst, float(np.max(np.abs(wronskian * math.pi * x / 2.0 - 1.0))))
        return worst, 'orders 0..%d, %d arguments' % (WRONSKIAN_ORDERS, self.context.n_points)


class UnitarityCheck(CheckBase):
    """|1 + 2D_m| = |1 + 2D_b,m| = |gamma_m| = 1"""

    __kind__ = 'unitarity'

    def evaluate(self):
        worst = 0.0
        for table in self.context.tables:
            for values in (1.0 + 2.0 * table.D, 1.0 + 2.0 * table.D_b, table.gamma):
                worst = max(worst, float(np.max(np.abs(np.abs(values) - 1.0))))
        return worst, '%d wavenumbers, modes 0..%d' % (len(self.context.tables), self.context.M)


class CircleCheck(CheckBase):
    """Far-field and modified far-field eigenvalues lie on the unitary circle"""

    __kind__ = 'circle'

    def evaluate(self):
        worst = 0.0
        for table in self.context.tables:
            for values in (table.mu, table.lam):
                worst = max(worst, float(np.max(np.abs(np.abs(scattering_eigenvalue(table.k, values)) - 1.0))))
        return worst, '%d wavenumbers' % (len(self.context.tables),)


class CayleyCheck(CheckBase):
    """The extremal phase attains the extremal Cayley value"""

    __kind__ = 'cayley'

    def evaluate(self):
        worst, compared = 0.0, 0
        for table, regime in zip(self.context.tables, self.context.regimes):
            if regime is Regime.CROSSING:
                continue
            modes, values = cayley_spectrum(table)
            if not len(modes):
                continue
            star = delta_star(table, regime)
            pick = np.argmax(values) if regime is Regime.N_ABOVE_NB else np.argmin(values)
            worst = max(worst, abs(table.delta_hat[modes[pick]] - star.delta_star))
            compared += 1
        return worst, '%d wavenumbers compared' % (compared,)


class AccumulationCheck(CheckBase):
    """Phases of modes >= 100 sit at 0 (n > n_b) or 2pi (n_b > n) away from eigenvalues"""

    __kind__ = 'accumulation'

    def evaluate(self):
        worst, compared = 0.0, 0
        if self.context.M < ACCUMULATION_ORDER:
            return worst, 'fewer than %d modes' % (ACCUMULATION_ORDER,)
        for table, regime in zip(self.context.tables, self.context.regimes):
            if regime is Regime.CROSSING:
                continue
            if any(abs(table.k - root.k) <= ACCUMULATION_MARGIN for root in self.context.roots):
                continue
            tail = table.delta_hat[ACCUMULATION_ORDER:]
            distance = tail if regime is Regime.N_ABOVE_NB else TWO_PI - tail
            worst = max(worst, float(np.max(distance)))
            compared += 1
        return worst, '%d wavenumbers away from eigenvalues' % (compared,)
