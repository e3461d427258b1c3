# -*- coding: utf-8 -*-
#
# This file is part of tedual.
# Copyright (c) 2026 the tedual authors. All rights reserved.
# Distributed under the BSD license, see README.md.


"""Transmission eigenvalues of the disk from the mode determinant

For Fourier order m the relative transmission problem has a nontrivial
solution exactly when

    V_m(R) k sqrt(n) J'_m(k sqrt(n) R) - V'_m(R) J_m(k sqrt(n) R) = 0.

Roots are bracketed by sign changes on a scan grid and refined by bisection.
"""

import enum
import logging
import math
from dataclasses import dataclass

import numpy as np

from . import specfun
from .disk import background_sequences
from .scaled import ScaledReal
from .worker import run_parallel

logger = logging.getLogger(__name__)

DEFAULT_SCAN_STEP = 1e-3
MAX_SCAN_STEP = 1e-2

# Bisection stops once the bracket is narrower than this
BRACKET_WIDTH = 1e-12
MAX_BISECTIONS = 60

DEDUPLICATE_WIDTH = 1e-9

# Local minima of |det| below this without a sign change are logged
TANGENT_THRESHOLD = 1e-2

# Zeros with |n - n_b(k)| below this are the medium matching the background
MATCHED_MEDIUM_WIDTH = 1e-8


class StepTooCoarse(ValueError):
    """The scan grid is too coarse to separate neighbouring roots"""

    def __init__(self, step):
        ValueError.__init__(self)
        self.step = step

    def __str__(self):
        return '%s: scan step %r exceeds %r' % (self.__class__.__name__, self.step, MAX_SCAN_STEP)


class RootSource(enum.Enum):
    DETERMINANT = 'determinant'
    PHASE_DETECTOR = 'phase_detector'


@dataclass(frozen=True)
class TERoot:
    k: float
    m: int
    residual: float
    multiplicity_hint: int
    source: RootSource = RootSource.DETERMINANT


def determinant_row(cfg, k, m_max, background=None):
    """Normalised determinants of modes 0..m_max at wavenumber k

    Each determinant is divided by max(|V|, |V'|) * max(k sqrt(n) |J'|, |J|),
    which never vanishes, so the values lie in [-2, 2].
    """
    if not k > 0:
        raise ValueError('wavenumber must be positive, got %r' % (k,))
    argument = k * math.sqrt(cfg.n) * cfg.R
    inner = specfun.j_sequence(m_max + 1, argument)
    inner_slope = specfun.derivative(inner, argument) * (k * math.sqrt(cfg.n))
    inner = inner[:m_max + 1]
    if background is None:
        background = background_sequences(cfg, m_max, cfg.R)
    v, vp = background[0][:m_max + 1], background[1][:m_max + 1]
    det = v * inner_slope - vp * inner
    scale = ScaledReal.larger(v, vp) * ScaledReal.larger(inner_slope, inner)
    return (det / scale).to_float()


def determinant(cfg, k, m):
    return float(determinant_row(cfg, k, m)[m])


def bisect_sign_change(func, lo, hi, f_lo, f_hi, width=BRACKET_WIDTH):
    """Shrink a sign-change bracket; returns (midpoint, iterations)"""
    iterations = 0
    while hi - lo > width and iterations < MAX_BISECTIONS:
        middle = 0.5 * (lo + hi)
        f_middle = func(middle)
        iterations += 1
        if f_middle == 0.0:
            return middle, iterations
        if (f_middle < 0.0) == (f_lo < 0.0):
            lo, f_lo = middle, f_middle
        else:
            hi, f_hi = middle, f_middle
    return 0.5 * (lo + hi), iterations


def _scan_grid(k_lo, k_hi, scan_step):
    if not 0 < k_lo < k_hi:
        raise ValueError('need 0 < k_lo < k_hi, got (%r, %r)' % (k_lo, k_hi))
    if not scan_step > 0:
        raise ValueError('scan step must be positive, got %r' % (scan_step,))
    if scan_step > MAX_SCAN_STEP:
        raise StepTooCoarse(scan_step)
    cells = int(math.ceil((k_hi - k_lo) / scan_step))
    return np.linspace(k_lo, k_hi, cells + 1)


def _matches_background(cfg, k):
    return cfg.rho > 0 and abs(cfg.n - cfg.n_b(k)) < MATCHED_MEDIUM_WIDTH


def _roots_from_scan(cfg, m, grid, values):
    def func(k):
        return determinant(cfg, k, m)

    roots = []
    for i in range(len(grid) - 1):
        left, right = values[i], values[i + 1]
        if left == 0.0:
            k = grid[i]
        elif left * right < 0.0:
            k, iterations = bisect_sign_change(func, grid[i], grid[i + 1], left, right)
            logger.debug('Mode %d root %r after %d bisections', m, k, iterations)
        else:
            continue
        if _matches_background(cfg, k):
            logger.debug('Mode %d zero at k=%r where n = n_b(k), not a transmission eigenvalue', m, k)
            continue
        roots.append(TERoot(k=float(k), m=m, residual=abs(func(k)), multiplicity_hint=1 if m == 0 else 2))

    magnitude = np.abs(values)
    for i in range(1, len(grid) - 1):
        tangent = (magnitude[i] < magnitude[i - 1] and magnitude[i] < magnitude[i + 1] and
                   magnitude[i] < TANGENT_THRESHOLD and values[i - 1] * values[i + 1] > 0.0)
        if tangent:
            logger.warning('Near-tangent determinant candidate for m=%d at k=%r (|det|=%g), not returned',
                           m, grid[i], magnitude[i])
    return roots


def find_roots(cfg, m, k_lo, k_hi, scan_step=DEFAULT_SCAN_STEP):
    grid = _scan_grid(k_lo, k_hi, scan_step)
    background = background_sequences(cfg, m, cfg.R)
    values = np.array([determinant_row(cfg, k, m, background)[m] for k in grid])
    roots = _roots_from_scan(cfg, m, grid, values)
    logger.info('Mode %d: %d roots in (%r, %r)', m, len(roots), k_lo, k_hi)
    return sorted(roots, key=lambda root: root.k)


def recommended_modes(cfg, k_hi):
    return int(math.ceil(k_hi * math.sqrt(cfg.n) * cfg.R)) + 20


def all_tes(cfg, k_lo, k_hi, m_max, scan_step=DEFAULT_SCAN_STEP, workers=None):
    """Roots of every mode 0..m_max in the window, sorted by k"""
    if m_max < recommended_modes(cfg, k_hi):
        logger.warning('m_max=%d below ceil(k_hi sqrt(n) R) + 20 = %d', m_max, recommended_modes(cfg, k_hi))
    grid = _scan_grid(k_lo, k_hi, scan_step)
    background = background_sequences(cfg, m_max, cfg.R)
    table = np.array([determinant_row(cfg, k, m_max, background) for k in grid])

    found = []
    for roots in run_parallel(lambda m: _roots_from_scan(cfg, m, grid, table[:, m]), range(m_max + 1), workers):
        for root in roots:
            if not any(other.m == root.m and abs(other.k - root.k) < DEDUPLICATE_WIDTH for other in found):
                found.append(root)
    found.sort(key=lambda root: (root.k, root.m))
    logger.info('%d transmission eigenvalues in (%r, %r)', len(found), k_lo, k_hi)
    return found
