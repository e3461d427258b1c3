# -*- coding: utf-8 -*-
#
# This file is part of tedual.
# Copyright (c) 2026 the tedual authors. All rights reserved.
# Distributed under the BSD license, see README.md.


"""Inside-outside duality: transmission eigenvalues from scattering phases

A sweep tabulates the phases delta_hat_m(k) of the modified scattering
operator and their extremal value delta_star(k).  With n_b = rho/k**2,
delta_star tends to 2pi as k increases to a transmission eigenvalue when
n > n_b, and to 0 as k decreases to one when n_b > n.  On a grid this shows
up as the attaining mode's phase wrapping through 2pi between two points.
"""

import enum
import logging
import math
from dataclasses import dataclass, field, replace
from typing import List, Optional

import numpy as np

from . import specfun
from .disk import Regime, background_sequences, coefficient_table, v_m
from .phases import NotUnimodular, TWO_PI
from .scaled import NonFiniteError, ScaledReal
from .solver import RootSource, TERoot, determinant
from .spectral import check_modes, default_modes, delta_star, phase_table
from .worker import run_parallel

logger = logging.getLogger(__name__)

DEFAULT_BAND = 0.2
DEFAULT_LADDER = (1e-2, 1e-3, 1e-4)
DEFAULT_RADIAL_SAMPLES = 201

# Rows whose |gamma| drifts further than this from 1 abort the sweep
ROW_TOLERANCE = 1e-6

REFINE_DEPTH = 20


class ApproachSide(enum.Enum):
    FROM_BELOW = 'from_below'
    FROM_ABOVE = 'from_above'


@dataclass(eq=False)
class SweepResult:
    cfg: object
    k_grid: np.ndarray
    tables: list
    star_track: list
    M: int
    k_lo: float
    k_hi: float
    n_points: int

    @property
    def grid_step(self):
        return (self.k_hi - self.k_lo) / (self.n_points - 1)

    def phase_matrix(self):
        return np.vstack([table.delta_hat for table in self.tables])


@dataclass(frozen=True)
class DetectedTE:
    k_estimate: float
    approach_side: ApproachSide
    mode: int
    peak_phase: float
    matched_root: Optional[TERoot] = None
    mismatch: Optional[float] = None


@dataclass
class CrossValidation:
    detected: List[DetectedTE]
    roots: List[TERoot]
    matched: List[DetectedTE] = field(default_factory=list)
    false_positives: List[DetectedTE] = field(default_factory=list)
    missed: List[TERoot] = field(default_factory=list)

    @property
    def ok(self):
        return not self.false_positives and not self.missed

    @property
    def verdict(self):
        return '%d detected / %d roots: %d matched, %d false positives, %d missed' % (
            len(self.detected), len(self.roots), len(self.matched), len(self.false_positives), len(self.missed))


@dataclass(frozen=True)
class LadderStep:
    offset: float
    k: float
    values: np.ndarray
    distance: float


@dataclass(eq=False)
class RadialProfile:
    r_samples: np.ndarray
    values: np.ndarray
    mode: int
    k: float
    ladder: List[LadderStep] = field(default_factory=list)


def _sweep_row(cfg, k, M, background):
    table = phase_table(cfg, k, M, background)
    gamma = table.gamma
    if not np.all(np.isfinite(gamma)):
        raise NonFiniteError(k)
    drift = np.abs(np.abs(gamma) - 1.0)
    if np.max(drift) > ROW_TOLERANCE:
        worst = int(np.argmax(drift))
        logger.error('Unitarity lost at k=%r, m=%d', k, worst)
        raise NotUnimodular(complex(gamma[worst]))
    return table, delta_star(table, cfg.regime(k))


def sweep(cfg, k_lo, k_hi, n_points, M=None, workers=None, progress=None):
    """Tabulate delta_hat_m(k) for m = 0..M and delta_star(k) on an even k grid"""
    if not 0 < k_lo < k_hi:
        raise ValueError('need 0 < k_lo < k_hi, got (%r, %r)' % (k_lo, k_hi))
    if n_points < 2:
        raise ValueError('need at least two grid points, got %r' % (n_points,))
    if M is None:
        M = default_modes(cfg, k_hi)
    check_modes(cfg, k_hi, M)

    k_grid = np.linspace(k_lo, k_hi, n_points)
    background = background_sequences(cfg, M, cfg.R)
    logger.info('Sweeping %d wavenumbers in [%r, %r] with modes 0..%d', n_points, k_lo, k_hi, M)

    tables, stars = [], []
    every = max(1, n_points // 20)
    for index, (table, star) in enumerate(run_parallel(lambda k: _sweep_row(cfg, k, M, background),
                                                       k_grid, workers)):
        tables.append(table)
        stars.append(star)
        if progress is not None and ((index + 1) % every == 0 or index + 1 == n_points):
            progress(index + 1, n_points)

    return SweepResult(cfg=cfg, k_grid=k_grid, tables=tables, star_track=stars, M=M,
                       k_lo=k_lo, k_hi=k_hi, n_points=n_points)


def _mode_phase(cfg, k, m):
    return float(coefficient_table(cfg, k, m).delta_hat[m])


def _refine(cfg, mode, lo, hi, width):
    # the attaining mode's phase sits above pi before the wrap and below it after
    while hi - lo > width:
        middle = 0.5 * (lo + hi)
        if _mode_phase(cfg, middle, mode) > math.pi:
            lo = middle
        else:
            hi = middle
    return 0.5 * (lo + hi)


def detect_tes(result, detection_band=DEFAULT_BAND, refine=False):
    """Phase-reset events of delta_star along the sweep"""
    if not 0 < detection_band <= 1:
        raise ValueError('detection band must lie in (0, 1], got %r' % (detection_band,))
    phases = result.phase_matrix()
    stars = result.star_track
    events = []
    for i in range(len(stars) - 1):
        left, right = stars[i], stars[i + 1]
        if left.regime is not right.regime or left.regime is Regime.CROSSING:
            continue
        if left.regime is Regime.N_ABOVE_NB:
            if left.delta_star < TWO_PI - detection_band:
                continue
            mode, side, peak = left.argmax_mode, ApproachSide.FROM_BELOW, left.delta_star
        else:
            if right.delta_star >= detection_band:
                continue
            mode, side, peak = right.argmax_mode, ApproachSide.FROM_ABOVE, right.delta_star
        star_reset = left.delta_star - right.delta_star > math.pi
        mode_reset = phases[i, mode] - phases[i + 1, mode] > math.pi
        if not (star_reset or mode_reset):
            continue

        lo, hi = result.k_grid[i], result.k_grid[i + 1]
        if refine:
            k_estimate = _refine(result.cfg, mode, lo, hi, result.grid_step / 2 ** REFINE_DEPTH)
        else:
            k_estimate = 0.5 * (lo + hi)
        logger.info('Phase reset of mode %d near k=%r (%s)', mode, k_estimate, side.value)
        events.append(DetectedTE(k_estimate=float(k_estimate), approach_side=side, mode=mode,
                                 peak_phase=float(peak)))
    return events


def cross_validate(detected, roots, tol):
    """Pair detections with determinant roots, nearest first, each used once"""
    pairs = sorted((abs(event.k_estimate - root.k), i, j)
                   for i, event in enumerate(detected) for j, root in enumerate(roots)
                   if abs(event.k_estimate - root.k) <= tol)
    used_events, used_roots, matches = set(), set(), {}
    for distance, i, j in pairs:
        if i in used_events or j in used_roots:
            continue
        used_events.add(i)
        used_roots.add(j)
        matches[i] = j

    annotated = []
    for i, event in enumerate(detected):
        if i in matches:
            root = roots[matches[i]]
            event = replace(event, matched_root=root, mismatch=abs(event.k_estimate - root.k))
        annotated.append(event)

    report = CrossValidation(detected=annotated, roots=list(roots))
    report.matched = [event for i, event in enumerate(annotated) if i in matches]
    report.false_positives = [event for i, event in enumerate(annotated) if i not in matches]
    report.missed = [root for j, root in enumerate(roots) if j not in used_roots]
    logger.info('Cross validation: %s', report.verdict)
    return report


def detected_roots(cfg, events):
    """Detector events as roots, each with the determinant residual at its estimate"""
    return [TERoot(k=event.k_estimate, m=event.mode, residual=abs(determinant(cfg, event.k_estimate, event.mode)),
                   multiplicity_hint=1 if event.mode == 0 else 2, source=RootSource.PHASE_DETECTOR)
            for event in events]


def radial_grid(R, n_r):
    """Samples on [0, R] and composite Simpson weights with area element 2 pi r"""
    if n_r < 3 or n_r % 2 == 0:
        raise ValueError('need an odd number of radial samples >= 3, got %r' % (n_r,))
    r = np.linspace(0.0, R, n_r)
    simpson = np.ones(n_r)
    simpson[1:-1:2] = 4.0
    simpson[2:-1:2] = 2.0
    return r, simpson * (R / (n_r - 1)) / 3.0 * TWO_PI * r


def discrete_norm(values, weights):
    return math.sqrt(math.fsum(weights * np.abs(values) ** 2))


def _peak_exponent(values):
    return int(np.max(values.effective_exponent))


def _inner_field(m, scale, radii):
    parts = []
    for radius in radii:
        if radius == 0.0:
            parts.append(ScaledReal(1.0 if m == 0 else 0.0))
        else:
            parts.append(specfun.bessel_j(m, scale * radius))
    return ScaledReal.concatenate(parts)


def eigenfunction_profile(cfg, root, n_r=DEFAULT_RADIAL_SAMPLES, offsets=DEFAULT_LADDER):
    """Normalised background profile V_m/|V_m| at a root, with its convergence ladder

    Each ladder step at k_j = k_root -+ offset holds the radiating part
    (B_m/B_b,m)(k_j) J_m(k_j sqrt(n) r)/|V_m| - V_m(r)/|V_m| and its distance
    to the same quantity at the root.
    """
    m = root.m
    regime = cfg.definite_regime(root.k)
    r, weights = radial_grid(cfg.R, n_r)
    background = ScaledReal.concatenate([v_m(cfg, m, radius) for radius in r])
    top = _peak_exponent(background)
    relative = (background * ScaledReal(1.0, -top)).to_float()
    norm = discrete_norm(relative, weights)
    profile = relative / norm

    sqrt_n = math.sqrt(cfg.n)

    def radiating(k):
        table = coefficient_table(cfg, k, m)
        ratio = table.scaled_B[m] / table.scaled_B_b[m]
        inner = ratio * _inner_field(m, k * sqrt_n, r)
        return (inner * ScaledReal(1.0, -top)).to_complex() / norm - profile

    limit = radiating(root.k)
    direction = -1.0 if regime is Regime.N_ABOVE_NB else 1.0
    ladder = []
    for offset in offsets:
        k = root.k + direction * offset
        values = radiating(k)
        ladder.append(LadderStep(offset=offset, k=k, values=values,
                                 distance=discrete_norm(values - limit, weights)))
        logger.debug('Ladder offset %g: distance %g', offset, ladder[-1].distance)

    return RadialProfile(r_samples=r, values=np.abs(profile), mode=m, k=root.k, ladder=ladder)
