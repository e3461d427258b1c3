# -*- coding: utf-8 -*-
#
# This file is part of tedual.
# Copyright (c) 2026 the tedual authors. All rights reserved.
# Distributed under the BSD license, see README.md.


"""Spectra of the far-field and modified scattering operators of the disk

The disk is rotation invariant, so every operator here is diagonal in the
Fourier modes e^{im theta}.  In the two-dimensional unitary normalisation

    S = Id + 2ik e^{-i pi/4} / sqrt(8 pi k) F,

mode m carries mu_m = sqrt(8 pi/k) e^{-i pi/4} D_m for F, 1 + 2 D_m for S and
gamma_m = (1 + 2 conj(D_b,m)) (1 + 2 D_m) for the modified operator
(S^b)* S, whose phases delta_hat_m drive the duality.
"""

import cmath
import logging
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .disk import Regime, coefficient_table
from .phases import NotUnimodular, TWO_PI, phase_in_0_2pi, principal_phases  # noqa: F401
from .scaled import NumericalError

logger = logging.getLogger(__name__)

_ROTATION = cmath.exp(-0.25j * math.pi)


class PhaseAtBranchPoint(NumericalError):
    """The Cayley transform is undefined at phase 0"""

    def __init__(self, delta):
        NumericalError.__init__(self)
        self.delta = delta

    def __str__(self):
        return '%s: phase %r outside (0, 2pi)' % (self.__class__.__name__, self.delta)


@dataclass(frozen=True)
class PhaseRecord:
    k: float
    m: int
    gamma: complex
    delta_hat: float
    mu_m: complex
    mu_b_m: complex
    lambda_m: complex


@dataclass(frozen=True)
class StarTrack:
    k: float
    delta_star: float
    argmax_mode: int
    regime: Regime
    M: int
    alternate: Optional[float] = None


def farfield_eigenvalue(k, D):
    return math.sqrt(8.0 * math.pi / k) * _ROTATION * np.asarray(D)


def scattering_eigenvalue(k, mu):
    """Eigenvalue of S for the far-field eigenvalue mu"""
    return 1.0 + 2j * k * _ROTATION / math.sqrt(8.0 * math.pi * k) * np.asarray(mu)


class PhaseTable(object):
    """Phases and operator eigenvalues of modes 0..M at one wavenumber"""

    def __init__(self, k, D, D_b, delta_hat):
        self.k = k
        self.D = np.asarray(D, dtype=complex)
        self.D_b = np.asarray(D_b, dtype=complex)
        self.delta_hat = np.asarray(delta_hat, dtype=float)

    @classmethod
    def from_coefficients(cls, table):
        return cls(table.k, table.D, table.D_b, table.delta_hat)

    @classmethod
    def from_records(cls, records):
        records = sorted(records, key=lambda record: record.m)
        if [record.m for record in records] != list(range(len(records))):
            raise ValueError('records must cover modes 0..M exactly once')
        if len({record.k for record in records}) != 1:
            raise ValueError('records must share a single wavenumber')
        table = cls(records[0].k, [0j] * len(records), [0j] * len(records),
                    [record.delta_hat for record in records])
        table._gamma = np.array([record.gamma for record in records])
        table._mu = np.array([record.mu_m for record in records])
        table._mu_b = np.array([record.mu_b_m for record in records])
        return table

    @property
    def M(self):
        return len(self.delta_hat) - 1

    @property
    def gamma(self):
        if hasattr(self, '_gamma'):
            return self._gamma
        return (1.0 + 2.0 * np.conj(self.D_b)) * (1.0 + 2.0 * self.D)

    @property
    def mu(self):
        if hasattr(self, '_mu'):
            return self._mu
        return farfield_eigenvalue(self.k, self.D)

    @property
    def mu_b(self):
        if hasattr(self, '_mu_b'):
            return self._mu_b
        return farfield_eigenvalue(self.k, self.D_b)

    @property
    def lam(self):
        """Eigenvalues conj(1 + 2 D_b,m) (mu_m - mu_b,m) of the modified far-field operator"""
        return np.conj(scattering_eigenvalue(self.k, self.mu_b)) * (self.mu - self.mu_b)

    def records(self):
        gamma, mu, mu_b, lam = self.gamma, self.mu, self.mu_b, self.lam
        return [PhaseRecord(k=self.k, m=m, gamma=complex(gamma[m]), delta_hat=float(self.delta_hat[m]),
                            mu_m=complex(mu[m]), mu_b_m=complex(mu_b[m]), lambda_m=complex(lam[m]))
                for m in range(self.M + 1)]


def default_modes(cfg, k_hi):
    return max(300, int(math.ceil(k_hi * cfg.R)) + 40)


def check_modes(cfg, k, M):
    if M < math.ceil(k * cfg.R) + 40:
        raise ValueError('M=%d too small for k=%r (need at least ceil(kR) + 40)' % (M, k))


def phase_table(cfg, k, M, background=None):
    return PhaseTable.from_coefficients(coefficient_table(cfg, k, M, background))


def gamma(coeffs):
    return (1.0 + 2.0 * coeffs.D_b_m.conjugate()) * (1.0 + 2.0 * coeffs.D_m)


def delta_star(records, regime):
    """Extremal phase over modes 0..M: max for n > n_b, min of the positive phases for n_b > n

    Ties go to the smaller mode.  At a regime crossing the maximum is
    reported and the minimum kept as the alternate candidate.
    """
    table = records if isinstance(records, PhaseTable) else PhaseTable.from_records(records)
    delta = table.delta_hat

    def largest():
        mode = int(np.argmax(delta))
        return float(delta[mode]), mode

    def smallest():
        positive = delta > 0.0
        if not np.any(positive):
            return TWO_PI, 0
        mode = int(np.argmin(np.where(positive, delta, np.inf)))
        return float(delta[mode]), mode

    if regime is Regime.N_ABOVE_NB:
        value, mode = largest()
        return StarTrack(table.k, value, mode, regime, table.M)
    if regime is Regime.NB_ABOVE_N:
        value, mode = smallest()
        return StarTrack(table.k, value, mode, regime, table.M)
    value, mode = largest()
    alternate, _ = smallest()
    logger.warning('Regime crossing at k=%r, keeping both phase candidates', table.k)
    return StarTrack(table.k, value, mode, regime, table.M, alternate)


def cayley_value(delta_hat):
    if not 0.0 < delta_hat < TWO_PI:
        raise PhaseAtBranchPoint(delta_hat)
    return -1.0 / math.tan(delta_hat / 2.0)


def cayley_spectrum(table):
    """(modes, -cot(delta/2)) for every mode with phase in (0, 2pi)"""
    modes = np.flatnonzero((table.delta_hat > 0.0) & (table.delta_hat < TWO_PI))
    return modes, -1.0 / np.tan(table.delta_hat[modes] / 2.0)


def _kernel_weights(D, difference):
    orders = np.arange(len(D))
    folded = np.where(orders == 0, 1.0, 2.0) * D
    return np.cos(np.multiply.outer(np.atleast_1d(difference), orders)) @ folded


def farfield_kernel(cfg, k, theta_s, theta_i, M):
    """Far-field pattern u_inf(theta_s, theta_i) of the disk, modes |m| <= M"""
    check_modes(cfg, k, M)
    D = coefficient_table(cfg, k, M).D
    value = math.sqrt(2.0 / (math.pi * k)) * _ROTATION * _kernel_weights(D, theta_s - theta_i)
    return complex(value[0])


def farfield_matrix(cfg, k, n_dirs, M):
    """Quadrature matrix (2pi/N) u_inf(theta_i, theta_j) on N equispaced directions"""
    check_modes(cfg, k, M)
    D = coefficient_table(cfg, k, M).D
    angles = TWO_PI * np.arange(n_dirs) / n_dirs
    column = math.sqrt(2.0 / (math.pi * k)) * _ROTATION * _kernel_weights(D, angles)
    index = np.subtract.outer(np.arange(n_dirs), np.arange(n_dirs)) % n_dirs
    return (TWO_PI / n_dirs) * column[index]
