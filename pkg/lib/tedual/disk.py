# -*- coding: utf-8 -*-
#
# This file is part of tedual.
# Copyright (c) 2026 the tedual authors. All rights reserved.
# Distributed under the BSD license, see README.md.


"""The penetrable disk and its Fourier-mode scattering coefficients

The disk of radius R carries a constant index n; the artificial background
carries n_b(k) = rho / k**2 inside the disk and 1 outside.  For every Fourier
order m the incident mode J_m(kr) e^{im theta} is scattered into

  * B_m J_m(k sqrt(n) r)       inside, D_m H1_m(kr)       outside (true medium)
  * B_b,m V_m(r)               inside, D_b,m H1_m(kr)     outside (background)

with the background radial function V_m(r) = J_m(sqrt(rho) r) for rho > 0,
r**m for rho = 0 and the real I_m(sqrt(-rho) r) for rho < 0.  Coefficients of
order -m equal those of order m, so only m >= 0 is exposed.
"""

import enum
import logging
import math
from dataclasses import dataclass

import numpy as np

from . import specfun
from .phases import mode_phases
from .scaled import NumericalError, ScaledComplex, ScaledReal, UNDERFLOW_EXPONENT

logger = logging.getLogger(__name__)

# |n - rho/k**2| below this is treated as a regime crossing
CROSSING_TOLERANCE = 1e-12


class ResonanceDenominator(NumericalError):
    """A coefficient denominator vanished at real k"""

    def __init__(self, k, m):
        NumericalError.__init__(self)
        self.k = k
        self.m = m

    def __str__(self):
        return '%s: zero denominator at k=%r, m=%r' % (self.__class__.__name__, self.k, self.m)


class RegimeCrossing(NumericalError):
    """n equals n_b(k), so neither phase ordering applies"""

    def __init__(self, k):
        NumericalError.__init__(self)
        self.k = k

    def __str__(self):
        return '%s: n = rho/k**2 at k=%r' % (self.__class__.__name__, self.k)


class Regime(enum.Enum):
    N_ABOVE_NB = 'n_above_nb'
    NB_ABOVE_N = 'nb_above_n'
    CROSSING = 'crossing'


@dataclass(frozen=True)
class MediumConfig:
    n: float
    R: float
    rho: float = 0.0

    def __post_init__(self):
        if not self.n > 0:
            raise ValueError('refractive index n must be positive, got %r' % (self.n,))
        if not self.R > 0:
            raise ValueError('disk radius R must be positive, got %r' % (self.R,))
        if not math.isfinite(self.rho):
            raise ValueError('rho must be finite, got %r' % (self.rho,))

    def n_b(self, k):
        return self.rho / k ** 2

    def regime(self, k):
        contrast = self.n - self.n_b(k)
        if abs(contrast) < CROSSING_TOLERANCE:
            return Regime.CROSSING
        return Regime.N_ABOVE_NB if contrast > 0 else Regime.NB_ABOVE_N

    def definite_regime(self, k):
        regime = self.regime(k)
        if regime is Regime.CROSSING:
            raise RegimeCrossing(k)
        return regime


@dataclass(frozen=True)
class ModeCoefficients:
    k: float
    m: int
    B_m: complex
    D_m: complex
    B_b_m: complex
    D_b_m: complex
    gamma_m: complex
    delta_hat_m: float


def background_sequences(cfg, top, r):
    """(V_0..V_top, V'_0..V'_top) at radius r as ScaledReal arrays"""
    if not 0 <= r <= 10 * cfg.R:
        raise ValueError('radius %r outside [0, 10 R]' % (r,))
    orders = np.arange(top + 1)
    if cfg.rho == 0.0:
        if r == 0.0:
            value = np.where(orders == 0, 1.0, 0.0)
            slope = np.where(orders == 1, 1.0, 0.0)
            return ScaledReal(value), ScaledReal(slope)
        fraction, binary = math.frexp(r)
        value = ScaledReal(fraction ** orders, binary * orders)
        slope = ScaledReal(orders * fraction ** (orders - 1.0), binary * (orders - 1))
        return value, slope
    scale = math.sqrt(abs(cfg.rho))
    modified = cfg.rho < 0
    if r == 0.0:
        value = np.where(orders == 0, 1.0, 0.0)
        slope = np.where(orders == 1, scale / 2.0, 0.0)
        return ScaledReal(value), ScaledReal(slope)
    if modified:
        values = specfun.i_sequence(top + 1, scale * r)
    else:
        values = specfun.j_sequence(top + 1, scale * r)
    slope = specfun.derivative(values, scale * r, modified=modified) * scale
    return values[:top + 1], slope


def v_m(cfg, m, r):
    return background_sequences(cfg, m, r)[0][m]


def v_m_prime(cfg, m, r):
    return background_sequences(cfg, m, r)[1][m]


class CoefficientTable(object):
    """Coefficients of modes 0..M at one wavenumber

    B, D, B_b, D_b are ScaledComplex arrays straight from the closed-form
    quotients; the descaled complex arrays follow the underflow policy
    (magnitudes below 2**-1000 become exact zeros).
    """

    def __init__(self, k, B, D, B_b, D_b):
        self.k = k
        self.scaled_B = B
        self.scaled_D = D
        self.scaled_B_b = B_b
        self.scaled_D_b = D_b
        self.B = B.to_complex(UNDERFLOW_EXPONENT)
        self.D = D.to_complex(UNDERFLOW_EXPONENT)
        self.B_b = B_b.to_complex(UNDERFLOW_EXPONENT)
        self.D_b = D_b.to_complex(UNDERFLOW_EXPONENT)
        self.gamma = (1.0 + 2.0 * np.conj(self.D_b)) * (1.0 + 2.0 * self.D)
        self.delta_hat = mode_phases(D, D_b, self.gamma)

    @property
    def M(self):
        return len(self.D) - 1

    def row(self, m):
        return ModeCoefficients(k=self.k, m=m, B_m=complex(self.B[m]), D_m=complex(self.D[m]),
                                B_b_m=complex(self.B_b[m]), D_b_m=complex(self.D_b[m]),
                                gamma_m=complex(self.gamma[m]), delta_hat_m=float(self.delta_hat[m]))


def coefficient_table(cfg, k, M, background=None):
    """All mode coefficients 0..M at wavenumber k

    background may carry a precomputed background_sequences(cfg, M, R); it
    does not depend on k.
    """
    if not k > 0:
        raise ValueError('wavenumber must be positive, got %r' % (k,))
    R = cfg.R
    sqrt_n = math.sqrt(cfg.n)
    j, y = specfun.jy_sequences(M + 1, k * R)
    jp = specfun.derivative(j, k * R)
    yp = specfun.derivative(y, k * R)
    j, y = j[:M + 1], y[:M + 1]
    jn_all = specfun.j_sequence(M + 1, k * sqrt_n * R)
    jnp = specfun.derivative(jn_all, k * sqrt_n * R)
    jn = jn_all[:M + 1]
    if background is None:
        background = background_sequences(cfg, M, R)
    v, vp = background[0][:M + 1], background[1][:M + 1]

    h = ScaledComplex(j, y)
    hp = ScaledComplex(jp, yp)

    denominator = -jn * hp + sqrt_n * jnp * h
    B = (-hp * j + h * jp) / _checked(denominator, k)
    D = ScaledComplex(-sqrt_n * jnp * j + jp * jn, np.zeros(M + 1)) / denominator

    denominator_b = -(k * v) * hp + vp * h
    B_b = (-(k * hp) * j + h * (k * jp)) / _checked(denominator_b, k)
    D_b = ScaledComplex(-vp * j + (k * jp) * v, np.zeros(M + 1)) / denominator_b

    return CoefficientTable(k, B, D, B_b, D_b)


def _checked(denominator, k):
    zero = np.flatnonzero(denominator.is_zero())
    if len(zero):
        raise ResonanceDenominator(k, int(zero[0]))
    return denominator


def mode_coefficients(cfg, k, m):
    return coefficient_table(cfg, k, m).row(m)


def true_coeffs(cfg, k, m):
    row = mode_coefficients(cfg, k, m)
    return row.B_m, row.D_m


def background_coeffs(cfg, k, m):
    row = mode_coefficients(cfg, k, m)
    return row.B_b_m, row.D_b_m
