# -*- coding: utf-8 -*-
#
# This file is part of tedual.
# Copyright (c) 2026 the tedual authors. All rights reserved.
# Distributed under the BSD license, see README.md.


"""Phases of unimodular eigenvalues on [0, 2pi)"""

import logging
import math

import numpy as np

from .scaled import NumericalError

logger = logging.getLogger(__name__)

TWO_PI = 2.0 * math.pi

# Largest double below 2pi; phases never round up onto the branch point
BELOW_TWO_PI = float(np.nextafter(TWO_PI, 0.0))

UNIMODULAR_TOLERANCE = 1e-6

# Below 2**SMALL_ANGLE_EXPONENT the phase of 1 + 2D is taken as 2 Im(D)
SMALL_ANGLE_EXPONENT = -30


class NotUnimodular(NumericalError):
    """An eigenvalue of a unitary operator left the unit circle"""

    def __init__(self, value):
        NumericalError.__init__(self)
        self.value = value

    def __str__(self):
        return '%s: |%r| = %r' % (self.__class__.__name__, self.value, abs(self.value))


def principal_phases(gamma):
    """Vectorised arg(gamma) mapped to [0, 2pi), without the modulus check"""
    gamma = np.asarray(gamma, dtype=complex)
    angle = np.angle(gamma / np.where(gamma == 0, 1.0, abs(gamma)))
    angle = np.where(angle < 0.0, angle + TWO_PI, angle)
    return np.where(angle >= TWO_PI, BELOW_TWO_PI, angle)


def phase_in_0_2pi(gamma):
    modulus = abs(complex(gamma))
    if not abs(modulus - 1.0) <= UNIMODULAR_TOLERANCE:
        raise NotUnimodular(complex(gamma))
    return float(principal_phases(gamma))


def mode_phases(d, d_b, gamma):
    """Phases of gamma_m = (1 + 2 conj(D_b,m)) (1 + 2 D_m) for all modes

    d and d_b are ScaledComplex arrays.  When both coefficients are tiny the
    phase is accumulated as 2 Im(D_m) - 2 Im(D_b,m) in scaled arithmetic, so a
    negative phase far below double resolution still lands just under 2pi.
    """
    phases = principal_phases(gamma)
    tiny = (d.max_exponent() < SMALL_ANGLE_EXPONENT) & (d_b.max_exponent() < SMALL_ANGLE_EXPONENT)
    if not np.any(tiny):
        return phases
    small = d.imag * 2.0 - d_b.imag * 2.0
    value = small.to_float()
    wrapped = np.minimum(TWO_PI + value, BELOW_TWO_PI)
    small_phase = np.where(small.sign() < 0, wrapped, np.abs(value))
    return np.where(tiny, small_phase, phases)
