# -*- coding: utf-8 -*-
#
# This file is part of tedual.
# Copyright (c) 2026 the tedual authors. All rights reserved.
# Distributed under the BSD license, see README.md.


"""Cylinder functions J_m, Y_m, H1_m, I_m of integer order in scaled form

All orders 0..top of one argument are produced by a single recurrence pass:

  * J by Miller's backward recurrence, normalised with J_0 + 2 sum J_2k = 1
  * Y_0 and Y_1 from the Neumann series over that J sequence, then Y_m by
    upward recurrence
  * I by backward recurrence, normalised with I_0 + 2 sum I_k = exp(x)

Running values are rescaled by 2**-500 whenever they pass 2**500, and every
stored value remembers its scale, so the sequences come back as ScaledReal
arrays.  Negative orders are not exposed; callers apply (-1)**m.
"""

import logging
import math

import numpy as np

from .scaled import ScaledReal, ScaledComplex

logger = logging.getLogger(__name__)

MAX_ORDER = 400
MAX_ARGUMENT = 1e3

# Below this argument the leading term of the power series is used
ARGUMENT_FLOOR = 1e-12

EULER_GAMMA = 0.5772156649015329

_RESCALE = 500
_BIG = 2.0 ** _RESCALE
_LN2 = math.log(2.0)


class DomainError(ValueError):
    """Order or argument outside the supported domain"""

    def __init__(self, order, argument):
        ValueError.__init__(self)
        self.order = order
        self.argument = argument

    def __str__(self):
        return '%s: order %r, argument %r (need 0 <= m <= %d, 0 < x <= %g)' % (
            self.__class__.__name__, self.order, self.argument, MAX_ORDER, MAX_ARGUMENT)


def _check(top, x, limit=MAX_ORDER):
    if top != int(top) or not 0 <= top <= limit:
        raise DomainError(top, x)
    if not 0 < x <= MAX_ARGUMENT:
        raise DomainError(top, x)


def _start_order(top, x):
    reach = max(top, int(x))
    start = reach + int(math.sqrt(80.0 * (reach + 1))) + 32
    return start + start % 2


def _backward(x, top, modified):
    start = _start_order(top, x)
    values = [0.0] * (start + 1)
    offsets = [0] * (start + 1)
    upper, current, offset = 0.0, 1.0, 0
    values[start] = current
    ratio = 2.0 / x
    sign = 1.0 if modified else -1.0
    for order in range(start, 0, -1):
        upper, current = current, order * ratio * current + sign * upper
        if abs(current) > _BIG:
            current = math.ldexp(current, -_RESCALE)
            upper = math.ldexp(upper, -_RESCALE)
            offset += _RESCALE
        values[order - 1] = current
        offsets[order - 1] = offset
    values = np.array(values)
    offsets = np.array(offsets, dtype=np.int64) - offset
    return values, offsets


def _aligned(values, offsets):
    return np.ldexp(values, np.maximum(offsets, -1100).astype(np.int32))


def _miller_j(x, top):
    values, offsets = _backward(x, top, modified=False)
    weights = np.full(len(values), 2.0)
    weights[0] = 1.0
    weights[1::2] = 0.0
    total = math.fsum(weights * _aligned(values, offsets))
    return ScaledReal(values / total, offsets)


def _exp(x):
    if x < 700.0:
        return ScaledReal(math.exp(x))
    return ScaledReal.from_log2(1.0, x / _LN2)


def _miller_i(x, top):
    values, offsets = _backward(x, top, modified=True)
    weights = np.full(len(values), 2.0)
    weights[0] = 1.0
    total = math.fsum(weights * _aligned(values, offsets))
    return ScaledReal(values / total, offsets) * _exp(x)


def _neumann_y01(x, j):
    values = j.to_float()
    count = (len(values) - 2) // 2
    k = np.arange(1, count + 1)
    signs = np.where(k % 2 == 0, 1.0, -1.0)
    log_term = math.log(x / 2.0) + EULER_GAMMA
    y0 = (2.0 / math.pi) * log_term * values[0] \
        - (4.0 / math.pi) * math.fsum(signs * values[2 * k] / k)
    y1 = (2.0 / math.pi) * log_term * values[1] - (2.0 / math.pi) * values[0] / x \
        + (2.0 / math.pi) * math.fsum(signs * (values[2 * k - 1] - values[2 * k + 1]) / k)
    return y0, y1


def _upward_y(x, top, y0, y1):
    values, offsets = [y0], [0]
    if top >= 1:
        values.append(y1)
        offsets.append(0)
    lower, current, offset = y0, y1, 0
    ratio = 2.0 / x
    for order in range(1, top):
        lower, current = current, order * ratio * current - lower
        if abs(current) > _BIG:
            current = math.ldexp(current, -_RESCALE)
            lower = math.ldexp(lower, -_RESCALE)
            offset += _RESCALE
        values.append(current)
        offsets.append(offset)
    return ScaledReal(np.array(values), np.array(offsets, dtype=np.int64))


def _leading_j(top, x):
    orders = np.arange(top + 1)
    lgammas = np.array([math.lgamma(m + 1.0) for m in orders])
    return ScaledReal.from_log2(1.0, orders * math.log2(x / 2.0) - lgammas / _LN2)


def _leading_y(top, x):
    y0 = ScaledReal((2.0 / math.pi) * (math.log(x / 2.0) + EULER_GAMMA))
    if top == 0:
        return ScaledReal.concatenate([y0])
    orders = np.arange(1, top + 1)
    lgammas = np.array([math.lgamma(float(m)) for m in orders])
    rest = ScaledReal.from_log2(-1.0, lgammas / _LN2 + orders * math.log2(2.0 / x) - math.log2(math.pi))
    return ScaledReal.concatenate([y0, rest])


def j_sequence(top, x):
    """J_0(x) .. J_top(x) as a ScaledReal array"""
    _check(top, x, MAX_ORDER + 1)
    if x < ARGUMENT_FLOOR:
        return _leading_j(top, x)
    return _miller_j(x, top)[:top + 1]


def jy_sequences(top, x):
    """(J_0..J_top, Y_0..Y_top) at x, sharing one backward pass"""
    _check(top, x, MAX_ORDER + 1)
    if x < ARGUMENT_FLOOR:
        return _leading_j(top, x), _leading_y(top, x)
    j = _miller_j(x, top)
    y0, y1 = _neumann_y01(x, j)
    return j[:top + 1], _upward_y(x, top, y0, y1)


def y_sequence(top, x):
    return jy_sequences(top, x)[1]


def i_sequence(top, x):
    """I_0(x) .. I_top(x) as a ScaledReal array"""
    _check(top, x, MAX_ORDER + 1)
    if x < ARGUMENT_FLOOR:
        return _leading_j(top, x)
    return _miller_i(x, top)[:top + 1]


def derivative(sequence, x, modified=False):
    """Derivatives of orders 0..len-2 from function values of orders 0..len-1

    Uses C'_m = C_{m-1} - (m/x) C_m, with C'_0 = -C_1 (J, Y) or I'_0 = I_1.
    """
    orders = np.arange(1, len(sequence) - 1, dtype=float)
    first = sequence[1] if modified else -sequence[1]
    rest = sequence[:-2] - sequence[1:-1] * (orders / x)
    return ScaledReal.concatenate([first, rest])


def bessel_j(m, x):
    _check(m, x)
    return j_sequence(m, x)[m]


def bessel_j_prime(m, x):
    _check(m, x)
    return derivative(j_sequence(m + 1, x), x)[m]


def bessel_y(m, x):
    _check(m, x)
    return y_sequence(m, x)[m]


def bessel_y_prime(m, x):
    _check(m, x)
    return derivative(y_sequence(m + 1, x), x)[m]


def hankel1(m, x):
    _check(m, x)
    j, y = jy_sequences(m, x)
    return ScaledComplex(j[m], y[m])


def hankel1_prime(m, x):
    _check(m, x)
    j, y = jy_sequences(m + 1, x)
    return ScaledComplex(derivative(j, x)[m], derivative(y, x)[m])


def bessel_i(m, x):
    _check(m, x)
    return i_sequence(m, x)[m]


def bessel_i_prime(m, x):
    _check(m, x)
    return derivative(i_sequence(m + 1, x), x, modified=True)[m]
