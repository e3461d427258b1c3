# -*- coding: utf-8 -*-
#
# This file is part of tedual.
# Copyright (c) 2026 the tedual authors. All rights reserved.
# Distributed under the BSD license, see README.md.


"""Mantissa/exponent arithmetic for values outside the double range

Cylinder functions of order ~300 at arguments of a few units range from
2**-1600 to 2**+1600.  A ScaledReal keeps a double mantissa in [1, 2) and a
separate integer binary exponent, so products such as J_m(x) * Y_m(x) stay
finite.  Both fields may be numpy arrays; every operation then acts
elementwise, which is how whole order sequences are processed at once.
"""

import logging

import numpy as np

logger = logging.getLogger(__name__)

# Exponent given to zero when aligning, so it never wins
ZERO_EXPONENT = -(1 << 40)

# Magnitudes below 2**UNDERFLOW_EXPONENT count as exact zero when descaling
UNDERFLOW_EXPONENT = -1000

_MAX_SHIFT = 1100


class NumericalError(ArithmeticError):
    """Base class for failures of the numerical pipeline"""


class NonFiniteError(NumericalError):
    """NaN or infinity reached the scaled representation"""

    def __init__(self, value):
        NumericalError.__init__(self)
        self.value = value

    def __str__(self):
        return '%s: non-finite value %r' % (self.__class__.__name__, self.value)


def _is_complex(value):
    if isinstance(value, (ScaledReal, ScaledComplex)):
        return isinstance(value, ScaledComplex)
    return np.iscomplexobj(value)


def _shift(mantissa, shift):
    shift = np.maximum(shift, -_MAX_SHIFT)
    return np.ldexp(mantissa, np.asarray(shift).astype(np.int32))


class ScaledReal(object):
    """mantissa * 2**exponent with |mantissa| in [1, 2), or mantissa == 0"""

    __slots__ = ('mantissa', 'exponent')
    __array_ufunc__ = None

    def __init__(self, value, exponent=0):
        value = np.asarray(value, dtype=float)
        if not np.all(np.isfinite(value)):
            raise NonFiniteError(value)
        fraction, binary = np.frexp(value)
        zero = fraction == 0
        self.mantissa = np.where(zero, 0.0, 2.0 * fraction)
        self.exponent = np.where(zero, 0, np.asarray(exponent, dtype=np.int64) + binary - 1)

    @classmethod
    def _raw(cls, mantissa, exponent):
        result = cls.__new__(cls)
        result.mantissa = mantissa
        result.exponent = exponent
        return result

    @classmethod
    def from_log2(cls, sign, log2_magnitude):
        """Build sign * 2**log2_magnitude without leaving the double range"""
        log2_magnitude = np.asarray(log2_magnitude, dtype=float)
        whole = np.floor(log2_magnitude)
        return cls(sign * np.exp2(log2_magnitude - whole), whole.astype(np.int64))

    @classmethod
    def concatenate(cls, parts):
        return cls._raw(np.concatenate([np.atleast_1d(part.mantissa) for part in parts]),
                        np.concatenate([np.atleast_1d(part.exponent) for part in parts]))

    @classmethod
    def larger(cls, first, second):
        """Elementwise max(|first|, |second|)"""
        left, right = first.effective_exponent, second.effective_exponent
        pick = (left > right) | ((left == right) & (abs(first.mantissa) >= abs(second.mantissa)))
        return cls._raw(np.where(pick, abs(first.mantissa), abs(second.mantissa)),
                        np.where(pick, first.exponent, second.exponent))

    @property
    def effective_exponent(self):
        return np.where(self.mantissa == 0, ZERO_EXPONENT, self.exponent)

    @property
    def shape(self):
        return np.shape(self.mantissa)

    def __len__(self):
        return len(self.mantissa)

    def __getitem__(self, index):
        return ScaledReal._raw(self.mantissa[index], self.exponent[index])

    def __neg__(self):
        return ScaledReal._raw(-self.mantissa, self.exponent)

    def __abs__(self):
        return ScaledReal._raw(abs(self.mantissa), self.exponent)

    def sign(self):
        return np.sign(self.mantissa)

    def is_zero(self):
        return self.mantissa == 0

    def __mul__(self, other):
        if _is_complex(other):
            return NotImplemented
        other = _coerce(other)
        return ScaledReal(self.mantissa * other.mantissa, self.exponent + other.exponent)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if _is_complex(other):
            return NotImplemented
        other = _coerce(other)
        if np.any(other.mantissa == 0):
            raise ZeroDivisionError('scaled division by zero')
        return ScaledReal(self.mantissa / other.mantissa, self.exponent - other.exponent)

    def __rtruediv__(self, other):
        return _coerce(other) / self

    def __add__(self, other):
        if _is_complex(other):
            return NotImplemented
        other = _coerce(other)
        left, right = self.effective_exponent, other.effective_exponent
        top = np.maximum(left, right)
        total = _shift(self.mantissa, left - top) + _shift(other.mantissa, right - top)
        return ScaledReal(total, np.where(top == ZERO_EXPONENT, 0, top))

    __radd__ = __add__

    def __sub__(self, other):
        if _is_complex(other):
            return NotImplemented
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def log2(self):
        """log2 of the magnitude, -inf for zero"""
        with np.errstate(divide='ignore'):
            return np.where(self.mantissa == 0, -np.inf, self.exponent + np.log2(abs(self.mantissa)))

    def to_float(self):
        """Descale; values beyond the double range become 0 or +-inf"""
        exponent = np.clip(self.exponent, -_MAX_SHIFT, _MAX_SHIFT).astype(np.int32)
        with np.errstate(over='ignore'):
            return np.ldexp(self.mantissa, exponent)

    def __float__(self):
        return float(self.to_float())

    def __repr__(self):
        return 'ScaledReal(%r, %r)' % (self.mantissa, self.exponent)


def _coerce(value):
    if isinstance(value, ScaledReal):
        return value
    return ScaledReal(value)


class ScaledComplex(object):
    """A pair of independently scaled real and imaginary parts"""

    __slots__ = ('real', 'imag')
    __array_ufunc__ = None

    def __init__(self, real, imag=0.0):
        self.real = _coerce(real)
        self.imag = _coerce(imag)

    @classmethod
    def from_complex(cls, value):
        return cls(np.real(value), np.imag(value))

    def __getitem__(self, index):
        return ScaledComplex(self.real[index], self.imag[index])

    def __len__(self):
        return len(self.real)

    def conjugate(self):
        return ScaledComplex(self.real, -self.imag)

    def __neg__(self):
        return ScaledComplex(-self.real, -self.imag)

    def __add__(self, other):
        other = _coerce_complex(other)
        return ScaledComplex(self.real + other.real, self.imag + other.imag)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce_complex(other)
        return ScaledComplex(self.real - other.real, self.imag - other.imag)

    def __rsub__(self, other):
        return _coerce_complex(other) - self

    def __mul__(self, other):
        if not _is_complex(other):
            return ScaledComplex(self.real * other, self.imag * other)
        other = _coerce_complex(other)
        return ScaledComplex(self.real * other.real - self.imag * other.imag,
                             self.real * other.imag + self.imag * other.real)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not _is_complex(other):
            return ScaledComplex(self.real / other, self.imag / other)
        other = _coerce_complex(other)
        denominator = other.abs2()
        return ScaledComplex((self.real * other.real + self.imag * other.imag) / denominator,
                             (self.imag * other.real - self.real * other.imag) / denominator)

    def __rtruediv__(self, other):
        return _coerce_complex(other) / self

    def abs2(self):
        return self.real * self.real + self.imag * self.imag

    def max_exponent(self):
        return np.maximum(self.real.effective_exponent, self.imag.effective_exponent)

    def is_zero(self):
        return self.real.is_zero() & self.imag.is_zero()

    def to_complex(self, underflow=None):
        """Descale; with underflow set, magnitudes below 2**underflow become exact zero"""
        value = self.real.to_float() + 1j * self.imag.to_float()
        if underflow is not None:
            value = np.where(self.max_exponent() < underflow, 0j, value)
        return value

    def __complex__(self):
        return complex(self.to_complex())

    def __repr__(self):
        return 'ScaledComplex(%r, %r)' % (self.real, self.imag)


def _coerce_complex(value):
    if isinstance(value, ScaledComplex):
        return value
    if isinstance(value, ScaledReal):
        return ScaledComplex(value, np.zeros(value.shape))
    return ScaledComplex.from_complex(value)
