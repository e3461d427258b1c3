# -*- coding: utf-8 -*-
#
# This file is part of tedual.
# Copyright (c) 2026 the tedual authors. All rights reserved.
# Distributed under the BSD license, see README.md.


import csv
import logging
import os
import sys

import tedual
from .util import TrackSubClasses, atomic_write

logger = logging.getLogger(__name__)


def format_value(value):
    """Fixed CSV formatting: 15 significant digits, empty for missing values"""
    if value is None:
        return ''
    if isinstance(value, (bool, int, str)):
        return str(value)
    if hasattr(value, 'value'):
        return str(value.value)
    return '{:.15g}'.format(float(value))


class TableWriter(object, metaclass=TrackSubClasses):
    __subclasses__ = {}

    header = ()

    def __init__(self, data):
        self.data = data

    @property
    def filename(self):
        return '%s.csv' % (self.__kind__,)

    @classmethod
    def writer_documentation(cls):
        return '\n'.join('  * %s.csv - %s' % (sc.__kind__, sc.__doc__) for sc in TrackSubClasses.sorted_by_kind(cls))

    @classmethod
    def get(cls, kind, data):
        if kind not in cls.__subclasses__:
            raise ValueError('Unknown table: %r' % (kind,))
        return cls.__subclasses__[kind](data)

    def rows(self):
        raise NotImplementedError()

    def footer(self):
        return ()

    def write(self, directory):
        filename = os.path.join(directory, self.filename)
        count = 0
        with atomic_write(filename) as fp:
            writer = csv.writer(fp, lineterminator='\n')
            writer.writerow(self.header)
            for row in self.rows():
                writer.writerow([format_value(value) for value in row])
                count += 1
            for line in self.footer():
                fp.write(line + '\n')
        logger.info('Wrote %d rows to %s', count, filename)
        return filename


class PhasesWriter(TableWriter):
    """delta_hat for every (k, m) of a sweep"""

    __kind__ = 'phases'
    header = ('k', 'm', 'delta_hat')

    def rows(self):
        for k, table in zip(self.data.k_grid, self.data.tables):
            for m, phase in enumerate(table.delta_hat):
                yield k, m, phase


class StarWriter(TableWriter):
    """delta_star with its attaining mode and regime per wavenumber"""

    __kind__ = 'star'
    header = ('k', 'delta_star', 'argmax_mode', 'regime')

    def rows(self):
        for k, star in zip(self.data.k_grid, self.data.star_track):
            yield k, star.delta_star, star.argmax_mode, star.regime


class RootsWriter(TableWriter):
    """Transmission eigenvalues from the determinant scan"""

    __kind__ = 'roots'
    header = ('m', 'k', 'residual', 'multiplicity_hint')

    def rows(self):
        for root in self.data:
            yield root.m, root.k, root.residual, root.multiplicity_hint


class DetectedWriter(TableWriter):
    """Phase-reset events cross-validated against the determinant roots"""

    __kind__ = 'detected'
    header = ('k_estimate', 'side', 'mode', 'peak_phase', 'matched_k', 'mismatch')

    def rows(self):
        for event in self.data.detected:
            matched_k = event.matched_root.k if event.matched_root is not None else None
            yield event.k_estimate, event.approach_side, event.mode, event.peak_phase, matched_k, event.mismatch

    def footer(self):
        yield '# verdict: %s' % (self.data.verdict,)


class ProfileWriter(TableWriter):
    """Normalised eigenfunction profile and the modulus of each ladder step"""

    __kind__ = 'profile'

    @property
    def header(self):
        return ('r', 'value') + tuple('ladder_%s' % (format_value(step.offset),) for step in self.data.ladder)

    def rows(self):
        for i, r in enumerate(self.data.r_samples):
            yield (r, self.data.values[i]) + tuple(abs(step.values[i]) for step in self.data.ladder)

    def footer(self):
        for step in self.data.ladder:
            yield '# ladder %s: k=%s distance=%s' % (format_value(step.offset), format_value(step.k),
                                                     format_value(step.distance))


class StdoutReporter(object):
    """Print the verify summary on stdout (the console)"""

    def __init__(self, report, check_states, duration):
        self.report = report
        self.check_states = check_states
        self.duration = duration

    def _incolor(self, color_id, s):
        if sys.stdout.isatty() and self.report.color:
            return '\033[9%dm%s\033[0m' % (color_id, s)
        return s

    def _red(self, s):
        return self._incolor(1, s)

    def _green(self, s):
        return self._incolor(2, s)

    def _lines(self):
        for check_state in self.check_states:
            verb = check_state.verb.upper()
            if check_state.verb == 'error':
                yield '%s: %s' % (self._red(verb), check_state.check.__kind__)
                yield from ('    ' + line for line in check_state.traceback.strip().splitlines())
                continue
            colored = self._green(verb) if check_state.verb == 'passed' else self._red(verb)
            yield '%s: %s (worst %.3g, tolerance %.3g; %s)' % (colored, check_state.check.__kind__,
                                                               check_state.worst,
                                                               check_state.check.context.tolerance,
                                                               check_state.detail)

        yield '-- '
        yield '%s %s, %s' % (tedual.pkgname, tedual.__version__, tedual.__copyright__)
        yield 'ran %d checks in %d seconds' % (len(self.check_states), self.duration.seconds)

    def submit(self):
        for line in self._lines():
            print(line)
