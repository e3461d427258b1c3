# -*- coding: utf-8 -*-
#
# This file is part of tedual.
# Copyright (c) 2026 the tedual authors. All rights reserved.
# Distributed under the BSD license, see README.md.


import datetime
import logging
import traceback

from .reporters import StdoutReporter

logger = logging.getLogger(__name__)


class CheckState(object):
    def __init__(self, check):
        self.check = check
        self.verb = None
        self.worst = None
        self.detail = None
        self.passed = False
        self.exception = None
        self.traceback = None

    def process(self):
        logger.info('Processing: %s', self.check)
        try:
            self.worst, self.detail = self.check.evaluate()
            self.passed = self.worst <= self.check.context.tolerance
        except Exception as e:
            self.exception = e
            self.traceback = traceback.format_exc()

        return self


class Report(object):
    def __init__(self, color=False):
        self.color = color
        self.check_states = []
        self.start = datetime.datetime.now()

    def _result(self, verb, check_state):
        if check_state.exception is not None:
            logger.debug('Got exception while processing %r: %s', check_state.check, check_state.exception)

        check_state.verb = verb
        self.check_states.append(check_state)

    def passed(self, check_state):
        self._result('passed', check_state)

    def failed(self, check_state):
        self._result('failed', check_state)

    def error(self, check_state):
        self._result('error', check_state)

    @property
    def ok(self):
        return all(check_state.verb == 'passed' for check_state in self.check_states)

    def finish(self):
        duration = datetime.datetime.now() - self.start
        StdoutReporter(self, self.check_states, duration).submit()
        return self.ok
