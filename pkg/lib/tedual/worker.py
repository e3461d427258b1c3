# -*- coding: utf-8 -*-
#
# This file is part of tedual.
# Copyright (c) 2026 the tedual authors. All rights reserved.
# Distributed under the BSD license, see README.md.


import concurrent.futures
import logging
import os

from .handler import CheckState

logger = logging.getLogger(__name__)

WORKERS_ENVIRONMENT = 'TEDUAL_WORKERS'


def worker_count(requested=None):
    if requested is None:
        requested = os.environ.get(WORKERS_ENVIRONMENT) or os.cpu_count() or 1
    try:
        count = int(requested)
    except ValueError:
        raise ValueError('invalid worker count %r' % (requested,))
    if count < 1:
        raise ValueError('worker count must be at least 1, got %r' % (requested,))
    return count


def run_parallel(func, items, workers=None):
    """Apply func to every item on a thread pool, yielding results in input order"""
    workers = worker_count(workers)
    if workers == 1:
        yield from map(func, items)
        return

    with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as executor:
        futures = [executor.submit(func, item) for item in items]
        for future in futures:
            exception = future.exception()
            if exception is not None:
                for pending in futures:
                    pending.cancel()
                raise exception
            yield future.result()


def run_checks(report, checks, workers=None):
    logger.debug('Running %d checks', len(checks))
    for check_state in run_parallel(lambda check_state: check_state.process(),
                                    [CheckState(check) for check in checks], workers):
        logger.debug('Check finished: %s', check_state.check)

        if check_state.exception is not None:
            report.error(check_state)
        elif check_state.passed:
            report.passed(check_state)
        else:
            report.failed(check_state)
