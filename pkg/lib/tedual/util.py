# -*- coding: utf-8 -*-
#
# This file is part of tedual.
# Copyright (c) 2026 the tedual authors. All rights reserved.
# Distributed under the BSD license, see README.md.


import contextlib
import logging
import os
import tempfile

logger = logging.getLogger(__name__)


class TrackSubClasses(type):
    """A metaclass that registers subclasses by their __kind__ in the base class"""

    @staticmethod
    def sorted_by_kind(cls):
        return [item for _, item in sorted((it.__kind__, it) for it in cls.__subclasses__.values())]

    def __init__(cls, name, bases, namespace):
        for base in bases:
            if base == object or not hasattr(cls, '__kind__') or '__kind__' not in namespace:
                continue

            subclasses = getattr(base, '__subclasses__', None)
            if subclasses is not None:
                logger.debug('Registering %r as %s', cls, cls.__kind__)
                subclasses[cls.__kind__] = cls
                break

        super().__init__(name, bases, namespace)


@contextlib.contextmanager
def atomic_write(filename):
    """Open a text file that only appears under filename once fully written"""
    directory = os.path.dirname(os.path.abspath(filename))
    fd, temporary = tempfile.mkstemp(prefix='.' + os.path.basename(filename), dir=directory)
    try:
        with os.fdopen(fd, 'w', encoding='utf-8', newline='') as fp:
            yield fp
        os.replace(temporary, filename)
    except BaseException:
        os.unlink(temporary)
        raise
