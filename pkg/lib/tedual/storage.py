# -*- coding: utf-8 -*-
#
# This file is part of tedual.
# Copyright (c) 2026 the tedual authors. All rights reserved.
# Distributed under the BSD license, see README.md.


import copy
import logging
import math
import os
import re
from abc import ABCMeta, abstractmethod
from dataclasses import dataclass, field, fields
from typing import List, Optional

import yaml

from .disk import MediumConfig
from .util import atomic_write

logger = logging.getLogger(__name__)

DEFAULT_CONFIG = {
    # medium
    'n': 2.0,
    'R': 1.0,
    'rho': 0.0,

    # sweep window
    'k_lo': 1.0,
    'k_hi': 5.5,
    'n_points': 4500,
    'm_max': 300,

    # determinant roots and detection
    'scan_step': 0.001,
    'detection_band': 0.2,
    'refine': False,
    'match_tol': None,

    'output_path': '.',

    # eigfun
    'mode': 0,
    'root_index': 0,
    'n_r': 201,
    'ladder': [0.01, 0.001, 0.0001],

    # verify
    'verify_points': 40,
    'verify_tolerance': 1e-10,
}

MEDIUM_KEYS = ('n', 'R', 'rho')


class ConfigLoader(yaml.SafeLoader):
    """Safe loader that also reads exponent floats without a decimal point (1e-3)"""


ConfigLoader.add_implicit_resolver('tag:yaml.org,2002:float', re.compile(r'^[-+]?[0-9][0-9_]*[eE][-+]?[0-9]+$'),
                                   list('-+0123456789'))


class ConfigError(ValueError):
    def __init__(self, message, key=None):
        ValueError.__init__(self, message)
        self.message = message
        self.key = key

    def __str__(self):
        if self.key is None:
            return self.message
        return '%s: %s' % (self.key, self.message)


def merge(source, destination):
    for key, value in source.items():
        if isinstance(value, dict):
            node = destination.setdefault(key, {})
            merge(value, node)
        else:
            destination[key] = value

    return destination


def _number(config, key, kind=float):
    value = config[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError('expected a number, got %r' % (value,), key)
    if kind is int:
        if float(value) != int(value):
            raise ConfigError('expected an integer, got %r' % (value,), key)
        return int(value)
    value = float(value)
    if not math.isfinite(value):
        raise ConfigError('must be finite, got %r' % (value,), key)
    return value


def _positive(config, key, kind=float):
    value = _number(config, key, kind)
    if not value > 0:
        raise ConfigError('must be positive, got %r' % (value,), key)
    return value


@dataclass
class RunConfig:
    medium: MediumConfig
    k_lo: float
    k_hi: float
    n_points: int
    m_max: int
    scan_step: float
    detection_band: float
    refine: bool = False
    match_tol: Optional[float] = None
    output_path: str = '.'
    mode: int = 0
    root_index: int = 0
    n_r: int = 201
    ladder: List[float] = field(default_factory=lambda: [0.01, 0.001, 0.0001])
    verify_points: int = 40
    verify_tolerance: float = 1e-10

    @property
    def k_window(self):
        return self.k_lo, self.k_hi

    @property
    def effective_match_tol(self):
        """Detection-to-root tolerance, two grid steps unless configured"""
        if self.match_tol is not None:
            return self.match_tol
        return 2.0 * (self.k_hi - self.k_lo) / (self.n_points - 1)

    @classmethod
    def from_dict(cls, config):
        unknown = sorted(set(config) - set(DEFAULT_CONFIG))
        if unknown:
            raise ConfigError('unknown configuration keys: %s' % (', '.join(unknown),))
        config = merge(config, copy.deepcopy(DEFAULT_CONFIG))

        try:
            medium = MediumConfig(n=_number(config, 'n'), R=_number(config, 'R'), rho=_number(config, 'rho'))
        except ValueError as e:
            raise ConfigError(str(e))

        k_lo, k_hi = _positive(config, 'k_lo'), _positive(config, 'k_hi')
        if not k_lo < k_hi:
            raise ConfigError('need k_lo < k_hi, got (%r, %r)' % (k_lo, k_hi), 'k_lo')

        n_points = _positive(config, 'n_points', int)
        if n_points < 2:
            raise ConfigError('need at least two points, got %r' % (n_points,), 'n_points')
        n_r = _positive(config, 'n_r', int)
        if n_r < 3 or n_r % 2 == 0:
            raise ConfigError('need an odd number >= 3, got %r' % (n_r,), 'n_r')
        detection_band = _positive(config, 'detection_band')
        if detection_band > 1:
            raise ConfigError('must lie in (0, 1], got %r' % (detection_band,), 'detection_band')

        m_max = _number(config, 'm_max', int)
        mode = _number(config, 'mode', int)
        root_index = _number(config, 'root_index', int)
        for key, value in (('m_max', m_max), ('mode', mode), ('root_index', root_index)):
            if value < 0:
                raise ConfigError('must not be negative, got %r' % (value,), key)
        if m_max > 400:
            raise ConfigError('at most 400 modes are supported, got %r' % (m_max,), 'm_max')

        if not isinstance(config['refine'], bool):
            raise ConfigError('expected true or false, got %r' % (config['refine'],), 'refine')
        match_tol = None if config['match_tol'] is None else _positive(config, 'match_tol')

        ladder = config['ladder']
        if not isinstance(ladder, list) or not ladder:
            raise ConfigError('expected a non-empty list of offsets, got %r' % (ladder,), 'ladder')
        ladder = [_positive({'ladder': offset}, 'ladder') for offset in ladder]

        return cls(medium=medium, k_lo=k_lo, k_hi=k_hi, n_points=n_points, m_max=m_max,
                   scan_step=_positive(config, 'scan_step'), detection_band=detection_band,
                   refine=config['refine'], match_tol=match_tol, output_path=str(config['output_path']),
                   mode=mode, root_index=root_index, n_r=n_r, ladder=ladder,
                   verify_points=_positive(config, 'verify_points', int),
                   verify_tolerance=_positive(config, 'verify_tolerance'))

    def to_dict(self):
        result = {key: getattr(self.medium, key) for key in MEDIUM_KEYS}
        for item in fields(self):
            if item.name != 'medium':
                result[item.name] = copy.deepcopy(getattr(self, item.name))
        return result


class BaseStorage(metaclass=ABCMeta):
    @abstractmethod
    def load(self, *args):
        ...

    @abstractmethod
    def save(self, *args):
        ...


class BaseFileStorage(BaseStorage, metaclass=ABCMeta):
    def __init__(self, filename):
        self.filename = filename


class BaseYamlFileStorage(BaseFileStorage, metaclass=ABCMeta):
    def __init__(self, filename):
        super().__init__(filename)
        self.config = {}
        self.load()

    @classmethod
    def parse(cls, *args):
        filename = args[0]
        if filename is not None and os.path.exists(filename):
            with open(filename) as fp:
                try:
                    return yaml.load(fp, Loader=ConfigLoader)
                except yaml.YAMLError as e:
                    raise ConfigError('cannot parse %s: %s' % (filename, e))
        elif filename is not None:
            raise ConfigError('no such configuration file: %s' % (filename,))


class YamlConfigStorage(BaseYamlFileStorage):
    def load(self, *args):
        parsed = self.parse(self.filename) or {}
        if not isinstance(parsed, dict):
            raise ConfigError('%s does not hold a mapping' % (self.filename,))
        unknown = sorted(set(parsed) - set(DEFAULT_CONFIG))
        if unknown:
            raise ConfigError('unknown configuration keys in %s: %s' % (self.filename, ', '.join(unknown)))
        self.config = merge(parsed, copy.deepcopy(DEFAULT_CONFIG))
        logger.debug('Loaded configuration from %s', self.filename)

    def save(self, *args):
        with atomic_write(self.filename) as fp:
            yaml.dump(self.config, fp, default_flow_style=False)

    def run_config(self, overrides=None):
        config = copy.deepcopy(self.config)
        if overrides:
            unknown = sorted(set(overrides) - set(DEFAULT_CONFIG))
            if unknown:
                raise ConfigError('unknown configuration keys: %s' % (', '.join(unknown),))
            merge(overrides, config)
        return RunConfig.from_dict(config)

    @classmethod
    def from_run_config(cls, filename, run_config):
        storage = cls.__new__(cls)
        BaseFileStorage.__init__(storage, filename)
        storage.config = run_config.to_dict()
        return storage

    @classmethod
    def defaults(cls):
        storage = cls.__new__(cls)
        BaseFileStorage.__init__(storage, None)
        storage.config = copy.deepcopy(DEFAULT_CONFIG)
        return storage
