#!/usr/bin/env python3

from setuptools import setup

import os
import re

main_py = open(os.path.join('lib', 'tedual', '__init__.py')).read()
m = dict(re.findall("\n__([a-z]+)__ = '([^']+)'", main_py))
docs = re.findall('"""(.*?)"""', main_py, re.DOTALL)

m['name'] = 'tedual'
m['author'], m['author_email'] = re.match(r'(.*) <(.*)>', m['author']).groups()
m['description'], m['long_description'] = docs[0].strip().split('\n\n', 1)
m['download_url'] = '{url}archive/tedual-{version}.tar.gz'.format(**m)
m['install_requires'] = ['numpy', 'PyYAML', 'appdirs']
m['extras_require'] = {'test': ['pytest', 'pycodestyle', 'mpmath']}
m['python_requires'] = '>=3.7'
m['scripts'] = ['tedual']
m['package_dir'] = {'': 'lib'}
m['packages'] = ['tedual']
m['data_files'] = [
    ('share/tedual/examples', [
        'share/tedual/examples/zim.yaml',
        'share/tedual/examples/rho1_above.yaml',
        'share/tedual/examples/rho1_below.yaml',
    ]),
]

setup(**m)
