#!/usr/bin/env python
#-*- coding:utf-8 -*-

from __future__ import print_function

import os
import re
import sys

try:
    from setuptools import setup, Command
    has_setuptools = True
except ImportError:
    from distutils.core import setup, Command
    has_setuptools = False

PROJECT_NAME = 'entringer'

ROOT_DIR = os.path.dirname(os.path.realpath(__file__))


### UPDATE TEST BEHAVIOR ###
class NewTestCommand(Command):
    description = 'run test suite'
    user_options = []
    def initialize_options(self):
        self.test_suite = True
    def finalize_options(self):
        pass
    def run(self):
        argv = sys.argv[sys.argv.index('test') + 1:]
        try:
            import pytest
        except ImportError:
            print('ERROR: pytest is required to run the test suite.')
            sys.exit(1)
        errno = pytest.main([os.path.join(ROOT_DIR, 'test')] + argv)
        sys.exit(errno)


### FIND ALL SUB-PACKAGES ###
def iter_packages(root):
    ignore = len(os.path.dirname(root)) + 1
    for path, _, files in os.walk(root):
        if '__init__.py' in files:
            yield '.'.join(path[ignore:].split(os.path.sep))
PACKAGES = list(iter_packages(os.path.join(ROOT_DIR, PROJECT_NAME)))


### METADATA ###
with open(os.path.join(ROOT_DIR, PROJECT_NAME, '__init__.py')) as f:
    version = re.search("__version__ = '([^']+)'", f.read()).group(1)

with open(os.path.join(ROOT_DIR, 'README.md')) as f:
    readme = f.read()

with open(os.path.join(ROOT_DIR, 'LICENSE')) as f:
    license = f.read()

metadata = {
    'name': PROJECT_NAME,
    'version': version,
    'description': 'Entringer and Arnold families: triangles, bijections and '
        'exhaustive verification.',
    'long_description': readme,
    'platforms': 'any',
    'license': license,
    'packages': PACKAGES,
    'scripts': ['runentringer.py'],
    'requires': ['numpy'],
    'cmdclass': {
        'test': NewTestCommand,
    },
    'classifiers': ('Intended Audience :: Science/Research',
                     'License :: OSI Approved :: MIT License',
                     'Natural Language :: English',
                     'Operating System :: OS Independent',
                     'Programming Language :: Python',
                     'Programming Language :: Python :: 3',
                     'Topic :: Scientific/Engineering :: Mathematics')
}

# setuptools only arguments
if has_setuptools:
    metadata.update({
    'install_requires': ['numpy'],
    'python_requires': '>=3.7',
    'tests_require': ['pytest>=2.6.1'],
    'extras_require': {'test': ['pytest>=2.6.1'], 'docs': ['sphinx', 'numpydoc']},
    'entry_points': {'console_scripts': ['entringer = entringer.cli:main']},
})


if __name__ == '__main__':
    setup(**metadata)
