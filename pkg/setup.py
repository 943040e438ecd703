#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""twisted_cohomology
Exact computations of the cohomology of twisted differentials d_f^(p).
"""
import sys
from setuptools import setup, find_packages

short_description = __doc__.splitlines()[1]

# from https://github.com/pytest-dev/pytest-runner#conditional-requirement
needs_pytest = {'pytest', 'test', 'ptr'}.intersection(sys.argv)
pytest_runner = ['pytest-runner'] if needs_pytest else []

with open('README.rst') as readme_file:
    readme = readme_file.read()

with open('HISTORY.rst') as history_file:
    history = history_file.read()

with open('requirements.txt') as fd:
    requirements = fd.read()

setup(
    name='twisted_cohomology',
    author="The twisted_cohomology developers",
    description=short_description,
    long_description=readme + '\n\n' + history,
    long_description_content_type='text/x-rst',
    version='2026.10.17',
    license="BSD-3-Clause",

    packages=find_packages(include=['twisted_cohomology']),

    # The default configuration file is packaged data
    include_package_data=True,
    package_data={'twisted_cohomology': ['data/*.ini']},

    # Allows `setup.py test` to work correctly with pytest
    setup_requires=[] + pytest_runner,

    install_requires=requirements,
    python_requires='>=3.9',

    test_suite='tests',

    platforms=['Linux',
               'Mac OS-X',
               'Unix',
               'Windows'],

    zip_safe=False,

    keywords=['cohomology', 'twisted differential', 'quasi-homogeneous',
              'Milnor algebra', 'Groebner basis', 'differential forms',
              'Poisson', 'exact arithmetic'],
    classifiers=[
        'Development Status :: 4 - Beta',
        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering :: Mathematics',
        'License :: OSI Approved :: BSD License',
        'Natural Language :: English',
        'Programming Language :: Python :: 3 :: Only',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
    ],
    entry_points={
        'console_scripts': [
            'twisted-cohomology=twisted_cohomology.__main__:run',
        ],
    }
)
