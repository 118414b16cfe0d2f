#!/usr/bin/env python
import os
import unittest

from setuptools import setup


with open('degen/version.py') as f:
    exec(f.read())  # defines __version__

here = os.path.abspath(os.path.dirname(__file__))
with open(os.path.join(here, 'readme.md'), 'r') as fd:
    long_description = fd.read()


def degen_test_suite():
    test_loader = unittest.TestLoader()
    test_suite = test_loader.discover('tests', pattern='test_*.py')
    return test_suite


setup(
    name='degen',
    version=__version__,

    description='recover the degeneracy point of a degenerate diffusion from boundary flux data',
    long_description=long_description,
    long_description_content_type='text/markdown',

    packages=['degen',
              'degen.config',
              'degen.commands'],
    entry_points={
        'console_scripts': [
            'degen=degen.degen_cmd:execute',
            ],
        },

    python_requires='>=3.6',
    install_requires=['numpy>=1.17', 'scipy>=1.4', 'pyyaml', 'configobj'],
    extras_require={'autocompletion': ['argcomplete'],
                    },

    classifiers=[
        'Development Status :: 3 - Alpha',
        'Programming Language :: Python :: 3',
        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],

    test_suite='tests',
    tests_require=['pyfakefs>=3.4', 'mock', 'ddt'],

    zip_safe=False,

)
