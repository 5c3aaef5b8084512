# Copyright 2026 The Lowlight Synth Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
# ==============================================================================
"""Lowlight Synth.

Lowlight Synth builds paired (bright, dark) training data for low-light
image enhancement. Dark images are rendered from ordinary photographs by
an exposure reduction in linearized camera space, a random swap of camera
response curves and Poisson-Gaussian sensor noise. The package also
carries the full-reference metrics, loss formulas and command-line
workflows used to train and evaluate enhancement models on that data.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import os

from setuptools import find_packages
from setuptools import setup

DOCLINES = __doc__.split('\n')

# Version
version = {}
base_dir = os.path.dirname(os.path.abspath(__file__))
with open(os.path.join(base_dir, "lowlight_synth", "version.py")) as fp:
    # yapf: disable
    exec(fp.read(), version)
    # yapf: enable

# Dependencies
REQUIRED_PACKAGES = [
    'absl-py >= 0.9.0',
    'numpy >= 1.20',
    'pyyaml >= 5.1',
    'tensorflow >= 2.9.0',
    'tqdm >= 4.36.1',
]

setup(
    name='lowlight-synth',
    version=version['__version__'],
    description=DOCLINES[0],
    long_description='\n'.join(DOCLINES[2:]),
    author='The Lowlight Synth Authors',
    packages=find_packages(exclude=['examples', 'examples.*']),
    install_requires=REQUIRED_PACKAGES,
    entry_points={
        'console_scripts': [
            'lowlight-synth = lowlight_synth.cli.lowlight:run',
        ],
    },
    include_package_data=True,
    zip_safe=False,
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Developers',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: Apache Software License',
        'Programming Language :: Python :: 3',
        'Topic :: Scientific/Engineering :: Image Processing',
        'Topic :: Software Development :: Libraries :: Python Modules',
    ],
    license='Apache 2.0',
    keywords='tensorflow low-light image enhancement dataset',
)
