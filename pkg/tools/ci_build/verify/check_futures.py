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
"""Checks that every package source file imports the standard futures.

The package keeps `absolute_import`, `division` and `print_function` at the
top of each module so true division is explicit wherever image statistics
are averaged.
"""
from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import fnmatch
import os
import re

BASE_DIR = os.path.abspath(os.path.join(os.path.dirname(__file__), '../../..'))
PACKAGE_DIR = os.path.join(BASE_DIR, 'lowlight_synth')
FUTURES_PATTERN = re.compile(r'^from __future__ import (\w+)\s*$')
REQUIRED_FUTURES = frozenset(['absolute_import', 'division', 'print_function'])


def missing_futures(path):
    futures = set()
    with open(path, encoding='utf-8') as f:
        lines = f.readlines()
    if not lines:
        return set()
    for line in lines:
        m = FUTURES_PATTERN.match(line)
        if m:
            futures.add(m.group(1))
    return REQUIRED_FUTURES - futures


def main():
    if not os.path.isdir(PACKAGE_DIR):
        raise AssertionError(
            'BASE_DIR = {} is not project root'.format(BASE_DIR))

    error_msgs = []
    for root, _, filenames in os.walk(PACKAGE_DIR):
        for filename in sorted(fnmatch.filter(filenames, '*.py')):
            path = os.path.join(root, filename)
            missing = missing_futures(path)
            if missing:
                error_msgs.append('Error in {}: Missing futures: {}'.format(
                    os.path.relpath(path, BASE_DIR),
                    ' '.join(sorted(missing))))

    if error_msgs:
        raise AssertionError('\n'.join(error_msgs))


if __name__ == '__main__':
    main()
