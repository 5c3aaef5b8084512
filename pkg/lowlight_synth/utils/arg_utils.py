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
"""Argument validation helpers."""
from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import math


def normalize_range(value, name, lower=None, upper=None):
    """Transforms a number or pair of numbers into a `(low, high)` tuple.

    A single number `v` becomes `(v, v)`.

    Arguments:
      value: The value to validate and convert. Could be a number, or any
        iterable of two numbers.
      name: The name of the argument being validated, e.g. "gamma_range".
        This is only used to format error messages.
      lower: optional inclusive lower bound for both ends.
      upper: optional inclusive upper bound for both ends.

    Returns:
      A tuple of two Python floats with `low <= high`.

    Raises:
      TypeError: If something else than a number or iterable thereof was
        passed.
      ValueError: If the pair is unordered, non-finite or out of bounds.
    """
    if isinstance(value, (int, float)) and not isinstance(value, bool):
        value_tuple = (value, value)
    else:
        try:
            value_tuple = tuple(value)
        except TypeError:
            raise TypeError("The `{}` argument must be a pair of numbers. "
                            "Received: {}".format(name, value))
    if len(value_tuple) != 2:
        raise ValueError("The `{}` argument must be a pair of numbers. "
                         "Received: {}".format(name, value))
    try:
        low, high = (float(v) for v in value_tuple)
    except (TypeError, ValueError):
        raise TypeError("The `{}` argument must be a pair of numbers. "
                        "Received: {}".format(name, value))
    if not (math.isfinite(low) and math.isfinite(high)):
        raise ValueError("The `{}` argument must be finite. Received: "
                         "{}".format(name, value))
    if low > high:
        raise ValueError("The `{}` argument must satisfy low <= high. "
                         "Received: {}".format(name, value))
    if lower is not None and low < lower:
        raise ValueError("The `{}` argument must be >= {}. Received: "
                         "{}".format(name, lower, value))
    if upper is not None and high > upper:
        raise ValueError("The `{}` argument must be <= {}. Received: "
                         "{}".format(name, upper, value))
    return (low, high)
