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
"""Tagged floating-point images."""
from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import tensorflow as tf

SRGB = "SRGB"
LINEAR_RGB = "LINEAR_RGB"
LAB = "LAB"
COLORSPACES = (SRGB, LINEAR_RGB, LAB)

UNIT = "UNIT"
PM1 = "PM1"
LAB_NATIVE = "LAB_NATIVE"
VALUE_RANGES = (UNIT, PM1, LAB_NATIVE)

_COMPATIBLE_RANGES = {
    SRGB: (UNIT, PM1),
    LINEAR_RGB: (UNIT, PM1),
    LAB: (LAB_NATIVE, PM1),
}

# Slack allowed on declared range bounds.
RANGE_TOLERANCE = 1e-6


class ImageF(object):
    """An immutable `[height, width, channels]` float64 image with tags.

    Samples are stored interleaved (HWC), the TensorFlow image layout, for
    every module of the package. The `colorspace` tag is one of `SRGB`,
    `LINEAR_RGB` or `LAB`; the `value_range` tag is one of `UNIT` ([0, 1]),
    `PM1` ([-1, 1]) or `LAB_NATIVE` (L in [0, 100], a and b unbounded).

    Construction validates the shape, the tags, finiteness and the declared
    range, so every `ImageF` in flight satisfies its invariants. Operations
    never modify an image in place; they return a new one through
    `with_data`.

    Args:
      data: 2-D or 3-D floating point array-like. A 2-D input is treated as
        a single channel image.
      colorspace: colorspace tag.
      value_range: value range tag.

    Raises:
      TypeError: if `data` is not floating point.
      ValueError: if the shape, the tags or the samples are invalid.
    """

    __slots__ = ("_data", "_colorspace", "_value_range")

    def __init__(self, data, colorspace=SRGB, value_range=UNIT):
        data = tf.convert_to_tensor(data, name="data")
        if not data.dtype.is_floating:
            raise TypeError(
                "ImageF data must be floating point, got {}. Use "
                "ImageF.from_uint8 for 8-bit pixels.".format(data.dtype))
        if data.dtype != tf.float64:
            data = tf.cast(data, tf.float64)
        if data.shape.ndims == 2:
            data = data[:, :, None]
        if data.shape.ndims != 3:
            raise ValueError("`image` must be a 2/3D tensor, got shape "
                             "{}".format(data.shape))
        height, width, channels = data.shape.as_list()
        if not height or not width:
            raise ValueError(
                "`image` must be at least 1x1, got {}x{}".format(width, height))
        if channels not in (1, 3):
            raise ValueError(
                "`image` must have 1 or 3 channels, got {}".format(channels))
        if colorspace not in COLORSPACES:
            raise ValueError("colorspace should be one of {}, got {!r}".format(
                COLORSPACES, colorspace))
        if value_range not in _COMPATIBLE_RANGES[colorspace]:
            raise ValueError(
                "value_range {!r} is not valid for colorspace {!r}; expected "
                "one of {}".format(value_range, colorspace,
                                   _COMPATIBLE_RANGES[colorspace]))
        if colorspace == LAB and channels != 3:
            raise ValueError("LAB images must have 3 channels")
        if not bool(tf.reduce_all(tf.math.is_finite(data))):
            raise ValueError("`image` contains NaN or Inf samples")
        _check_range(data, value_range)

        self._data = data
        self._colorspace = colorspace
        self._value_range = value_range

    @classmethod
    def from_uint8(cls, pixels, colorspace=SRGB):
        """Builds a UNIT image from 8-bit pixels."""
        pixels = tf.convert_to_tensor(pixels, name="pixels")
        if pixels.dtype != tf.uint8:
            raise TypeError("`pixels` must be uint8, got {}".format(
                pixels.dtype))
        return cls(tf.cast(pixels, tf.float64) / 255., colorspace, UNIT)

    @property
    def data(self):
        return self._data

    @property
    def colorspace(self):
        return self._colorspace

    @property
    def value_range(self):
        return self._value_range

    @property
    def height(self):
        return self._data.shape[0]

    @property
    def width(self):
        return self._data.shape[1]

    @property
    def channels(self):
        return self._data.shape[2]

    @property
    def shape(self):
        return tuple(self._data.shape.as_list())

    def numpy(self):
        return self._data.numpy()

    def mean(self):
        """Mean over all samples, as a Python float."""
        return float(tf.reduce_mean(self._data))

    def with_data(self, data, colorspace=None, value_range=None):
        """Returns a new image holding `data`, inheriting unspecified tags."""
        return ImageF(data, colorspace or self._colorspace, value_range or
                      self._value_range)

    def to_uint8(self):
        """Quantizes a UNIT image to uint8 with round-to-nearest."""
        check_tags(self, value_ranges=(UNIT,), op_name="to_uint8")
        scaled = tf.round(tf.clip_by_value(self._data, 0., 1.) * 255.)
        return tf.cast(scaled, tf.uint8)

    def __repr__(self):
        return "ImageF(shape={}, colorspace={}, value_range={})".format(
            self.shape, self._colorspace, self._value_range)


def _check_range(data, value_range):
    if value_range == UNIT:
        low, high = 0., 1.
    elif value_range == PM1:
        low, high = -1., 1.
    else:
        # Only lightness is bounded.
        data = data[:, :, 0]
        low, high = 0., 100.
    minimum = float(tf.reduce_min(data))
    maximum = float(tf.reduce_max(data))
    if (minimum < low - RANGE_TOLERANCE or maximum > high + RANGE_TOLERANCE):
        raise ValueError(
            "`image` samples [{}, {}] fall outside the {} range [{}, {}]".
            format(minimum, maximum, value_range, low, high))


def check_tags(image, colorspaces=None, value_ranges=None, channels=None,
               op_name="op"):
    """Raises `ValueError` unless `image` carries one of the expected tags.

    Args:
      image: an `ImageF`.
      colorspaces: accepted colorspace tags, or None for any.
      value_ranges: accepted value range tags, or None for any.
      channels: accepted channel counts, or None for any.
      op_name: name of the calling op, used in the error message.
    """
    if not isinstance(image, ImageF):
        raise TypeError("{} expects an ImageF, got {}".format(
            op_name,
            type(image).__name__))
    if colorspaces is not None and image.colorspace not in colorspaces:
        raise ValueError("{} expects colorspace in {}, got {}".format(
            op_name, colorspaces, image.colorspace))
    if value_ranges is not None and image.value_range not in value_ranges:
        raise ValueError("{} expects value_range in {}, got {}".format(
            op_name, value_ranges, image.value_range))
    if channels is not None and image.channels not in channels:
        raise ValueError("{} expects {} channel(s), got {}".format(
            op_name, " or ".join(str(c) for c in channels), image.channels))


def check_same_shape(first, second, op_name="op"):
    if first.shape != second.shape:
        raise ValueError("{} expects images of the same shape, got {} and "
                         "{}".format(op_name, first.shape, second.shape))


def clip_unit(tensor):
    return tf.clip_by_value(tensor, 0., 1.)
