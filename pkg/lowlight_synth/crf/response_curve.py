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
"""Sampled camera response functions and their inverses."""
from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import numpy as np
import tensorflow as tf

from lowlight_synth.image import image_f

NUM_SAMPLES = 1024

# Endpoint slack for irradiance and brightness samples.
IRRADIANCE_TOLERANCE = 1e-6
BRIGHTNESS_TOLERANCE = 1e-3


class ResponseCurve(object):
    """A monotone sampled response `f: irradiance -> brightness`.

    Both sample vectors hold `NUM_SAMPLES` float64 values on [0, 1].
    Irradiance is strictly increasing from 0 to 1; brightness is
    nondecreasing with endpoints within `BRIGHTNESS_TOLERANCE` of 0 and 1.
    The forward map is the piecewise-linear interpolant of the samples and
    the inverse interpolates the same samples with the axes swapped.

    Args:
      curve_id: string identifier.
      irradiance: 1-D array-like of `NUM_SAMPLES` samples.
      brightness: 1-D array-like of `NUM_SAMPLES` samples.

    Raises:
      ValueError: if the samples break any of the invariants above.
    """

    __slots__ = ("_id", "_irradiance", "_brightness")

    def __init__(self, curve_id, irradiance, brightness):
        irradiance = np.asarray(irradiance, dtype=np.float64)
        brightness = np.asarray(brightness, dtype=np.float64)
        for name, samples in (("irradiance", irradiance), ("brightness",
                                                          brightness)):
            if samples.shape != (NUM_SAMPLES,):
                raise ValueError(
                    "Curve {!r}: `{}` must hold {} samples, got shape "
                    "{}".format(curve_id, name, NUM_SAMPLES, samples.shape))
            if not np.all(np.isfinite(samples)):
                raise ValueError("Curve {!r}: `{}` has non-finite "
                                 "samples".format(curve_id, name))
        if (abs(irradiance[0]) > IRRADIANCE_TOLERANCE
                or abs(irradiance[-1] - 1.) > IRRADIANCE_TOLERANCE):
            raise ValueError(
                "Curve {!r}: irradiance must run from 0 to 1, got [{}, "
                "{}]".format(curve_id, irradiance[0], irradiance[-1]))
        if np.any(np.diff(irradiance) <= 0.):
            raise ValueError("Curve {!r}: irradiance must be strictly "
                             "increasing".format(curve_id))
        if np.any(np.diff(brightness) < 0.):
            raise ValueError("Curve {!r}: brightness must be "
                             "nondecreasing".format(curve_id))
        if (brightness[0] > BRIGHTNESS_TOLERANCE
                or brightness[-1] < 1. - BRIGHTNESS_TOLERANCE):
            raise ValueError(
                "Curve {!r}: brightness must run from 0 to 1 within {}, got "
                "[{}, {}]".format(curve_id, BRIGHTNESS_TOLERANCE,
                                  brightness[0], brightness[-1]))
        self._id = str(curve_id)
        self._irradiance = tf.constant(irradiance, tf.float64)
        self._brightness = tf.constant(brightness, tf.float64)

    @property
    def id(self):
        return self._id

    @property
    def irradiance(self):
        return self._irradiance

    @property
    def brightness(self):
        return self._brightness

    def forward(self, x, name=None):
        """Maps irradiance samples to brightness; `x` is clamped to [0, 1]."""
        with tf.name_scope(name or "crf_forward"):
            x = tf.convert_to_tensor(x, tf.float64, name="x")
            return _interpolate(self._irradiance, self._brightness, x)

    def inverse(self, y, name=None):
        """Maps brightness samples back to irradiance.

        On a flat stretch of the curve every brightness in the stretch maps
        to the stretch's lowest irradiance. Values below the first
        brightness sample map to 0, values above the last map to 1.
        """
        with tf.name_scope(name or "crf_inverse"):
            y = tf.convert_to_tensor(y, tf.float64, name="y")
            return _interpolate_inverse(self._irradiance, self._brightness, y)

    def __repr__(self):
        return "ResponseCurve(id={!r})".format(self._id)


def _interpolate(xs, ys, x):
    shape = tf.shape(x)
    x = tf.reshape(image_f.clip_unit(x), [-1])
    # Index of the segment [xs[i], xs[i + 1]] holding x.
    index = tf.searchsorted(xs, x, side="right") - 1
    index = tf.clip_by_value(index, 0, NUM_SAMPLES - 2)
    x0 = tf.gather(xs, index)
    x1 = tf.gather(xs, index + 1)
    y0 = tf.gather(ys, index)
    y1 = tf.gather(ys, index + 1)
    y = y0 + (x - x0) / (x1 - x0) * (y1 - y0)
    return tf.reshape(image_f.clip_unit(y), shape)


def _interpolate_inverse(xs, ys, y):
    shape = tf.shape(y)
    y = tf.reshape(image_f.clip_unit(y), [-1])
    # First sample with ys[i] >= y; equal runs resolve to their leftmost
    # sample.
    upper = tf.searchsorted(ys, y, side="left")
    hit = tf.gather(ys, tf.minimum(upper, NUM_SAMPLES - 1)) == y
    exact = tf.gather(xs, tf.minimum(upper, NUM_SAMPLES - 1))

    index = tf.clip_by_value(upper, 1, NUM_SAMPLES - 1)
    y0 = tf.gather(ys, index - 1)
    y1 = tf.gather(ys, index)
    x0 = tf.gather(xs, index - 1)
    x1 = tf.gather(xs, index)
    span = tf.where(y1 > y0, y1 - y0, tf.ones_like(y1))
    between = x0 + (y - y0) / span * (x1 - x0)

    x = tf.where(
        upper == 0, tf.zeros_like(y),
        tf.where(upper >= NUM_SAMPLES, tf.ones_like(y), between))
    x = tf.where(hit & (upper < NUM_SAMPLES), exact, x)
    return tf.reshape(image_f.clip_unit(x), shape)


def _uniform_grid(num=NUM_SAMPLES):
    return np.linspace(0., 1., num)


def gamma_curve(gc):
    """Synthetic response `brightness = irradiance ** (1 / gc)`.

    Args:
      gc: exponent in the open interval (0.1, 10).

    Returns:
      A `ResponseCurve` with id `gamma_<gc>` sampled on a uniform grid.

    Raises:
      ValueError: if `gc` is out of range.
    """
    if not 0.1 < gc < 10.:
        raise ValueError(
            "gc should be in the open interval (0.1, 10), got {}".format(gc))
    irradiance = _uniform_grid()
    return ResponseCurve("gamma_{:g}".format(gc), irradiance,
                         np.power(irradiance, 1. / gc))


def identity_curve():
    irradiance = _uniform_grid()
    return ResponseCurve("identity", irradiance, irradiance)


def apply(curve, image, name=None):
    """Renders a UNIT image through the forward response `curve`.

    Args:
      curve: a `ResponseCurve`.
      image: an `ImageF` tagged `UNIT`, in linear RGB or sRGB treated as
        raw irradiance.
      name: A name for this operation (optional).

    Returns:
      An `ImageF` tagged `SRGB` / `UNIT` of the same shape.
    """
    image_f.check_tags(
        image,
        colorspaces=(image_f.SRGB, image_f.LINEAR_RGB),
        value_ranges=(image_f.UNIT,),
        op_name="apply")
    with tf.name_scope(name or "crf_apply"):
        return image.with_data(
            curve.forward(image.data), colorspace=image_f.SRGB)


def invert(curve, image, name=None):
    """Linearizes a UNIT image through the inverse of `curve`.

    Args:
      curve: a `ResponseCurve`.
      image: an `ImageF` tagged `UNIT`.
      name: A name for this operation (optional).

    Returns:
      An `ImageF` tagged `LINEAR_RGB` / `UNIT` of the same shape.
    """
    image_f.check_tags(
        image,
        colorspaces=(image_f.SRGB, image_f.LINEAR_RGB),
        value_ranges=(image_f.UNIT,),
        op_name="invert")
    with tf.name_scope(name or "crf_invert"):
        return image.with_data(
            curve.inverse(image.data), colorspace=image_f.LINEAR_RGB)


def roundtrip_error(curve, num=NUM_SAMPLES):
    """Max of `|f(f^-1(x)) - x|` over a uniform grid of `num` points."""
    grid = tf.constant(_uniform_grid(num), tf.float64)
    restored = curve.forward(curve.inverse(grid))
    return float(tf.reduce_max(tf.abs(restored - grid)))
