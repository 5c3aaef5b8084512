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
"""Color space and range conversions: sRGB, linear RGB and CIELAB."""
from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import tensorflow as tf

from lowlight_synth.image import image_f
from lowlight_synth.image.image_f import ImageF

# sRGB transfer function constants (IEC 61966-2-1).
_SRGB_SLOPE = 12.92
_SRGB_SCALE = 1.055
_SRGB_OFFSET = 0.055
_SRGB_EXPONENT = 2.4
_SRGB_ENCODED_KNEE = 0.04045
_SRGB_LINEAR_KNEE = 0.0031308

# yapf: disable
# Linear sRGB -> CIE XYZ, D65 reference white, 2 degree observer.
_RGB_TO_XYZ = [[0.4124564, 0.3575761, 0.1804375],
               [0.2126729, 0.7151522, 0.0721750],
               [0.0193339, 0.1191920, 0.9503041]]
# yapf: enable

# The white point is the image of RGB (1, 1, 1) so the gray axis maps to
# a = b = 0 exactly.
_WHITE_POINT = [sum(row) for row in _RGB_TO_XYZ]

_LAB_DELTA = 6. / 29.

# Affine scaling of LAB onto [-1, 1]: L / 50 - 1, a / 110, b / 110.
_LAB_PM1_SCALE = (50., 110., 110.)
_LAB_PM1_SHIFT = (-1., 0., 0.)


def _srgb_eotf(encoded):
    linear = encoded / _SRGB_SLOPE
    # Keep the power branch finite for samples on the linear segment.
    safe = tf.maximum(encoded, _SRGB_ENCODED_KNEE)
    power = tf.pow((safe + _SRGB_OFFSET) / _SRGB_SCALE, _SRGB_EXPONENT)
    return tf.where(encoded <= _SRGB_ENCODED_KNEE, linear, power)


def _srgb_oetf(linear):
    encoded = linear * _SRGB_SLOPE
    safe = tf.maximum(linear, _SRGB_LINEAR_KNEE)
    power = _SRGB_SCALE * tf.pow(safe, 1. / _SRGB_EXPONENT) - _SRGB_OFFSET
    return tf.where(linear <= _SRGB_LINEAR_KNEE, encoded, power)


def _lab_f(t):
    safe = tf.maximum(t, _LAB_DELTA**3)
    return tf.where(t > _LAB_DELTA**3, tf.pow(safe, 1. / 3.),
                    t / (3. * _LAB_DELTA**2) + 4. / 29.)


def _lab_f_inverse(t):
    return tf.where(t > _LAB_DELTA, t**3, 3. * _LAB_DELTA**2 * (t - 4. / 29.))


def _apply_matrix(pixels, matrix):
    matrix = tf.convert_to_tensor(matrix, dtype=pixels.dtype)
    # out[..., i] = sum_j matrix[i, j] * pixels[..., j]
    return tf.tensordot(pixels, matrix, axes=[[pixels.shape.ndims - 1], [1]])


def srgb_to_linear(image, name=None):
    """Applies the sRGB electro-optical transfer function.

    Args:
      image: an `ImageF` tagged `SRGB` / `UNIT`.
      name: A name for this operation (optional).

    Returns:
      An `ImageF` tagged `LINEAR_RGB` / `UNIT`.

    Raises:
      ValueError: if `image` carries other tags.
    """
    image_f.check_tags(
        image,
        colorspaces=(image_f.SRGB,),
        value_ranges=(image_f.UNIT,),
        op_name="srgb_to_linear")
    with tf.name_scope(name or "srgb_to_linear"):
        linear = _srgb_eotf(image.data)
        return image.with_data(linear, colorspace=image_f.LINEAR_RGB)


def linear_to_srgb(image, name=None):
    """Applies the inverse sRGB transfer function (linear -> encoded)."""
    image_f.check_tags(
        image,
        colorspaces=(image_f.LINEAR_RGB,),
        value_ranges=(image_f.UNIT,),
        op_name="linear_to_srgb")
    with tf.name_scope(name or "linear_to_srgb"):
        encoded = image_f.clip_unit(_srgb_oetf(image.data))
        return image.with_data(encoded, colorspace=image_f.SRGB)


def rgb_to_lab(image, name=None):
    """Converts an sRGB image to CIE 1976 L*a*b* (D65 white).

    The conversion runs sRGB -> linear RGB -> XYZ -> Lab. Lightness lies in
    [0, 100]; white maps to (100, 0, 0) and every gray to a = b = 0.

    Args:
      image: a 3-channel `ImageF` tagged `SRGB` / `UNIT`.
      name: A name for this operation (optional).

    Returns:
      An `ImageF` tagged `LAB` / `LAB_NATIVE`.

    Raises:
      ValueError: if `image` is single channel or carries other tags.
    """
    image_f.check_tags(
        image,
        colorspaces=(image_f.SRGB,),
        value_ranges=(image_f.UNIT,),
        channels=(3,),
        op_name="rgb_to_lab")
    with tf.name_scope(name or "rgb_to_lab"):
        linear = _srgb_eotf(image.data)
        xyz = _apply_matrix(linear, _RGB_TO_XYZ)
        xyz /= tf.constant(_WHITE_POINT, dtype=xyz.dtype)
        fx, fy, fz = tf.unstack(_lab_f(xyz), axis=-1)
        lab = tf.stack(
            [116. * fy - 16., 500. * (fx - fy), 200. * (fy - fz)], axis=-1)
        return ImageF(lab, image_f.LAB, image_f.LAB_NATIVE)


def lab_to_rgb(image, name=None):
    """Converts a L*a*b* image back to sRGB.

    Exact inverse of `rgb_to_lab` for in-gamut colors. Colors outside the
    sRGB gamut are clamped per channel into [0, 1].

    Args:
      image: an `ImageF` tagged `LAB` / `LAB_NATIVE`.
      name: A name for this operation (optional).

    Returns:
      An `ImageF` tagged `SRGB` / `UNIT`.
    """
    image_f.check_tags(
        image,
        colorspaces=(image_f.LAB,),
        value_ranges=(image_f.LAB_NATIVE,),
        op_name="lab_to_rgb")
    with tf.name_scope(name or "lab_to_rgb"):
        lightness, a, b = tf.unstack(image.data, axis=-1)
        fy = (lightness + 16.) / 116.
        f = tf.stack([fy + a / 500., fy, fy - b / 200.], axis=-1)
        xyz = _lab_f_inverse(f) * tf.constant(_WHITE_POINT, dtype=f.dtype)
        to_rgb = tf.linalg.inv(tf.constant(_RGB_TO_XYZ, dtype=xyz.dtype))
        linear = image_f.clip_unit(_apply_matrix(xyz, to_rgb))
        encoded = image_f.clip_unit(_srgb_oetf(linear))
        return ImageF(encoded, image_f.SRGB, image_f.UNIT)


def normalize_pm1(image, name=None):
    """Scales an image onto [-1, 1], the model input convention.

    `UNIT` images map through `2x - 1`. `LAB_NATIVE` images map per channel
    through `L / 50 - 1`, `a / 110` and `b / 110`; the chroma scale covers
    the chroma extent of the sRGB gamut.

    Args:
      image: an `ImageF` tagged `UNIT` or `LAB_NATIVE`.
      name: A name for this operation (optional).

    Returns:
      An `ImageF` with the same colorspace, tagged `PM1`.
    """
    image_f.check_tags(
        image,
        value_ranges=(image_f.UNIT, image_f.LAB_NATIVE),
        op_name="normalize_pm1")
    with tf.name_scope(name or "normalize_pm1"):
        if image.value_range == image_f.UNIT:
            scaled = image.data * 2. - 1.
        else:
            scale = tf.constant(_LAB_PM1_SCALE, dtype=tf.float64)
            shift = tf.constant(_LAB_PM1_SHIFT, dtype=tf.float64)
            scaled = image.data / scale + shift
        return image.with_data(scaled, value_range=image_f.PM1)


def denormalize_pm1(image, name=None):
    """Exact inverse of `normalize_pm1`.

    The target range follows the colorspace: `LAB` goes back to
    `LAB_NATIVE`, RGB colorspaces go back to `UNIT`.
    """
    image_f.check_tags(
        image, value_ranges=(image_f.PM1,), op_name="denormalize_pm1")
    with tf.name_scope(name or "denormalize_pm1"):
        if image.colorspace == image_f.LAB:
            scale = tf.constant(_LAB_PM1_SCALE, dtype=tf.float64)
            shift = tf.constant(_LAB_PM1_SHIFT, dtype=tf.float64)
            restored = (image.data - shift) * scale
            return image.with_data(restored, value_range=image_f.LAB_NATIVE)
        restored = (image.data + 1.) / 2.
        return image.with_data(restored, value_range=image_f.UNIT)
