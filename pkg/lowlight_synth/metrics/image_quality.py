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
"""Full-reference image quality metrics: PSNR and SSIM."""
from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import math

import tensorflow as tf

from lowlight_synth.image import filters
from lowlight_synth.image import image_f

# Reported PSNR for identical images.
PSNR_CAP = 99.0

SSIM_WINDOW = 11
SSIM_SIGMA = 1.5
SSIM_K1 = 0.01
SSIM_K2 = 0.03
# Dynamic range of UNIT samples.
MAX_VALUE = 1.0


def _check_pair(pred, gt, op_name):
    for image in (pred, gt):
        image_f.check_tags(
            image,
            colorspaces=(image_f.SRGB, image_f.LINEAR_RGB),
            value_ranges=(image_f.UNIT,),
            op_name=op_name)
    image_f.check_same_shape(pred, gt, op_name)


def mse(pred, gt):
    """Mean squared error over all samples, as a Python float."""
    _check_pair(pred, gt, "mse")
    return float(tf.reduce_mean(tf.square(pred.data - gt.data)))


def psnr(pred, gt):
    """Peak signal-to-noise ratio in dB with a peak value of 1.

    Args:
      pred: a `UNIT` `ImageF`.
      gt: a `UNIT` `ImageF` of the same shape.

    Returns:
      `10 * log10(1 / MSE)` as a Python float, or `inf` when the images are
      identical. Reports cap it with `cap_psnr`.

    Raises:
      ValueError: if the shapes or tags differ.
    """
    error = mse(pred, gt)
    if error == 0.:
        return math.inf
    return 10. * math.log10(MAX_VALUE**2 / error)


def cap_psnr(value, cap=PSNR_CAP):
    return min(value, cap)


def ssim(pred, gt, name=None):
    """Single-scale structural similarity.

    Uses an 11x11 Gaussian window with sigma 1.5, K1 = 0.01, K2 = 0.03 and a
    dynamic range of 1. The SSIM map is computed per channel over every
    window that fits inside the image; the result is the mean over all
    positions and channels. Computation stays in float64.

    Args:
      pred: a `UNIT` `ImageF`.
      gt: a `UNIT` `ImageF` of the same shape.
      name: A name for this operation (optional).

    Returns:
      A Python float in [-1, 1].

    Raises:
      ValueError: if the shapes or tags differ or the image is smaller
        than the window.
    """
    _check_pair(pred, gt, "ssim")
    if min(pred.height, pred.width) < SSIM_WINDOW:
        raise ValueError(
            "ssim needs images of at least {0}x{0}, got {1}x{2}".format(
                SSIM_WINDOW, pred.height, pred.width))
    with tf.name_scope(name or "ssim"):
        x, y = pred.data, gt.data
        c1 = (SSIM_K1 * MAX_VALUE)**2
        c2 = (SSIM_K2 * MAX_VALUE)**2

        def local_mean(z):
            return filters.gaussian_filter2d(z, SSIM_WINDOW, SSIM_SIGMA)

        mu_x = local_mean(x)
        mu_y = local_mean(y)
        var_x = local_mean(x * x) - mu_x * mu_x
        var_y = local_mean(y * y) - mu_y * mu_y
        cov_xy = local_mean(x * y) - mu_x * mu_y

        luminance = (2. * mu_x * mu_y + c1) / (mu_x * mu_x + mu_y * mu_y + c1)
        structure = (2. * cov_xy + c2) / (var_x + var_y + c2)
        return float(tf.reduce_mean(luminance * structure))
