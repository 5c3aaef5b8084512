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
"""Pixel-wise reconstruction losses."""
from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import tensorflow as tf

from lowlight_synth.image.image_f import ImageF


def as_tensor(value, name):
    """Float64 tensor of an `ImageF` or array-like."""
    if isinstance(value, ImageF):
        return value.data
    value = tf.convert_to_tensor(value, name=name)
    if not value.dtype.is_floating:
        raise TypeError("`{}` must be floating point, got {}".format(
            name, value.dtype))
    return tf.cast(value, tf.float64)


def check_pair(pred, gt):
    pred = as_tensor(pred, "pred")
    gt = as_tensor(gt, "gt")
    if pred.shape != gt.shape:
        raise ValueError("`pred` and `gt` must have the same shape, got {} "
                         "and {}".format(pred.shape, gt.shape))
    return pred, gt


def l1_loss(pred, gt, name=None):
    """Mean absolute difference over all samples.

    Args:
      pred: prediction, an `ImageF` or float tensor.
      gt: target of the same shape.
      name: A name for this operation (optional).

    Returns:
      A float64 scalar `Tensor`.
    """
    with tf.name_scope(name or "l1_loss"):
        pred, gt = check_pair(pred, gt)
        return tf.reduce_mean(tf.abs(gt - pred))


def l2_loss(pred, gt, name=None):
    """Mean squared difference over all samples."""
    with tf.name_scope(name or "l2_loss"):
        pred, gt = check_pair(pred, gt)
        return tf.reduce_mean(tf.square(gt - pred))
