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
"""Signal-dependent sensor noise."""
from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import tensorflow as tf

from lowlight_synth.image import image_f


def noise_variance(x, shot_strength, read_sigma):
    """Per-sample variance `shot_strength * x + read_sigma ** 2`."""
    return shot_strength * tf.maximum(x, 0.) + read_sigma**2


def add_noise(image, shot_strength, read_sigma, rng, name=None):
    """Adds heteroscedastic Gaussian shot and read noise.

    Each sample `x` becomes `clip(x + n, 0, 1)` with `n` drawn from a
    zero-mean Gaussian of variance `shot_strength * x + read_sigma ** 2`,
    the Gaussian approximation of Poisson-Gaussian sensor noise.

    Args:
      image: an `ImageF` tagged `LINEAR_RGB` / `UNIT`.
      shot_strength: non-negative variance per unit signal.
      read_sigma: non-negative standard deviation of the additive term.
      rng: a `tf.random.Generator`. One normal draw per sample is taken
        even when both strengths are zero, so the stream advances the same
        way for every setting.
      name: A name for this operation (optional).

    Returns:
      An `ImageF` tagged `LINEAR_RGB` / `UNIT`.

    Raises:
      ValueError: if a strength is negative.
    """
    image_f.check_tags(
        image,
        colorspaces=(image_f.LINEAR_RGB,),
        value_ranges=(image_f.UNIT,),
        op_name="add_noise")
    if shot_strength < 0 or read_sigma < 0:
        raise ValueError(
            "Noise strengths must be non-negative, got shot_strength={}, "
            "read_sigma={}".format(shot_strength, read_sigma))
    with tf.name_scope(name or "add_noise"):
        x = image.data
        z = rng.normal(tf.shape(x), dtype=tf.float64)
        std = tf.sqrt(noise_variance(x, shot_strength, read_sigma))
        return image.with_data(image_f.clip_unit(x + z * std))
