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
"""Conditional GAN losses and the combined training objectives."""
from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import collections

import tensorflow as tf

# Weight of the L1 term in the generator objective.
DEFAULT_LAMBDA = 100.
SCORE_EPSILON = 1e-7

DiscriminatorScores = collections.namedtuple("DiscriminatorScores",
                                             ["real", "fake"])
DiscriminatorScores.__doc__ = """Discriminator outputs D(y) and D(G(x)).

Fields:
  real: probabilities the discriminator assigns to reference images.
  fake: probabilities the discriminator assigns to generated images.
"""


def _probabilities(values, name, eps):
    values = tf.cast(tf.convert_to_tensor(values, name=name), tf.float64)
    if values.shape.num_elements() == 0:
        raise ValueError("`{}` scores must not be empty".format(name))
    if not bool(tf.reduce_all((values >= 0.) & (values <= 1.))):
        raise ValueError("`{}` scores must be probabilities in [0, 1]".format(
            name))
    return tf.clip_by_value(values, eps, 1. - eps)


def cgan_losses(scores, eps=SCORE_EPSILON, name=None):
    """Discriminator and generator losses of a conditional GAN.

    The discriminator loss is `-mean(log D(y)) - mean(log(1 - D(G(x))))`.
    The generator uses the non-saturating form `-mean(log D(G(x)))`.
    Scores are clamped into `[eps, 1 - eps]` first.

    Args:
      scores: a `DiscriminatorScores`.
      eps: clamping margin.
      name: A name for this operation (optional).

    Returns:
      A `(d_loss, g_loss)` tuple of float64 scalar tensors.

    Raises:
      ValueError: if a score array is empty or holds values outside [0, 1].
    """
    with tf.name_scope(name or "cgan_losses"):
        real = _probabilities(scores.real, "real", eps)
        fake = _probabilities(scores.fake, "fake", eps)
        d_loss = (-tf.reduce_mean(tf.math.log(real)) -
                  tf.reduce_mean(tf.math.log(1. - fake)))
        g_loss = -tf.reduce_mean(tf.math.log(fake))
        return d_loss, g_loss


def combined_objective(g_loss, l1, lam=DEFAULT_LAMBDA):
    """Generator objective `g_loss + lam * l1`."""
    if lam < 0:
        raise ValueError("lam must be non-negative, got {}".format(lam))
    return g_loss + lam * l1


def pretrain_objective(l1, l2, perceptual, weights=(1., 1., 1.)):
    """Weighted sum of the L1, L2 and perceptual generator losses."""
    if len(weights) != 3 or any(w < 0 for w in weights):
        raise ValueError(
            "weights must be 3 non-negative numbers, got {}".format(weights))
    return weights[0] * l1 + weights[1] * l2 + weights[2] * perceptual
