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
"""The low-light model and paired image synthesis."""
from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import collections
import math

import numpy as np
import tensorflow as tf

from lowlight_synth.crf import dorf
from lowlight_synth.crf import response_curve
from lowlight_synth.degrade import noise
from lowlight_synth.image import color_ops
from lowlight_synth.image import image_f

# Mean intensity at or below which an image counts as black.
DEGENERATE_THRESHOLD = 1e-8

DegradeParams = collections.namedtuple("DegradeParams", [
    "epsilon", "gamma", "crf_inv_id", "crf_fwd_id", "shot_strength",
    "read_sigma", "seed"
])

PairRecord = collections.namedtuple(
    "PairRecord", ["bright_path", "dark_path", "k", "params", "source_path"])
PairRecord.__new__.__defaults__ = (None,)

# `scaled` is k * low before the final clamp.
Rendering = collections.namedtuple("Rendering",
                                   ["bright", "dark", "k", "low", "scaled"])


class DegenerateImageError(ValueError):
    """Raised when an image is too dark for a stable brightness ratio."""


def derive_seed(global_seed, index):
    """64-bit seed of image `index` in a run seeded with `global_seed`."""
    if global_seed < 0 or index < 0:
        raise ValueError("Seeds and indices must be non-negative, got "
                         "global_seed={}, index={}".format(global_seed, index))
    state = np.random.SeedSequence([int(global_seed), int(index)])
    return int(state.generate_state(1, np.uint64)[0])


def _generators(seed):
    """Independent (parameter, noise) streams of one image."""
    return tf.random.Generator.from_seed(int(seed)).split(2)


def _uniform(rng, bounds):
    low, high = bounds
    if low == high:
        return low
    return float(rng.uniform([], low, high, dtype=tf.float64))


def _log_uniform(rng, bounds):
    low, high = bounds
    if high == 0. or low == high:
        return low
    return math.exp(_uniform(rng, (math.log(low), math.log(high))))


def sample_params(db, config, seed):
    """Draws every random choice of one pair from `seed`.

    Draw order: ε, γ, inverse curve, forward curve, shot strength, read
    sigma. The inverse and forward curves are drawn independently and may
    coincide. Curves are not drawn when `config.use_crf` is off.

    Args:
      db: a `CrfDatabase`; may be None when `config.use_crf` is off.
      config: a `PipelineConfig`.
      seed: the image's 64-bit seed, see `derive_seed`.

    Returns:
      A `DegradeParams`.
    """
    param_rng, _ = _generators(seed)
    epsilon = _uniform(param_rng, config.epsilon_range)
    gamma = _uniform(param_rng, config.gamma_range)
    if config.use_crf:
        crf_inv_id = dorf.sample_curve(db, param_rng).id
        crf_fwd_id = dorf.sample_curve(db, param_rng).id
    else:
        crf_inv_id = crf_fwd_id = "identity"
    shot_strength = _log_uniform(param_rng, config.shot_range)
    read_sigma = _log_uniform(param_rng, config.read_range)
    return DegradeParams(
        epsilon=epsilon,
        gamma=gamma,
        crf_inv_id=crf_inv_id,
        crf_fwd_id=crf_fwd_id,
        shot_strength=shot_strength,
        read_sigma=read_sigma,
        seed=int(seed))


def low_light(image,
              gamma,
              g_inv,
              f,
              shot_strength,
              read_sigma,
              rng,
              noise_after_gamma=False,
              name=None):
    """Renders a well-exposed image as a dark, noisy capture.

    The image is linearized through the inverse of `g_inv`, noise is added,
    the signal is multiplied by `gamma` and the result is rendered through
    `f`. With `noise_after_gamma` the noise is added to the darkened signal
    instead.

    Args:
      image: an `ImageF` tagged `SRGB` / `UNIT`.
      gamma: darkening weight in (0, 1].
      g_inv: `ResponseCurve` whose inverse linearizes `image`.
      f: `ResponseCurve` rendering the dark signal.
      shot_strength: shot noise variance per unit signal.
      read_sigma: read noise standard deviation.
      rng: `tf.random.Generator` for the noise draws.
      noise_after_gamma: add noise after darkening.
      name: A name for this operation (optional).

    Returns:
      An `ImageF` tagged `SRGB` / `UNIT`.
    """
    image_f.check_tags(
        image,
        colorspaces=(image_f.SRGB,),
        value_ranges=(image_f.UNIT,),
        op_name="low_light")
    if not 0. < gamma <= 1.:
        raise ValueError("gamma should be in (0, 1], got {}".format(gamma))
    with tf.name_scope(name or "low_light"):
        linear = response_curve.invert(g_inv, image)
        if noise_after_gamma:
            dark = linear.with_data(linear.data * gamma)
            dark = noise.add_noise(dark, shot_strength, read_sigma, rng)
        else:
            noisy = noise.add_noise(linear, shot_strength, read_sigma, rng)
            dark = noisy.with_data(noisy.data * gamma)
        return response_curve.apply(f, dark)


def compute_k(bright, dark):
    """Brightness ratio `mean(bright) / mean(dark)` over all samples.

    Raises:
      DegenerateImageError: if either mean is at or below
        `DEGENERATE_THRESHOLD`, which would make k undefined or zero.
    """
    image_f.check_same_shape(bright, dark, "compute_k")
    for label, image in (("Dark", dark), ("Bright", bright)):
        mean = image.mean()
        if mean <= DEGENERATE_THRESHOLD:
            raise DegenerateImageError(
                "{} image mean {} is at or below {}; k is not usable".format(
                    label, mean, DEGENERATE_THRESHOLD))
    return bright.mean() / dark.mean()


def _curves(db, params, config):
    if not config.use_crf:
        identity = response_curve.identity_curve()
        return identity, identity
    return db.get(params.crf_inv_id), db.get(params.crf_fwd_id)


def replay_pair(image, db, params, config):
    """Re-renders a pair from recorded `params`.

    Args:
      image: an `ImageF` tagged `SRGB` / `UNIT`, the prepared source.
      db: the `CrfDatabase` the curve ids refer to.
      params: a `DegradeParams`.
      config: the `PipelineConfig` the params were drawn under.

    Returns:
      A `Rendering` of the bright image H, the dark image L, the scale k,
      the dark capture low_H and the unclamped `k * low_H`.

    Raises:
      DegenerateImageError: if low_H is black and `config.use_k` is on.
    """
    image_f.check_tags(
        image,
        colorspaces=(image_f.SRGB,),
        value_ranges=(image_f.UNIT,),
        op_name="replay_pair")
    g_inv, f = _curves(db, params, config)
    _, noise_rng = _generators(params.seed)
    bright = image.with_data(
        image_f.clip_unit((1. + params.epsilon) * image.data))
    low = low_light(
        bright,
        params.gamma,
        g_inv,
        f,
        params.shot_strength,
        params.read_sigma,
        noise_rng,
        noise_after_gamma=config.noise_after_gamma)
    k = compute_k(bright, low) if config.use_k else 1.
    scaled = k * low.data
    dark = low.with_data(image_f.clip_unit(scaled))
    return Rendering(bright=bright, dark=dark, k=k, low=low, scaled=scaled)


def synthesize_pair(image, db, config, seed):
    """Synthesizes one (bright, dark) training pair.

    H is the source scaled by `1 + ε`; low_H is the low-light rendering of
    H; k equalizes the means of H and low_H and L is `k * low_H`. Every
    stage clamps to [0, 1].

    Args:
      image: an `ImageF` tagged `SRGB` / `UNIT`.
      db: a `CrfDatabase`; may be None when `config.use_crf` is off.
      config: a `PipelineConfig`.
      seed: the image's 64-bit seed. Equal seeds give identical pairs.

    Returns:
      A `(H, L, record)` tuple. The record's paths are unset.

    Raises:
      DegenerateImageError: if low_H is black; callers skip the pair.
    """
    params = sample_params(db, config, seed)
    rendering = replay_pair(image, db, params, config)
    record = PairRecord(
        bright_path=None, dark_path=None, k=rendering.k, params=params)
    return rendering.bright, rendering.dark, record


def model_inputs(bright, dark, config):
    """Model input pair `(x, y) = (dark, bright)` scaled to [-1, 1].

    Both images go through LAB first when `config.lab` is on.
    """

    def convert(image):
        if config.lab:
            image = color_ops.rgb_to_lab(image)
        return color_ops.normalize_pm1(image)

    return convert(dark), convert(bright)
