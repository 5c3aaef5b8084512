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
"""Pipeline configuration and ablation presets."""
from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import tensorflow as tf
import yaml

from lowlight_synth.utils import arg_utils

PROPOSED = "proposed"
ABLATIONS = (PROPOSED, "no_epsilon", "no_noise", "no_crf", "no_k", "no_lab")

# Stage switches applied by each ablation tag.
_ABLATION_OVERRIDES = {
    PROPOSED: {},
    "no_epsilon": {
        "epsilon_range": (0., 0.)
    },
    "no_noise": {
        "shot_range": (0., 0.),
        "read_range": (0., 0.)
    },
    "no_crf": {
        "use_crf": False
    },
    "no_k": {
        "use_k": False
    },
    "no_lab": {
        "lab": False
    },
}

SEED_KEY = "seed"


def _check_noise_range(value, name):
    low, high = arg_utils.normalize_range(value, name, lower=0.)
    if low == 0. and high > 0.:
        raise ValueError(
            "The `{}` argument is drawn log-uniformly; use (0, 0) to disable "
            "it or a positive lower bound. Received: {}".format(name, value))
    return (low, high)


class PipelineConfig(object):
    """Ranges and stage switches of the low-light synthesis pipeline.

    Follows the Keras serialization idiom: `get_config()` returns a plain
    dict and `PipelineConfig.from_config()` rebuilds an equal object.

    Args:
      epsilon_range: `(low, high)` of the uniform brightness jitter ε.
      gamma_range: `(low, high)` of the uniform darkening weight γ, within
        (0, 1].
      shot_range: `(low, high)` of the log-uniform shot noise strength
        (variance per unit signal), or `(0, 0)`.
      read_range: `(low, high)` of the log-uniform read noise standard
        deviation, or `(0, 0)`.
      use_crf: draw response curves from the database; identity otherwise.
      use_k: rescale the dark image by k; k is forced to 1 otherwise.
      lab: model inputs in LAB; RGB otherwise.
      noise_after_gamma: add noise to the darkened signal instead of the
        linearized one.
      crf_file: DoRF file path, or None for the built-in gamma family.
      size: side of the square training crop, in pixels.
      ablation: the ablation tag that produced this config.
    """

    def __init__(self,
                 epsilon_range=(-0.1, 0.1),
                 gamma_range=(0.01, 0.09),
                 shot_range=(1e-4, 1e-2),
                 read_range=(1e-3, 3e-2),
                 use_crf=True,
                 use_k=True,
                 lab=True,
                 noise_after_gamma=False,
                 crf_file=None,
                 size=256,
                 ablation=PROPOSED):
        self.epsilon_range = arg_utils.normalize_range(
            epsilon_range, "epsilon_range", lower=-1.)
        self.gamma_range = arg_utils.normalize_range(
            gamma_range, "gamma_range", lower=0., upper=1.)
        if self.gamma_range[0] <= 0.:
            raise ValueError("The `gamma_range` argument must be positive. "
                             "Received: {}".format(gamma_range))
        self.shot_range = _check_noise_range(shot_range, "shot_range")
        self.read_range = _check_noise_range(read_range, "read_range")
        self.use_crf = bool(use_crf)
        self.use_k = bool(use_k)
        self.lab = bool(lab)
        self.noise_after_gamma = bool(noise_after_gamma)
        if crf_file is not None and not isinstance(crf_file, str):
            raise TypeError("crf_file must be a path string or None, got "
                            "{!r}".format(crf_file))
        self.crf_file = crf_file or None
        if isinstance(size, bool) or int(size) != size or size < 1:
            raise ValueError(
                "size must be a positive integer, got {!r}".format(size))
        self.size = int(size)
        if ablation not in ABLATIONS:
            raise ValueError("Unknown ablation {!r}; valid tags are "
                             "{}".format(ablation, ", ".join(ABLATIONS)))
        self.ablation = ablation

    def get_config(self):
        return {
            "epsilon_range": list(self.epsilon_range),
            "gamma_range": list(self.gamma_range),
            "shot_range": list(self.shot_range),
            "read_range": list(self.read_range),
            "use_crf": self.use_crf,
            "use_k": self.use_k,
            "lab": self.lab,
            "noise_after_gamma": self.noise_after_gamma,
            "crf_file": self.crf_file,
            "size": self.size,
            "ablation": self.ablation,
        }

    @classmethod
    def from_config(cls, config):
        valid = sorted(cls().get_config())
        unknown = sorted(set(config) - set(valid))
        if unknown:
            raise ValueError("Unknown config keys {}; valid keys are "
                             "{}".format(unknown, ", ".join(valid)))
        return cls(**config)

    def replace(self, **overrides):
        """Returns a copy with `overrides` applied."""
        config = self.get_config()
        config.update(overrides)
        return self.from_config(config)

    def __eq__(self, other):
        if not isinstance(other, PipelineConfig):
            return NotImplemented
        return self.get_config() == other.get_config()

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __repr__(self):
        return "PipelineConfig({})".format(", ".join(
            "{}={!r}".format(k, v) for k, v in self.get_config().items()))


def apply_ablation(config, name):
    """Disables the stage named by the ablation tag `name` in `config`.

    Args:
      config: a `PipelineConfig`.
      name: one of `ABLATIONS`. `proposed` leaves `config` as is.

    Returns:
      A new `PipelineConfig`.

    Raises:
      ValueError: if `name` is not a known tag.
    """
    if name not in _ABLATION_OVERRIDES:
        raise ValueError("Unknown ablation {!r}; valid tags are {}".format(
            name, ", ".join(ABLATIONS)))
    if name == PROPOSED:
        return config
    return config.replace(ablation=name, **_ABLATION_OVERRIDES[name])


def ablation_config(name):
    return apply_ablation(PipelineConfig(), name)


def load_config(path):
    """Reads a YAML pipeline config.

    The document is a mapping of `PipelineConfig` fields plus an optional
    top-level `seed`.

    Returns:
      A `(PipelineConfig, seed)` tuple; `seed` is None when absent.
    """
    with tf.io.gfile.GFile(path, "r") as f:
        document = yaml.safe_load(f.read())
    if document is None:
        document = {}
    if not isinstance(document, dict):
        raise ValueError("Config file {} must hold a mapping, got {}".format(
            path,
            type(document).__name__))
    seed = document.pop(SEED_KEY, None)
    if seed is not None and (isinstance(seed, bool)
                             or not isinstance(seed, int) or seed < 0):
        raise ValueError("Config file {}: seed must be a non-negative "
                         "integer, got {!r}".format(path, seed))
    return PipelineConfig.from_config(document), seed


def save_config(config, path, seed=None):
    document = config.get_config()
    if seed is not None:
        document[SEED_KEY] = int(seed)
    with tf.io.gfile.GFile(path, "w") as f:
        f.write(yaml.safe_dump(document, default_flow_style=False))
