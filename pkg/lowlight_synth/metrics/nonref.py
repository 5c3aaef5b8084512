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
"""Scale estimation for dark images without a reference."""
from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from lowlight_synth.degrade.low_light import DEGENERATE_THRESHOLD
from lowlight_synth.degrade.low_light import DegenerateImageError
from lowlight_synth.image import image_f


def estimate_k_nonref(corpus_mean_intensity, image):
    """Scale that lifts `image` to the corpus mean intensity.

    The mean is taken over all sRGB samples on [0, 1], the same statistic
    a dataset manifest stores as `corpus_mean_intensity`.

    Args:
      corpus_mean_intensity: mean intensity of the bright training images,
        in (0, 1].
      image: a `UNIT` `ImageF`.

    Returns:
      `corpus_mean_intensity / mean(image)` as a Python float.

    Raises:
      ValueError: if `corpus_mean_intensity` is out of range.
      DegenerateImageError: if `image` is black.
    """
    if not 0. < corpus_mean_intensity <= 1.:
        raise ValueError("corpus_mean_intensity should be in (0, 1], got "
                         "{}".format(corpus_mean_intensity))
    image_f.check_tags(
        image, value_ranges=(image_f.UNIT,), op_name="estimate_k_nonref")
    mean = image.mean()
    if mean <= DEGENERATE_THRESHOLD:
        raise DegenerateImageError(
            "Image mean {} is at or below {}; k is undefined".format(
                mean, DEGENERATE_THRESHOLD))
    return corpus_mean_intensity / mean


def apply_scale(image, k):
    """Returns `clip(k * image, 0, 1)`."""
    if not k > 0.:
        raise ValueError("k must be positive, got {}".format(k))
    return image.with_data(image_f.clip_unit(k * image.data))
