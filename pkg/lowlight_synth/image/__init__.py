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
"""Tagged float images, color conversions and windowed filters."""
from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from lowlight_synth.image.image_f import ImageF
from lowlight_synth.image.image_f import SRGB
from lowlight_synth.image.image_f import LINEAR_RGB
from lowlight_synth.image.image_f import LAB
from lowlight_synth.image.image_f import UNIT
from lowlight_synth.image.image_f import PM1
from lowlight_synth.image.image_f import LAB_NATIVE
from lowlight_synth.image.color_ops import srgb_to_linear
from lowlight_synth.image.color_ops import linear_to_srgb
from lowlight_synth.image.color_ops import rgb_to_lab
from lowlight_synth.image.color_ops import lab_to_rgb
from lowlight_synth.image.color_ops import normalize_pm1
from lowlight_synth.image.color_ops import denormalize_pm1
from lowlight_synth.image.filters import gaussian_kernel2d
from lowlight_synth.image.filters import gaussian_filter2d
