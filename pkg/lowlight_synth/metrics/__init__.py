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
"""Image quality metrics and batch evaluation."""
from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from lowlight_synth.metrics.image_quality import PSNR_CAP
from lowlight_synth.metrics.image_quality import mse
from lowlight_synth.metrics.image_quality import psnr
from lowlight_synth.metrics.image_quality import ssim
from lowlight_synth.metrics.nonref import apply_scale
from lowlight_synth.metrics.nonref import estimate_k_nonref
from lowlight_synth.metrics.evaluate import MetricReport
from lowlight_synth.metrics.evaluate import PairScore
from lowlight_synth.metrics.evaluate import write_report
from lowlight_synth.metrics.evaluate import write_table
