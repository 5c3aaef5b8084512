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
"""Synthetic low-light degradation."""
from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from lowlight_synth.degrade.config import ABLATIONS
from lowlight_synth.degrade.config import PipelineConfig
from lowlight_synth.degrade.config import ablation_config
from lowlight_synth.degrade.config import apply_ablation
from lowlight_synth.degrade.config import load_config
from lowlight_synth.degrade.config import save_config
from lowlight_synth.degrade.noise import add_noise
from lowlight_synth.degrade.low_light import DegenerateImageError
from lowlight_synth.degrade.low_light import DegradeParams
from lowlight_synth.degrade.low_light import PairRecord
from lowlight_synth.degrade.low_light import compute_k
from lowlight_synth.degrade.low_light import derive_seed
from lowlight_synth.degrade.low_light import model_inputs
from lowlight_synth.degrade.low_light import replay_pair
from lowlight_synth.degrade.low_light import sample_params
from lowlight_synth.degrade.low_light import synthesize_pair
