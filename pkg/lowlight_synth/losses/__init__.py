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
"""Training loss formulas."""
from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from lowlight_synth.losses.pixel import l1_loss
from lowlight_synth.losses.pixel import l2_loss
from lowlight_synth.losses.perceptual import AveragePoolingExtractor
from lowlight_synth.losses.perceptual import FeatureExtractor
from lowlight_synth.losses.perceptual import IdentityExtractor
from lowlight_synth.losses.perceptual import KerasFeatureExtractor
from lowlight_synth.losses.perceptual import perceptual_loss
from lowlight_synth.losses.perceptual import vgg19_extractor
from lowlight_synth.losses.adversarial import DEFAULT_LAMBDA
from lowlight_synth.losses.adversarial import DiscriminatorScores
from lowlight_synth.losses.adversarial import cgan_losses
from lowlight_synth.losses.adversarial import combined_objective
from lowlight_synth.losses.adversarial import pretrain_objective
