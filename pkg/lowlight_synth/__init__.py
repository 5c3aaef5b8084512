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
"""Synthetic low-light image pairs and evaluation for enhancement models."""
from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

# Local project imports
from lowlight_synth import crf
from lowlight_synth import dataset
from lowlight_synth import degrade
from lowlight_synth import image
from lowlight_synth import losses
from lowlight_synth import metrics

from lowlight_synth.version import __version__

# Cleanup symbols to avoid polluting namespace.
del absolute_import
del division
del print_function
