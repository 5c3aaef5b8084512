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
"""Camera response functions."""
from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from lowlight_synth.crf.response_curve import ResponseCurve
from lowlight_synth.crf.response_curve import apply
from lowlight_synth.crf.response_curve import gamma_curve
from lowlight_synth.crf.response_curve import identity_curve
from lowlight_synth.crf.response_curve import invert
from lowlight_synth.crf.response_curve import roundtrip_error
from lowlight_synth.crf.dorf import CrfDatabase
from lowlight_synth.crf.dorf import DorfParseError
from lowlight_synth.crf.dorf import load_dorf
from lowlight_synth.crf.dorf import load_dorf_file
from lowlight_synth.crf.dorf import sample_curve
from lowlight_synth.crf.dorf import synthetic_database
