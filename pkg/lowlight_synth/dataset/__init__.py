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
"""Corpus ingestion and paired dataset persistence."""
from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from lowlight_synth.dataset.ingest import prepare
from lowlight_synth.dataset.ingest import read_image
from lowlight_synth.dataset.ingest import write_png
from lowlight_synth.dataset.manifest import Manifest
from lowlight_synth.dataset.manifest import read_manifest
from lowlight_synth.dataset.manifest import write_manifest
from lowlight_synth.dataset.generate import as_tf_dataset
from lowlight_synth.dataset.generate import corpus_mean_intensity
from lowlight_synth.dataset.generate import stream_pairs
from lowlight_synth.dataset.generate import verify_manifest
