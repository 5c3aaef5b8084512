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
"""Dataset manifests."""
from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import collections
import math
import os

import tensorflow as tf
import yaml

from lowlight_synth.degrade.config import PipelineConfig
from lowlight_synth.degrade.low_light import DegradeParams
from lowlight_synth.degrade.low_light import PairRecord

MANIFEST_VERSION = "1.0"
MANIFEST_FILENAME = "manifest.yaml"

Manifest = collections.namedtuple("Manifest", [
    "version", "global_seed", "config", "corpus_mean_intensity", "records",
    "skipped"
])

SkippedImage = collections.namedtuple("SkippedImage",
                                      ["index", "source_path", "reason"])


class _Dumper(yaml.SafeDumper):
    """Writes floats with 17 significant digits and tuples as lists."""


def _represent_float(dumper, value):
    if not math.isfinite(value):
        return dumper.represent_float(value)
    return dumper.represent_scalar("tag:yaml.org,2002:float",
                                   "{:.16e}".format(value))


def _represent_tuple(dumper, value):
    return dumper.represent_list(list(value))


_Dumper.add_representer(float, _represent_float)
_Dumper.add_representer(tuple, _represent_tuple)


def dump_yaml(document):
    """Serializes `document` with full float precision."""
    return yaml.dump(
        document, Dumper=_Dumper, default_flow_style=False, sort_keys=False)


def write_yaml_atomic(document, path):
    """Writes `document` to `path` through a temporary file and a rename."""
    temp_path = path + ".tmp"
    with tf.io.gfile.GFile(temp_path, "w") as f:
        f.write(dump_yaml(document))
    tf.io.gfile.rename(temp_path, path, overwrite=True)
    return path


def _relative(path, root):
    if path is None:
        return None
    return os.path.relpath(path, root).replace(os.sep, "/")


def _resolve(path, root):
    if path is None:
        return None
    return os.path.normpath(os.path.join(root, path))


def _params_document(params):
    document = params._asdict()
    for key in ("epsilon", "gamma", "shot_strength", "read_sigma"):
        document[key] = float(document[key])
    document["seed"] = int(document["seed"])
    return document


def write_manifest(manifest, out_dir):
    """Writes `manifest` as `out_dir/manifest.yaml`.

    Record paths are stored relative to `out_dir`, so a dataset directory
    can be moved as a whole.

    Returns:
      The manifest path.
    """
    records = []
    for record in manifest.records:
        records.append({
            "bright_path": _relative(record.bright_path, out_dir),
            "dark_path": _relative(record.dark_path, out_dir),
            "k": float(record.k),
            "params": _params_document(record.params),
            "source_path": _relative(record.source_path, out_dir),
        })
    skipped = [{
        "index": int(skip.index),
        "source_path": _relative(skip.source_path, out_dir),
        "reason": skip.reason,
    } for skip in manifest.skipped]
    document = {
        "version": manifest.version,
        "global_seed": int(manifest.global_seed),
        "config": manifest.config.get_config(),
        "corpus_mean_intensity": float(manifest.corpus_mean_intensity),
        "records": records,
        "skipped": skipped,
    }
    return write_yaml_atomic(document, os.path.join(out_dir,
                                                    MANIFEST_FILENAME))


def read_manifest(path):
    """Loads a manifest; record paths are resolved against its directory.

    Raises:
      ValueError: if the document is not a manifest of a known version.
    """
    with tf.io.gfile.GFile(path, "r") as f:
        document = yaml.safe_load(f.read())
    if not isinstance(document, dict) or "records" not in document:
        raise ValueError("{} is not a dataset manifest".format(path))
    if document.get("version") != MANIFEST_VERSION:
        raise ValueError("Unsupported manifest version {!r} in {}".format(
            document.get("version"), path))

    root = os.path.dirname(path)
    records = [
        PairRecord(
            bright_path=_resolve(record["bright_path"], root),
            dark_path=_resolve(record["dark_path"], root),
            k=record["k"],
            params=DegradeParams(**record["params"]),
            source_path=_resolve(record.get("source_path"), root))
        for record in document["records"]
    ]
    skipped = [
        SkippedImage(skip["index"], _resolve(skip["source_path"], root),
                     skip["reason"]) for skip in document.get("skipped", [])
    ]
    return Manifest(
        version=document["version"],
        global_seed=document["global_seed"],
        config=PipelineConfig.from_config(document["config"]),
        corpus_mean_intensity=document["corpus_mean_intensity"],
        records=records,
        skipped=skipped)
