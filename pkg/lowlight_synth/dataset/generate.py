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
"""Parallel generation, streaming and verification of paired datasets."""
from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import collections
import os
from concurrent import futures

import numpy as np
import tensorflow as tf
from tqdm.auto import tqdm

from lowlight_synth.crf import dorf
from lowlight_synth.dataset import ingest as ingest_lib
from lowlight_synth.dataset import manifest as manifest_lib
from lowlight_synth.degrade import low_light

BRIGHT_SUFFIX = "_bright.png"
DARK_SUFFIX = "_dark.png"

_Result = collections.namedtuple(
    "_Result", ["index", "source_path", "record", "reason", "bright_sum",
                "bright_count"])

VerifyReport = collections.namedtuple("VerifyReport", [
    "stored_mean", "recomputed_mean", "max_level_difference",
    "replayed", "ok"
])


def load_database(config):
    """The curve database `config` draws from, or None without CRFs."""
    if not config.use_crf:
        return None
    if config.crf_file:
        return dorf.load_dorf_file(config.crf_file)
    return dorf.synthetic_database()


def pair_paths(out_dir, index):
    stem = os.path.join(out_dir, "{:06d}".format(index))
    return stem + BRIGHT_SUFFIX, stem + DARK_SUFFIX


def _write_pair(bright_path, bright, dark_path, dark):
    try:
        ingest_lib.write_png(bright_path, bright)
        ingest_lib.write_png(dark_path, dark)
    except tf.errors.OpError as e:
        raise IOError("Failed to write {}: {}".format(bright_path, e.message))


def generate(input_dir,
             out_dir,
             config,
             seed,
             workers=1,
             limit=None,
             db=None,
             progress=False):
    """Materializes a paired dataset from an image directory.

    Each ingested image is prepared, turned into a (bright, dark) pair with
    its own seed `derive_seed(seed, index)` and written as
    `<index>_bright.png` and `<index>_dark.png`. Workers write PNGs in
    parallel; records are collected in index order by the calling thread,
    so the output does not depend on `workers`. Pairs whose dark image is
    black are skipped and listed in the manifest.

    Args:
      input_dir: corpus directory.
      out_dir: output directory, created if needed.
      config: a `PipelineConfig`.
      seed: non-negative global seed.
      workers: number of worker threads.
      limit: optional maximum number of source images.
      db: optional `CrfDatabase`; defaults to `load_database(config)`.
      progress: show a progress bar on standard error.

    Returns:
      The written `Manifest`.

    Raises:
      ValueError: if the corpus is unusable or every pair was skipped.
      IOError: if an output file cannot be written.
    """
    if workers < 1:
        raise ValueError("workers must be positive, got {}".format(workers))
    if seed < 0:
        raise ValueError("seed must be non-negative, got {}".format(seed))
    paths = ingest_lib.ingest(input_dir, limit)
    if db is None:
        db = load_database(config)
    tf.io.gfile.makedirs(out_dir)

    def work(index):
        source_path = paths[index]
        image = ingest_lib.prepare(
            ingest_lib.read_image(source_path), config.size)
        try:
            bright, dark, record = low_light.synthesize_pair(
                image, db, config, low_light.derive_seed(seed, index))
        except low_light.DegenerateImageError as e:
            return _Result(index, source_path, None, str(e), 0, 0)
        bright_path, dark_path = pair_paths(out_dir, index)
        _write_pair(bright_path, bright, dark_path, dark)
        levels = bright.to_uint8().numpy()
        record = record._replace(
            bright_path=bright_path,
            dark_path=dark_path,
            source_path=source_path)
        return _Result(index, source_path, record, None,
                       int(np.sum(levels, dtype=np.int64)), levels.size)

    records = []
    skipped = []
    level_sum = 0
    sample_count = 0
    try:
        with futures.ThreadPoolExecutor(max_workers=workers) as executor:
            for result in tqdm(
                    executor.map(work, range(len(paths))),
                    total=len(paths),
                    desc="gen",
                    unit="img",
                    disable=not progress):
                if result.record is None:
                    tf.get_logger().warning("Skipping %s: %s",
                                            result.source_path, result.reason)
                    skipped.append(
                        manifest_lib.SkippedImage(
                            result.index, result.source_path, result.reason))
                    continue
                records.append(result.record)
                level_sum += result.bright_sum
                sample_count += result.bright_count
    except IOError:
        tf.get_logger().warning(
            "Generation aborted; %s holds partial output and no manifest.",
            out_dir)
        raise

    if not records:
        raise ValueError("Every image of {} was skipped".format(input_dir))

    manifest = manifest_lib.Manifest(
        version=manifest_lib.MANIFEST_VERSION,
        global_seed=int(seed),
        config=config,
        corpus_mean_intensity=level_sum / (255. * sample_count),
        records=records,
        skipped=skipped)
    try:
        manifest_lib.write_manifest(manifest, out_dir)
    except tf.errors.OpError as e:
        tf.get_logger().warning(
            "Generation aborted; %s holds partial output and no manifest.",
            out_dir)
        raise IOError("Failed to write the manifest: {}".format(e.message))
    tf.get_logger().info("Wrote %d pairs (%d skipped) to %s.", len(records),
                         len(skipped), out_dir)
    return manifest


def stream_pairs(input_dir, config, seed, limit=None, db=None):
    """Yields `(H, L, record)` per image without writing anything.

    Uses the same per-image seeds as `generate`, so the pairs equal the
    ones `generate` stores before 8-bit quantization. Degenerate images are
    skipped.
    """
    paths = ingest_lib.ingest(input_dir, limit)
    if db is None:
        db = load_database(config)
    for index, source_path in enumerate(paths):
        image = ingest_lib.prepare(
            ingest_lib.read_image(source_path), config.size)
        try:
            bright, dark, record = low_light.synthesize_pair(
                image, db, config, low_light.derive_seed(seed, index))
        except low_light.DegenerateImageError as e:
            tf.get_logger().warning("Skipping %s: %s", source_path, e)
            continue
        yield bright, dark, record._replace(source_path=source_path)


def as_tf_dataset(input_dir, config, seed, limit=None, db=None):
    """A `tf.data.Dataset` of `(x, y)` model inputs generated on the fly.

    `x` is the dark image and `y` the bright one, both `[size, size, 3]`
    float64 tensors on [-1, 1], in LAB when `config.lab` is on.
    """

    def generator():
        for bright, dark, _ in stream_pairs(input_dir, config, seed, limit,
                                            db):
            x, y = low_light.model_inputs(bright, dark, config)
            yield x.data, y.data

    spec = tf.TensorSpec([config.size, config.size, 3], tf.float64)
    return tf.data.Dataset.from_generator(
        generator, output_signature=(spec, spec))


def corpus_mean_intensity(paths):
    """Mean of all 8-bit samples of `paths`, as a value on [0, 1]."""
    level_sum = 0
    sample_count = 0
    for path in paths:
        levels = ingest_lib.read_image(path).to_uint8().numpy()
        level_sum += int(np.sum(levels, dtype=np.int64))
        sample_count += levels.size
    if not sample_count:
        raise ValueError("corpus_mean_intensity needs at least one image")
    return level_sum / (255. * sample_count)


def verify_manifest(path, db=None, tolerance=1e-6, progress=False):
    """Checks a stored dataset against its manifest.

    Recomputes the corpus mean intensity from the stored bright PNGs and
    replays every record from its source image and parameters, comparing
    the replayed dark image with the stored one in 8-bit levels.

    Args:
      path: manifest path.
      db: optional `CrfDatabase`; defaults to the manifest config's.
      tolerance: allowed difference of the corpus mean.
      progress: show a progress bar on standard error.

    Returns:
      A `VerifyReport`. `ok` requires the mean within `tolerance` and every
      replayed dark image within one level of the stored one.
    """
    manifest = manifest_lib.read_manifest(path)
    config = manifest.config
    if db is None:
        db = load_database(config)

    recomputed = corpus_mean_intensity(
        [record.bright_path for record in manifest.records])
    max_difference = 0
    for record in tqdm(
            manifest.records,
            desc="verify",
            unit="pair",
            disable=not progress):
        image = ingest_lib.prepare(
            ingest_lib.read_image(record.source_path), config.size)
        rendering = low_light.replay_pair(image, db, record.params, config)
        replayed = rendering.dark.to_uint8().numpy().astype(np.int32)
        stored = ingest_lib.read_image(
            record.dark_path).to_uint8().numpy().astype(np.int32)
        max_difference = max(max_difference,
                             int(np.max(np.abs(replayed - stored))))

    ok = (abs(recomputed - manifest.corpus_mean_intensity) <= tolerance
          and max_difference <= 1)
    return VerifyReport(
        stored_mean=manifest.corpus_mean_intensity,
        recomputed_mean=recomputed,
        max_level_difference=max_difference,
        replayed=len(manifest.records),
        ok=ok)
