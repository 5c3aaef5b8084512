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
"""Batch evaluation of (prediction, reference) image pairs."""
from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import collections
import csv
import io
import os
from concurrent import futures

import tensorflow as tf
from tqdm.auto import tqdm

from lowlight_synth.dataset import ingest as ingest_lib
from lowlight_synth.dataset import manifest as manifest_lib
from lowlight_synth.losses import adversarial
from lowlight_synth.metrics import image_quality

PairScore = collections.namedtuple("PairScore", ["pair_id", "psnr", "ssim"])

MetricReport = collections.namedtuple(
    "MetricReport", ["per_image", "mean_psnr", "mean_ssim", "config"])

_Pair = collections.namedtuple("_Pair", ["pair_id", "pred_path", "gt_path"])

TABLE_HEADER = ("id", "psnr", "ssim")


def manifest_pairs(manifest):
    """(dark, bright) pairs of a dataset manifest, keyed by file stem."""
    pairs = []
    for record in manifest.records:
        stem = os.path.basename(record.dark_path)
        pair_id = stem[:-len("_dark.png")] if stem.endswith(
            "_dark.png") else os.path.splitext(stem)[0]
        pairs.append(_Pair(pair_id, record.dark_path, record.bright_path))
    return pairs


def _image_names(directory):
    if not tf.io.gfile.isdir(directory):
        raise ValueError("Directory {} does not exist".format(directory))
    return set(
        name for name in tf.io.gfile.listdir(directory)
        if os.path.splitext(name)[1].lower() in ingest_lib.IMAGE_EXTENSIONS)


def directory_pairs(pred_dir, gt_dir):
    """Pairs images of `pred_dir` and `gt_dir` with the same file name.

    Files present on one side only are logged and left out.
    """
    pred_names = _image_names(pred_dir)
    gt_names = _image_names(gt_dir)
    unmatched = sorted(pred_names ^ gt_names)
    if unmatched:
        tf.get_logger().warning("Skipping %d unmatched files: %s",
                                len(unmatched), ", ".join(unmatched))
    return [
        _Pair(
            os.path.splitext(name)[0], os.path.join(pred_dir, name),
            os.path.join(gt_dir, name))
        for name in sorted(pred_names & gt_names)
    ]


def _score(pair):
    pred = ingest_lib.read_image(pair.pred_path)
    gt = ingest_lib.read_image(pair.gt_path)
    if pred.shape != gt.shape:
        return pair, "shape {} does not match {}".format(pred.shape, gt.shape)
    psnr = image_quality.cap_psnr(image_quality.psnr(pred, gt))
    return PairScore(pair.pair_id, psnr, image_quality.ssim(pred, gt)), None


def _report_config(pipeline_config):
    return {
        "lambda": adversarial.DEFAULT_LAMBDA,
        "psnr_cap": image_quality.PSNR_CAP,
        "ssim": {
            "window": image_quality.SSIM_WINDOW,
            "sigma": image_quality.SSIM_SIGMA,
            "k1": image_quality.SSIM_K1,
            "k2": image_quality.SSIM_K2,
        },
        "pipeline": (pipeline_config.get_config()
                     if pipeline_config is not None else None),
    }


def evaluate_pairs(pairs, pipeline_config=None, workers=1, progress=False):
    """Scores `pairs` of `(pair_id, pred_path, gt_path)`.

    Pairs are scored in parallel; the report keeps the input order. Pairs
    whose shapes differ are logged and skipped.

    Returns:
      A `MetricReport` whose PSNR values are capped at `PSNR_CAP`.

    Raises:
      ValueError: if no pair could be scored.
    """
    pairs = [_Pair(*pair) for pair in pairs]
    scores = []
    with futures.ThreadPoolExecutor(max_workers=max(1, workers)) as executor:
        for score, reason in tqdm(
                executor.map(_score, pairs),
                total=len(pairs),
                desc="eval",
                unit="pair",
                disable=not progress):
            if reason is not None:
                tf.get_logger().warning("Skipping pair %s: %s",
                                        score.pair_id, reason)
                continue
            scores.append(score)
    if not scores:
        raise ValueError("No image pairs to evaluate")
    return MetricReport(
        per_image=scores,
        mean_psnr=sum(s.psnr for s in scores) / len(scores),
        mean_ssim=sum(s.ssim for s in scores) / len(scores),
        config=_report_config(pipeline_config))


def evaluate(manifest=None,
             pred_dir=None,
             gt_dir=None,
             workers=1,
             progress=False):
    """Evaluates a dataset manifest or two directories of images.

    With `manifest`, every dark image is scored against its bright image
    and the manifest's pipeline config is echoed in the report. With
    `pred_dir` and `gt_dir`, files are paired by name.

    Args:
      manifest: a `Manifest` or a manifest path.
      pred_dir: directory of predicted images.
      gt_dir: directory of reference images.
      workers: number of worker threads.
      progress: show a progress bar on standard error.

    Returns:
      A `MetricReport`.
    """
    if (manifest is None) == (pred_dir is None or gt_dir is None):
        raise ValueError(
            "Pass either a manifest or both pred_dir and gt_dir")
    if manifest is not None:
        if not isinstance(manifest, manifest_lib.Manifest):
            manifest = manifest_lib.read_manifest(manifest)
        return evaluate_pairs(
            manifest_pairs(manifest), manifest.config, workers, progress)
    return evaluate_pairs(
        directory_pairs(pred_dir, gt_dir), None, workers, progress)


def write_report(report, path):
    """Writes `report` as a YAML document."""
    document = {
        "mean_psnr": float(report.mean_psnr),
        "mean_ssim": float(report.mean_ssim),
        "count": len(report.per_image),
        "config": report.config,
        "per_image": [{
            "id": score.pair_id,
            "psnr": float(score.psnr),
            "ssim": float(score.ssim),
        } for score in report.per_image],
    }
    return manifest_lib.write_yaml_atomic(document, path)


def write_table(report, path):
    """Writes one CSV row per pair: id, psnr, ssim."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(TABLE_HEADER)
    for score in report.per_image:
        writer.writerow([
            score.pair_id, "{:.17g}".format(score.psnr),
            "{:.17g}".format(score.ssim)
        ])
    with tf.io.gfile.GFile(path, "w") as f:
        f.write(buffer.getvalue())
    return path
