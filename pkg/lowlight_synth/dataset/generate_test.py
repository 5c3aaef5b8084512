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
"""Tests for dataset generation."""
from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import os

import numpy as np
import tensorflow as tf

from lowlight_synth.crf import dorf
from lowlight_synth.dataset import generate as generate_lib
from lowlight_synth.dataset import manifest as manifest_lib
from lowlight_synth.degrade import config as config_lib
from lowlight_synth.utils import test_utils


def _read_bytes(path):
    with tf.io.gfile.GFile(path, "rb") as f:
        return f.read()


class GenerateTest(tf.test.TestCase):
    def setUp(self):
        super(GenerateTest, self).setUp()
        self.corpus = os.path.join(self.get_temp_dir(), "corpus")
        if not tf.io.gfile.exists(self.corpus):
            test_utils.make_corpus(self.corpus, 3)
        self.config = config_lib.PipelineConfig(size=16)

    def _out(self, name):
        return os.path.join(self.get_temp_dir(), name)

    def test_three_images(self):
        out_dir = self._out("three")
        manifest = generate_lib.generate(self.corpus, out_dir, self.config,
                                         seed=1)
        self.assertLen(manifest.records, 3)
        self.assertEqual(manifest.skipped, [])
        names = sorted(tf.io.gfile.listdir(out_dir))
        self.assertEqual(names, [
            "000000_bright.png", "000000_dark.png", "000001_bright.png",
            "000001_dark.png", "000002_bright.png", "000002_dark.png",
            "manifest.yaml"
        ])
        for record in manifest.records:
            self.assertGreater(record.k, 0.)
            self.assertEqual(test_utils.read_png(record.dark_path).shape,
                             (16, 16, 3))

    def test_deterministic_and_worker_independent(self):
        outputs = []
        for name, workers in (("run_a", 1), ("run_b", 1), ("run_c", 8)):
            out_dir = self._out(name)
            generate_lib.generate(self.corpus, out_dir, self.config, seed=7,
                                  workers=workers)
            outputs.append({
                filename: _read_bytes(os.path.join(out_dir, filename))
                for filename in tf.io.gfile.listdir(out_dir)
            })
        self.assertEqual(outputs[0], outputs[1])
        self.assertEqual(outputs[0], outputs[2])

    def test_seed_changes_output(self):
        first = generate_lib.generate(self.corpus, self._out("seed_a"),
                                      self.config, seed=1)
        second = generate_lib.generate(self.corpus, self._out("seed_b"),
                                       self.config, seed=2)
        self.assertNotEqual(first.records[0].params,
                            second.records[0].params)

    def test_corpus_mean_intensity(self):
        manifest = generate_lib.generate(self.corpus, self._out("mean"),
                                         self.config, seed=3)
        samples = np.concatenate([
            test_utils.read_png(record.bright_path).ravel() / 255.
            for record in manifest.records
        ])
        self.assertNear(manifest.corpus_mean_intensity, np.mean(samples),
                        1e-6)

    def test_verify_replays(self):
        out_dir = self._out("verify")
        generate_lib.generate(self.corpus, out_dir, self.config, seed=4)
        report = generate_lib.verify_manifest(
            os.path.join(out_dir, manifest_lib.MANIFEST_FILENAME))
        self.assertTrue(report.ok)
        self.assertEqual(report.replayed, 3)
        self.assertLessEqual(report.max_level_difference, 1)
        self.assertNear(report.recomputed_mean, report.stored_mean, 1e-6)

    def test_verify_detects_tampering(self):
        out_dir = self._out("tampered")
        manifest = generate_lib.generate(self.corpus, out_dir, self.config,
                                         seed=4)
        dark = test_utils.read_png(manifest.records[0].dark_path)
        test_utils.write_png(manifest.records[0].dark_path, 255 - dark)
        report = generate_lib.verify_manifest(
            os.path.join(out_dir, manifest_lib.MANIFEST_FILENAME))
        self.assertFalse(report.ok)

    def test_black_image_is_skipped(self):
        corpus = self._out("with_black")
        test_utils.make_corpus(corpus, 2)
        test_utils.write_png(
            os.path.join(corpus, "img_000_black.png"),
            np.zeros((24, 32, 3), np.uint8))
        out_dir = self._out("with_black_out")
        with self.assertLogs(tf.get_logger(), "WARNING"):
            manifest = generate_lib.generate(corpus, out_dir, self.config,
                                             seed=0)
        self.assertLen(manifest.records, 2)
        self.assertLen(manifest.skipped, 1)
        self.assertEqual(manifest.skipped[0].index, 1)
        self.assertFalse(
            tf.io.gfile.exists(os.path.join(out_dir, "000001_dark.png")))
        loaded = manifest_lib.read_manifest(
            os.path.join(out_dir, manifest_lib.MANIFEST_FILENAME))
        self.assertEqual(
            os.path.basename(loaded.skipped[0].source_path),
            "img_000_black.png")

    def test_all_black_corpus(self):
        corpus = self._out("all_black")
        tf.io.gfile.makedirs(corpus)
        test_utils.write_png(
            os.path.join(corpus, "black.png"), np.zeros((8, 8, 3), np.uint8))
        with self.assertRaisesRegex(ValueError, "skipped"):
            generate_lib.generate(corpus, self._out("all_black_out"),
                                  self.config, seed=0)

    def test_ablations(self):
        checks = {
            "no_epsilon": lambda r: r.params.epsilon == 0.,
            "no_noise": lambda r: (r.params.shot_strength == 0. and r.params.
                                   read_sigma == 0.),
            "no_crf": lambda r: r.params.crf_inv_id == "identity",
            "no_k": lambda r: r.k == 1.,
        }
        for name, check in checks.items():
            with self.subTest(name=name):
                config = config_lib.apply_ablation(self.config, name)
                manifest = generate_lib.generate(self.corpus,
                                                 self._out("abl_" + name),
                                                 config, seed=5)
                self.assertTrue(all(check(r) for r in manifest.records))
                self.assertEqual(manifest.config.ablation, name)

    def test_dorf_file(self):
        dorf_path = test_utils.write_text(
            self._out("curves.txt"), test_utils.gamma_dorf_text([1.6, 2.4]))
        config = self.config.replace(crf_file=dorf_path)
        manifest = generate_lib.generate(self.corpus, self._out("dorf"),
                                         config, seed=6)
        for record in manifest.records:
            self.assertIn(record.params.crf_inv_id,
                          ("gamma-1.6.txt", "gamma-2.4.txt"))

    def test_limit(self):
        manifest = generate_lib.generate(self.corpus, self._out("limit"),
                                         self.config, seed=1, limit=2)
        self.assertLen(manifest.records, 2)

    def test_write_failure(self):
        out_dir = self._out("blocked")
        tf.io.gfile.makedirs(os.path.join(out_dir, "000000_bright.png"))
        with self.assertLogs(tf.get_logger(), "WARNING") as logs:
            with self.assertRaises(IOError):
                generate_lib.generate(self.corpus, out_dir, self.config,
                                      seed=1)
        self.assertIn("partial output", "".join(logs.output))
        self.assertFalse(
            tf.io.gfile.exists(
                os.path.join(out_dir, manifest_lib.MANIFEST_FILENAME)))

    def test_invalid_arguments(self):
        with self.assertRaisesRegex(ValueError, "workers"):
            generate_lib.generate(self.corpus, self._out("bad"), self.config,
                                  seed=1, workers=0)
        with self.assertRaisesRegex(ValueError, "seed"):
            generate_lib.generate(self.corpus, self._out("bad"), self.config,
                                  seed=-1)


class StreamTest(tf.test.TestCase):
    def setUp(self):
        super(StreamTest, self).setUp()
        self.corpus = os.path.join(self.get_temp_dir(), "stream_corpus")
        if not tf.io.gfile.exists(self.corpus):
            test_utils.make_corpus(self.corpus, 2)
        self.config = config_lib.PipelineConfig(size=16)

    def test_stream_matches_generate(self):
        manifest = generate_lib.generate(
            self.corpus, os.path.join(self.get_temp_dir(), "stream_out"),
            self.config, seed=9)
        pairs = list(generate_lib.stream_pairs(self.corpus, self.config, 9))
        self.assertLen(pairs, 2)
        for (bright, dark, record), stored in zip(pairs, manifest.records):
            self.assertEqual(record.params, stored.params)
            self.assertAllEqual(dark.to_uint8(),
                                test_utils.read_png(stored.dark_path))
            self.assertAllEqual(bright.to_uint8(),
                                test_utils.read_png(stored.bright_path))

    def test_tf_dataset(self):
        dataset = generate_lib.as_tf_dataset(self.corpus, self.config, 9)
        elements = list(dataset)
        self.assertLen(elements, 2)
        x, y = elements[0]
        self.assertEqual(x.shape, (16, 16, 3))
        self.assertEqual(y.dtype, tf.float64)
        self.assertTrue(np.all(np.abs(x.numpy()) <= 1.))

    def test_corpus_mean_intensity(self):
        paths = test_utils.make_corpus(
            os.path.join(self.get_temp_dir(), "mean_corpus"), 2,
            shape=(4, 4, 3))
        expected = np.mean(
            np.concatenate([test_utils.read_png(p).ravel() for p in paths
                           ])) / 255.
        self.assertNear(generate_lib.corpus_mean_intensity(paths), expected,
                        1e-12)

    def test_load_database(self):
        self.assertIsNone(
            generate_lib.load_database(config_lib.ablation_config("no_crf")))
        db = generate_lib.load_database(config_lib.PipelineConfig())
        self.assertEqual(db.source, dorf.SYNTHETIC_SOURCE)


if __name__ == "__main__":
    tf.test.main()
