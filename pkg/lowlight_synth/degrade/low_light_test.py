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
"""Tests for the low-light model and pair synthesis."""
from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import numpy as np
import tensorflow as tf

from lowlight_synth.crf import dorf
from lowlight_synth.crf import response_curve
from lowlight_synth.degrade import config as config_lib
from lowlight_synth.degrade import low_light as low_light_lib
from lowlight_synth.image import image_f
from lowlight_synth.image.image_f import ImageF


def _constant(value, shape=(4, 4, 3)):
    return ImageF(np.full(shape, value))


def _random_image(seed=0, shape=(16, 16, 3)):
    return ImageF(np.random.RandomState(seed).uniform(0.1, 0.9, size=shape))


def _analytic_config(**overrides):
    config = config_lib.PipelineConfig(
        epsilon_range=(0., 0.),
        gamma_range=(0.05, 0.05),
        shot_range=(0., 0.),
        read_range=(0., 0.),
        use_crf=False)
    return config.replace(**overrides)


class LowLightTest(tf.test.TestCase):
    def setUp(self):
        super(LowLightTest, self).setUp()
        self.identity = response_curve.identity_curve()
        self.rng = tf.random.Generator.from_seed(0)

    def test_pure_scaling(self):
        output = low_light_lib.low_light(_constant(0.8), 0.05, self.identity,
                                         self.identity, 0., 0., self.rng)
        self.assertAllClose(output.data, np.full((4, 4, 3), 0.04))
        self.assertEqual(output.colorspace, image_f.SRGB)

    def test_unit_gamma(self):
        image = _random_image()
        output = low_light_lib.low_light(image, 1., self.identity,
                                         self.identity, 0., 0., self.rng)
        self.assertAllClose(output.data, image.data, rtol=0., atol=1e-12)

    def test_gamma_curve_chain(self):
        curve = response_curve.gamma_curve(2.2)
        output = low_light_lib.low_light(
            _constant(0.5), 0.05, curve, curve, 0., 0., self.rng)
        expected = (0.05 * 0.5**2.2)**(1. / 2.2)
        self.assertAllClose(
            output.data, np.full((4, 4, 3), expected), rtol=0., atol=2e-3)

    def test_noise_order(self):
        image = _constant(0.5, (64, 64, 3))
        kwargs = dict(gamma=0.05, g_inv=self.identity, f=self.identity,
                      shot_strength=1e-3, read_sigma=1e-2)
        before = low_light_lib.low_light(
            image, rng=tf.random.Generator.from_seed(1), **kwargs)
        after = low_light_lib.low_light(
            image, rng=tf.random.Generator.from_seed(1),
            noise_after_gamma=True, **kwargs)
        # Noise added before darkening is scaled down by gamma.
        self.assertLess(np.std(before.numpy()), np.std(after.numpy()))

    def test_invalid_gamma(self):
        for gamma in (0., 1.5):
            with self.subTest(gamma=gamma):
                with self.assertRaisesRegex(ValueError, "gamma"):
                    low_light_lib.low_light(_constant(0.5), gamma,
                                            self.identity, self.identity, 0.,
                                            0., self.rng)


class ComputeKTest(tf.test.TestCase):
    def test_equal_images(self):
        image = _random_image()
        self.assertAllClose(low_light_lib.compute_k(image, image), 1.)

    def test_linearity(self):
        bright = _random_image(1)
        dark = bright.with_data(bright.data * 0.1)
        self.assertNear(low_light_lib.compute_k(bright, dark), 10., 1e-9)

    def test_random_means(self):
        rng = np.random.RandomState(4)
        bright = ImageF(rng.uniform(size=(8, 8, 3)))
        dark = ImageF(rng.uniform(0., 0.05, size=(8, 8, 3)))
        self.assertNear(
            low_light_lib.compute_k(bright, dark),
            np.mean(bright.numpy()) / np.mean(dark.numpy()), 1e-9)

    def test_degenerate(self):
        with self.assertRaises(low_light_lib.DegenerateImageError):
            low_light_lib.compute_k(_constant(0.5), _constant(0.))
        with self.assertRaisesRegex(low_light_lib.DegenerateImageError,
                                    "Bright image"):
            low_light_lib.compute_k(_constant(0.), _constant(0.1))

    def test_shape_mismatch(self):
        with self.assertRaisesRegex(ValueError, "same shape"):
            low_light_lib.compute_k(_constant(0.5), _constant(0.5, (4, 5, 3)))


class SeedTest(tf.test.TestCase):
    def test_derive_seed(self):
        self.assertEqual(
            low_light_lib.derive_seed(42, 3), low_light_lib.derive_seed(42, 3))
        seeds = {low_light_lib.derive_seed(42, i) for i in range(100)}
        self.assertLen(seeds, 100)
        self.assertNotEqual(
            low_light_lib.derive_seed(42, 0), low_light_lib.derive_seed(43, 0))
        self.assertLess(low_light_lib.derive_seed(42, 0), 2**64)

    def test_negative_seed(self):
        with self.assertRaisesRegex(ValueError, "non-negative"):
            low_light_lib.derive_seed(-1, 0)


class SampleParamsTest(tf.test.TestCase):
    def test_ranges(self):
        config = config_lib.PipelineConfig(use_crf=False)
        params = [
            low_light_lib.sample_params(None, config, seed)
            for seed in range(10000)
        ]
        gammas = np.array([p.gamma for p in params])
        epsilons = np.array([p.epsilon for p in params])
        self.assertTrue(np.all((gammas > 0.01) & (gammas < 0.09)))
        self.assertTrue(np.all((epsilons > -0.1) & (epsilons < 0.1)))
        self.assertNear(np.mean(gammas), 0.05, 0.005)
        self.assertNear(np.mean(epsilons), 0., 0.01)
        shots = np.array([p.shot_strength for p in params])
        reads = np.array([p.read_sigma for p in params])
        self.assertTrue(np.all((shots >= 1e-4) & (shots <= 1e-2)))
        self.assertTrue(np.all((reads >= 1e-3) & (reads <= 3e-2)))
        # Log-uniform: the log-midpoint splits the draws in half.
        self.assertNear(np.mean(shots < 1e-3), 0.5, 0.03)

    def test_fixed_ranges(self):
        params = low_light_lib.sample_params(None, _analytic_config(), 9)
        self.assertEqual(params.epsilon, 0.)
        self.assertEqual(params.gamma, 0.05)
        self.assertEqual(params.shot_strength, 0.)
        self.assertEqual(params.read_sigma, 0.)
        self.assertEqual(params.crf_inv_id, "identity")
        self.assertEqual(params.seed, 9)

    def test_curves_from_database(self):
        db = dorf.synthetic_database()
        params = low_light_lib.sample_params(db, config_lib.PipelineConfig(),
                                             12)
        self.assertIn(params.crf_inv_id, db.ids)
        self.assertIn(params.crf_fwd_id, db.ids)
        self.assertEqual(
            params,
            low_light_lib.sample_params(db, config_lib.PipelineConfig(), 12))


class SynthesizePairTest(tf.test.TestCase):
    def test_analytic_k(self):
        image = _random_image(2)
        bright, dark, record = low_light_lib.synthesize_pair(
            image, None, _analytic_config(), seed=5)
        self.assertNear(record.k, 20., 1e-6)
        self.assertAllClose(dark.data, bright.data, rtol=0., atol=1e-6)
        self.assertAllClose(bright.data, image.data, rtol=0., atol=0.)
        self.assertIsNone(record.bright_path)

    def test_deterministic(self):
        db = dorf.synthetic_database()
        image = _random_image(3)
        config = config_lib.PipelineConfig()
        first = low_light_lib.synthesize_pair(image, db, config, seed=77)
        second = low_light_lib.synthesize_pair(image, db, config, seed=77)
        self.assertAllEqual(first[0].data, second[0].data)
        self.assertAllEqual(first[1].data, second[1].data)
        self.assertEqual(first[2], second[2])

    def test_k_equalizes_means_before_clamp(self):
        db = dorf.synthetic_database()
        config = config_lib.PipelineConfig()
        for seed in range(5):
            with self.subTest(seed=seed):
                image = _random_image(seed)
                params = low_light_lib.sample_params(db, config, seed)
                rendering = low_light_lib.replay_pair(image, db, params,
                                                      config)
                self.assertNear(
                    float(tf.reduce_mean(rendering.scaled)),
                    rendering.bright.mean(), 1e-6)
                self.assertNear(rendering.k * rendering.low.mean(),
                                rendering.bright.mean(), 1e-6)

    def test_outputs_in_unit_range(self):
        db = dorf.synthetic_database()
        bright, dark, _ = low_light_lib.synthesize_pair(
            _random_image(6), db, config_lib.PipelineConfig(), seed=1)
        for image in (bright, dark):
            values = image.numpy()
            self.assertTrue(np.all((values >= 0.) & (values <= 1.)))

    def test_replay_matches(self):
        db = dorf.synthetic_database()
        image = _random_image(7)
        config = config_lib.PipelineConfig(noise_after_gamma=True)
        _, dark, record = low_light_lib.synthesize_pair(
            image, db, config, seed=31)
        rendering = low_light_lib.replay_pair(image, db, record.params,
                                              config)
        self.assertAllEqual(rendering.dark.data, dark.data)

    def test_no_k(self):
        bright, dark, record = low_light_lib.synthesize_pair(
            _random_image(8), None, _analytic_config(use_k=False), seed=2)
        self.assertEqual(record.k, 1.)
        self.assertAllClose(dark.data, bright.data * 0.05)

    def test_no_noise(self):
        config = config_lib.ablation_config("no_noise").replace(
            use_crf=False)
        image = _random_image(9)
        _, _, record = low_light_lib.synthesize_pair(image, None, config, 4)
        self.assertEqual(record.params.shot_strength, 0.)
        self.assertEqual(record.params.read_sigma, 0.)

    def test_black_image_is_degenerate(self):
        with self.assertRaises(low_light_lib.DegenerateImageError):
            low_light_lib.synthesize_pair(_constant(0.), None,
                                          _analytic_config(), seed=0)


class ModelInputsTest(tf.test.TestCase):
    def test_lab(self):
        bright, dark = _constant(0.5), _constant(0.2)
        x, y = low_light_lib.model_inputs(bright, dark,
                                          config_lib.PipelineConfig())
        self.assertEqual((x.colorspace, x.value_range),
                         (image_f.LAB, image_f.PM1))
        self.assertLess(x.numpy()[0, 0, 0], y.numpy()[0, 0, 0])

    def test_rgb(self):
        bright, dark = _constant(0.5), _constant(0.25)
        x, y = low_light_lib.model_inputs(bright, dark,
                                          config_lib.ablation_config("no_lab"))
        self.assertEqual(x.colorspace, image_f.SRGB)
        self.assertAllClose(x.data, np.full((4, 4, 3), -0.5))
        self.assertAllClose(y.data, np.zeros((4, 4, 3)))


if __name__ == "__main__":
    tf.test.main()
