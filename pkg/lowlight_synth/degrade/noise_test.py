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
"""Tests for sensor noise."""
from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import numpy as np
import tensorflow as tf

from lowlight_synth.degrade import noise
from lowlight_synth.image import image_f
from lowlight_synth.image.image_f import ImageF


def _linear(value, shape=(512, 512, 1)):
    return ImageF(np.full(shape, value), image_f.LINEAR_RGB)


class AddNoiseTest(tf.test.TestCase):
    def test_zero_strength_is_identity(self):
        image = ImageF(
            np.random.RandomState(0).uniform(size=(8, 8, 3)),
            image_f.LINEAR_RGB)
        rng = tf.random.Generator.from_seed(1)
        output = noise.add_noise(image, 0., 0., rng)
        self.assertAllEqual(output.data, image.data)

    def test_black_without_read_noise(self):
        rng = tf.random.Generator.from_seed(2)
        output = noise.add_noise(_linear(0., (64, 64, 3)), 1e-3, 0., rng)
        self.assertAllEqual(output.data, np.zeros((64, 64, 3)))

    def test_variance(self):
        for shot, read, value in ((1e-3, 1e-2, 0.5), (1e-2, 0., 0.3),
                                  (0., 3e-2, 0.6)):
            with self.subTest(shot=shot, read=read):
                rng = tf.random.Generator.from_seed(3)
                output = noise.add_noise(_linear(value), shot, read, rng)
                expected = shot * value + read**2
                variance = np.var(output.numpy())
                self.assertBetween(variance, 0.9 * expected, 1.1 * expected)
                self.assertNear(np.mean(output.numpy()), value, 1e-3)

    def test_deterministic(self):
        image = _linear(0.4, (16, 16, 3))
        first = noise.add_noise(image, 1e-2, 1e-2,
                                tf.random.Generator.from_seed(5))
        second = noise.add_noise(image, 1e-2, 1e-2,
                                 tf.random.Generator.from_seed(5))
        self.assertAllEqual(first.data, second.data)

    def test_output_clamped(self):
        rng = tf.random.Generator.from_seed(6)
        output = noise.add_noise(_linear(0.99, (32, 32, 3)), 0.5, 0.5, rng)
        values = output.numpy()
        self.assertTrue(np.all((values >= 0.) & (values <= 1.)))
        self.assertEqual(output.colorspace, image_f.LINEAR_RGB)

    def test_negative_strength(self):
        rng = tf.random.Generator.from_seed(7)
        with self.assertRaisesRegex(ValueError, "non-negative"):
            noise.add_noise(_linear(0.5, (2, 2, 1)), -1e-3, 0., rng)

    def test_requires_linear_image(self):
        rng = tf.random.Generator.from_seed(8)
        with self.assertRaisesRegex(ValueError, "add_noise expects"):
            noise.add_noise(ImageF(np.zeros((2, 2, 3))), 0., 0., rng)

    def test_noise_variance(self):
        self.assertAllClose(
            noise.noise_variance(tf.constant([0., 0.5], tf.float64), 1e-3,
                                 1e-2), [1e-4, 6e-4])


if __name__ == "__main__":
    tf.test.main()
