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
"""Tests for pixel losses."""
from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import numpy as np
import tensorflow as tf

from lowlight_synth.image.image_f import ImageF
from lowlight_synth.losses import pixel


class PixelLossTest(tf.test.TestCase):
    def test_identical(self):
        image = ImageF(np.random.RandomState(0).uniform(size=(4, 4, 3)))
        self.assertEqual(float(pixel.l1_loss(image, image)), 0.)
        self.assertEqual(float(pixel.l2_loss(image, image)), 0.)

    def test_constant_difference(self):
        pred = np.full((4, 4, 3), 0.3)
        gt = np.full((4, 4, 3), 0.5)
        self.assertAllClose(pixel.l1_loss(pred, gt), 0.2)
        self.assertAllClose(pixel.l2_loss(pred, gt), 0.04)

    def test_brute_force(self):
        rng = np.random.RandomState(1)
        pred = rng.uniform(-1., 1., size=(6, 5, 3))
        gt = rng.uniform(-1., 1., size=(6, 5, 3))
        abs_sum = 0.
        sq_sum = 0.
        for i in range(6):
            for j in range(5):
                for c in range(3):
                    diff = gt[i, j, c] - pred[i, j, c]
                    abs_sum += abs(diff)
                    sq_sum += diff * diff
        self.assertNear(float(pixel.l1_loss(pred, gt)), abs_sum / 90., 1e-12)
        self.assertNear(float(pixel.l2_loss(pred, gt)), sq_sum / 90., 1e-12)

    def test_mixed_inputs(self):
        image = ImageF(np.full((2, 2, 3), 0.25))
        self.assertAllClose(
            pixel.l1_loss(image, tf.fill((2, 2, 3), 0.5)), 0.25)

    def test_shape_mismatch(self):
        with self.assertRaisesRegex(ValueError, "same shape"):
            pixel.l1_loss(np.zeros((2, 2, 3)), np.zeros((2, 3, 3)))

    def test_integer_input(self):
        with self.assertRaisesRegex(TypeError, "floating point"):
            pixel.l2_loss(np.zeros((2, 2), np.int32), np.zeros((2, 2)))

    def test_differentiable(self):
        pred = tf.Variable(np.full((2, 2, 1), 0.5))
        with tf.GradientTape() as tape:
            loss = pixel.l2_loss(pred, np.zeros((2, 2, 1)))
        self.assertAllClose(tape.gradient(loss, pred), np.full((2, 2, 1),
                                                               0.25))


if __name__ == "__main__":
    tf.test.main()
