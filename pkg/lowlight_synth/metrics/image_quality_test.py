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
"""Tests for PSNR and SSIM."""
from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import math

import numpy as np
import tensorflow as tf

from lowlight_synth.image import image_f
from lowlight_synth.image.image_f import ImageF
from lowlight_synth.metrics import image_quality


def _gaussian(size=11, sigma=1.5):
    coords = np.arange(size) - (size - 1) / 2.
    window = np.exp(-coords**2 / (2. * sigma**2))
    window = np.outer(window, window)
    return window / window.sum()


def _ssim_oracle(x, y, size=11, sigma=1.5):
    window = _gaussian(size, sigma)
    c1 = 0.01**2
    c2 = 0.03**2
    values = []
    for i in range(x.shape[0] - size + 1):
        for j in range(x.shape[1] - size + 1):
            for c in range(x.shape[2]):
                a = x[i:i + size, j:j + size, c]
                b = y[i:i + size, j:j + size, c]
                mu_a = np.sum(window * a)
                mu_b = np.sum(window * b)
                var_a = np.sum(window * a * a) - mu_a**2
                var_b = np.sum(window * b * b) - mu_b**2
                cov = np.sum(window * a * b) - mu_a * mu_b
                values.append(
                    (2. * mu_a * mu_b + c1) * (2. * cov + c2) /
                    ((mu_a**2 + mu_b**2 + c1) * (var_a + var_b + c2)))
    return np.mean(values)


class PsnrTest(tf.test.TestCase):
    def test_constant_offset(self):
        pred = ImageF(np.full((4, 4, 3), 0.5))
        gt = ImageF(np.full((4, 4, 3), 0.6))
        self.assertNear(image_quality.psnr(pred, gt), 20., 1e-9)

    def test_identical(self):
        image = ImageF(np.random.RandomState(0).uniform(size=(5, 5, 3)))
        self.assertEqual(image_quality.psnr(image, image), math.inf)
        self.assertEqual(
            image_quality.cap_psnr(image_quality.psnr(image, image)), 99.)

    def test_brute_force(self):
        rng = np.random.RandomState(1)
        for _ in range(100):
            x = rng.uniform(size=(8, 8, 3))
            y = rng.uniform(size=(8, 8, 3))
            total = 0.
            for i in range(8):
                for j in range(8):
                    total += np.sum((x[i, j] - y[i, j])**2)
            expected = 10. * math.log10(1. / (total / x.size))
            self.assertNear(
                image_quality.psnr(ImageF(x), ImageF(y)), expected, 1e-9)

    def test_symmetric(self):
        rng = np.random.RandomState(2)
        x = ImageF(rng.uniform(size=(6, 7, 3)))
        y = ImageF(rng.uniform(size=(6, 7, 3)))
        self.assertEqual(
            image_quality.psnr(x, y), image_quality.psnr(y, x))

    def test_shape_mismatch(self):
        with self.assertRaisesRegex(ValueError, "shape"):
            image_quality.psnr(
                ImageF(np.zeros((4, 4, 3))), ImageF(np.zeros((4, 5, 3))))

    def test_rejects_lab(self):
        lab = ImageF(
            np.zeros((4, 4, 3)),
            colorspace=image_f.LAB,
            value_range=image_f.LAB_NATIVE)
        with self.assertRaises(ValueError):
            image_quality.psnr(lab, lab)


class SsimTest(tf.test.TestCase):
    def test_identical(self):
        image = ImageF(np.random.RandomState(3).uniform(size=(16, 16, 3)))
        self.assertNear(image_quality.ssim(image, image), 1., 1e-12)

    def test_brute_force(self):
        rng = np.random.RandomState(4)
        x = rng.uniform(size=(16, 16, 3))
        y = np.clip(x + rng.normal(scale=0.1, size=x.shape), 0., 1.)
        self.assertNear(
            image_quality.ssim(ImageF(x), ImageF(y)), _ssim_oracle(x, y),
            1e-6)

    def test_non_square(self):
        rng = np.random.RandomState(5)
        x = rng.uniform(size=(12, 17, 3))
        y = rng.uniform(size=(12, 17, 3))
        value = image_quality.ssim(ImageF(x), ImageF(y))
        self.assertNear(value, _ssim_oracle(x, y), 1e-6)
        self.assertBetween(value, -1., 1.)

    def test_degradation_lowers_score(self):
        rng = np.random.RandomState(6)
        x = rng.uniform(size=(16, 16, 3))
        mild = ImageF(np.clip(x + rng.normal(scale=0.02, size=x.shape), 0.,
                              1.))
        strong = ImageF(np.clip(x + rng.normal(scale=0.2, size=x.shape), 0.,
                                1.))
        self.assertGreater(
            image_quality.ssim(ImageF(x), mild),
            image_quality.ssim(ImageF(x), strong))

    def test_too_small(self):
        image = ImageF(np.zeros((10, 16, 3)))
        with self.assertRaisesRegex(ValueError, "at least 11x11"):
            image_quality.ssim(image, image)


if __name__ == "__main__":
    tf.test.main()
