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
"""Feature-space perceptual loss and feature extractors."""
from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import abc

import tensorflow as tf

from lowlight_synth.losses import pixel


class FeatureExtractor(abc.ABC):
    """Maps an `[height, width, channels]` image to named feature volumes.

    Each layer `j` maps an image to a `[h_j, w_j, c_j]` float64 tensor.
    Implementations must be deterministic and return the same shape for a
    fixed input shape.
    """

    @property
    @abc.abstractmethod
    def layer_names(self):
        """Ordered names of the available feature layers."""

    @abc.abstractmethod
    def features(self, image, layer):
        """Feature volume of layer `layer` for a float64 HWC `image`."""

    def check_layer(self, layer):
        if layer not in self.layer_names:
            raise ValueError("Unknown layer {!r}; valid layers are {}".format(
                layer, list(self.layer_names)))


class IdentityExtractor(FeatureExtractor):
    """A single layer, `identity`, returning the image itself."""

    LAYER = "identity"

    @property
    def layer_names(self):
        return (self.LAYER,)

    def features(self, image, layer):
        self.check_layer(layer)
        return image


class AveragePoolingExtractor(FeatureExtractor):
    """A single layer, `avg_pool`: stride-1 average pooling, no padding."""

    LAYER = "avg_pool"

    def __init__(self, pool_size=3):
        if pool_size < 1:
            raise ValueError(
                "pool_size must be positive, got {}".format(pool_size))
        self.pool_size = pool_size

    @property
    def layer_names(self):
        return (self.LAYER,)

    def features(self, image, layer):
        self.check_layer(layer)
        pooled = tf.nn.avg_pool2d(
            image[None],
            ksize=self.pool_size,
            strides=1,
            padding="VALID")
        return pooled[0]


class KerasFeatureExtractor(FeatureExtractor):
    """Feature layers of a Keras model.

    Args:
      model: a functional `tf.keras.Model` taking `[batch, h, w, c]`
        images.
      layer_names: names of the layers to expose.
      preprocess: optional callable applied to the batched input tensor,
        after the cast to the model's dtype.
    """

    def __init__(self, model, layer_names, preprocess=None):
        layer_names = tuple(layer_names)
        if not layer_names:
            raise ValueError("layer_names must not be empty")
        outputs = [model.get_layer(name).output for name in layer_names]
        self._model = tf.keras.Model(model.inputs, outputs)
        self._layer_names = layer_names
        self._preprocess = preprocess

    @property
    def layer_names(self):
        return self._layer_names

    def features(self, image, layer):
        self.check_layer(layer)
        batch = tf.cast(image[None], self._model.dtype or tf.float32)
        if self._preprocess is not None:
            batch = self._preprocess(batch)
        outputs = self._model(batch)
        if len(self._layer_names) == 1:
            outputs = [outputs]
        output = outputs[self._layer_names.index(layer)]
        return tf.cast(output[0], tf.float64)


def vgg19_extractor(layer_names=("block3_conv3",), weights="imagenet"):
    """VGG19 convolutional features of sRGB `UNIT` images.

    Args:
      layer_names: VGG19 layer names, e.g. `block3_conv3`.
      weights: `"imagenet"` or None for random initialization.

    Returns:
      A `KerasFeatureExtractor`.
    """
    model = tf.keras.applications.VGG19(include_top=False, weights=weights)

    def preprocess(batch):
        return tf.keras.applications.vgg19.preprocess_input(batch * 255.)

    return KerasFeatureExtractor(model, layer_names, preprocess=preprocess)


def perceptual_loss(extractor, layer, pred, gt, name=None):
    """Normalized L1 distance between feature volumes.

    Computes `sum(|phi(gt) - phi(pred)|) / (c * h * w)` for the feature
    volume `phi` of `layer`, which is the mean absolute feature difference.

    Args:
      extractor: a `FeatureExtractor`.
      layer: one of `extractor.layer_names`.
      pred: prediction, an `ImageF` or float HWC tensor.
      gt: target of the same shape.
      name: A name for this operation (optional).

    Returns:
      A float64 scalar `Tensor`.

    Raises:
      ValueError: if `layer` is unknown or the shapes differ.
    """
    extractor.check_layer(layer)
    with tf.name_scope(name or "perceptual_loss"):
        pred, gt = pixel.check_pair(pred, gt)
        pred_features = extractor.features(pred, layer)
        gt_features = extractor.features(gt, layer)
        return tf.reduce_mean(tf.abs(gt_features - pred_features))
