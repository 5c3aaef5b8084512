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

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import tensorflow as tf


def _normalize_filter_shape(filter_shape):
    if isinstance(filter_shape, int):
        return (filter_shape, filter_shape)
    try:
        filter_shape = tuple(int(size) for size in filter_shape)
    except (TypeError, ValueError):
        raise TypeError("The `filter_shape` argument must be a tuple of 2 "
                        "integers. Received: {}".format(filter_shape))
    if len(filter_shape) != 2:
        raise ValueError("The `filter_shape` argument must be a tuple of 2 "
                         "integers. Received: {}".format(filter_shape))
    return filter_shape


def gaussian_kernel2d(filter_shape=(11, 11), sigma=1.5, dtype=tf.float64):
    """Normalized 2-D Gaussian window of shape `filter_shape`.

    Args:
      filter_shape: An `integer` or `tuple`/`list` of 2 integers, specifying
        the height and width of the window.
      sigma: standard deviation of the Gaussian, in pixels.
      dtype: dtype of the returned window.

    Returns:
      A `[height, width]` `Tensor` summing to one.
    """
    if sigma <= 0:
        raise ValueError("sigma must be positive, got {}".format(sigma))
    height, width = _normalize_filter_shape(filter_shape)

    def axis(size):
        coords = tf.range(size, dtype=dtype) - tf.cast(size - 1, dtype) / 2.
        return tf.exp(-tf.square(coords) / (2. * sigma**2))

    kernel = axis(height)[:, None] * axis(width)[None, :]
    return kernel / tf.reduce_sum(kernel)


def gaussian_filter2d(image, filter_shape=(11, 11), sigma=1.5, name=None):
    """Gaussian-weighted local means over every fully covered window.

    Each channel is filtered independently with a depthwise convolution and
    no padding, so the output only holds positions where the whole window
    lies inside the image.

    Args:
      image: A 3-D `Tensor` of shape `[height, width, channels]`.
      filter_shape: An `integer` or `tuple`/`list` of 2 integers, specifying
        the height and width of the window.
      sigma: standard deviation of the Gaussian, in pixels.
      name: A name for this operation (optional).

    Returns:
      A 3-D `Tensor` of shape
      `[height - filter_height + 1, width - filter_width + 1, channels]`.

    Raises:
      ValueError: If `image` is not 3-D or smaller than the window.
    """
    with tf.name_scope(name or "gaussian_filter2d"):
        image = tf.convert_to_tensor(image, name="image")
        if image.shape.ndims != 3:
            raise ValueError("`image` must be 3D tensor")
        filter_shape = _normalize_filter_shape(filter_shape)
        height, width, channels = image.shape.as_list()
        if height < filter_shape[0] or width < filter_shape[1]:
            raise ValueError(
                "`image` of size {}x{} is smaller than the {}x{} window".format(
                    height, width, filter_shape[0], filter_shape[1]))

        kernel = gaussian_kernel2d(filter_shape, sigma, dtype=image.dtype)
        # Filter of shape (filter_height, filter_width, in_channels, 1).
        kernel = tf.tile(kernel[:, :, None, None], [1, 1, channels, 1])

        output = tf.nn.depthwise_conv2d(
            image[None], kernel, strides=(1, 1, 1, 1), padding="VALID")
        return output[0]
