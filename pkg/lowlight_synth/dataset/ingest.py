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
"""Corpus scanning, decoding and crop preparation."""
from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import os

import tensorflow as tf

from lowlight_synth.image import image_f
from lowlight_synth.image.image_f import ImageF

IMAGE_EXTENSIONS = (".png", ".jpg", ".jpeg", ".bmp", ".gif")


def read_image(path):
    """Decodes an image file into a 3-channel sRGB `UNIT` `ImageF`.

    Raises:
      tf.errors.InvalidArgumentError: if the file is not a decodable image.
      tf.errors.NotFoundError: if the file does not exist.
    """
    contents = tf.io.read_file(path)
    pixels = tf.io.decode_image(
        contents, channels=3, dtype=tf.uint8, expand_animations=False)
    return ImageF.from_uint8(pixels)


def write_png(path, image):
    """Writes a `UNIT` image as an 8-bit PNG, rounding to nearest."""
    tf.io.write_file(path, tf.io.encode_png(image.to_uint8()))


def _is_decodable(path):
    try:
        read_image(path)
    except tf.errors.InvalidArgumentError:
        return False
    return True


def ingest(directory, limit=None):
    """Lists the decodable images of `directory` in lexicographic order.

    Files without an image extension and files that fail to decode are
    skipped; the skip count is logged. Subdirectories are ignored.

    Args:
      directory: corpus directory.
      limit: optional maximum number of images to return.

    Returns:
      A list of image paths.

    Raises:
      ValueError: if `directory` is missing or holds no decodable image, or
        `limit` is not positive.
    """
    if limit is not None and limit < 1:
        raise ValueError("limit must be positive, got {}".format(limit))
    if not tf.io.gfile.isdir(directory):
        raise ValueError("Corpus directory {} does not exist".format(
            directory))

    paths = []
    skipped = 0
    for name in sorted(tf.io.gfile.listdir(directory)):
        if limit is not None and len(paths) >= limit:
            break
        path = os.path.join(directory, name)
        if tf.io.gfile.isdir(path):
            continue
        if (os.path.splitext(name)[1].lower() not in IMAGE_EXTENSIONS
                or not _is_decodable(path)):
            skipped += 1
            continue
        paths.append(path)

    if skipped:
        tf.get_logger().warning("Skipped %d non-image or undecodable files "
                                "in %s.", skipped, directory)
    if not paths:
        raise ValueError(
            "No decodable images found in {}".format(directory))
    return paths


def prepare(image, size, name=None):
    """Resizes the shorter side to `size` and center crops to a square.

    Resizing is bilinear with half-pixel centers and upscales images
    smaller than `size`. An image whose shorter side already equals `size`
    is only cropped. On odd margins the crop keeps the extra pixel on the
    far side.

    Args:
      image: an sRGB `UNIT` `ImageF`.
      size: output side in pixels.
      name: A name for this operation (optional).

    Returns:
      A `[size, size, channels]` sRGB `UNIT` `ImageF`.
    """
    image_f.check_tags(
        image,
        colorspaces=(image_f.SRGB,),
        value_ranges=(image_f.UNIT,),
        op_name="prepare")
    if size < 1:
        raise ValueError("size must be positive, got {}".format(size))
    with tf.name_scope(name or "prepare"):
        height, width = image.height, image.width
        scale = size / min(height, width)
        new_height = max(size, int(round(height * scale)))
        new_width = max(size, int(round(width * scale)))

        data = image.data
        if (new_height, new_width) != (height, width):
            data = tf.image.resize(
                data, [new_height, new_width], method="bilinear")
            data = image_f.clip_unit(tf.cast(data, tf.float64))

        top = (new_height - size) // 2
        left = (new_width - size) // 2
        data = data[top:top + size, left:left + size, :]
        return image.with_data(data)
