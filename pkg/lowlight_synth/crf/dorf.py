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
"""Response curve databases and the DoRF text format."""
from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import numpy as np
import tensorflow as tf

from lowlight_synth.crf.response_curve import NUM_SAMPLES
from lowlight_synth.crf.response_curve import ResponseCurve
from lowlight_synth.crf.response_curve import gamma_curve

SYNTHETIC_SOURCE = "synthetic"
DEFAULT_GAMMA_EXPONENTS = (1.0, 1.4, 1.8, 2.2, 2.6, 3.0)

# Brightness decreases at or below this size are repaired without a report.
REPAIR_TOLERANCE = 1e-12

_IRRADIANCE_TAG = "I ="
_BRIGHTNESS_TAG = "B ="


class DorfParseError(ValueError):
    """Raised when a DoRF stream holds a malformed record.

    Attributes:
      record_index: zero-based index of the offending record, or None when
        the stream as a whole is invalid.
    """

    def __init__(self, message, record_index=None):
        if record_index is not None:
            message = "record {}: {}".format(record_index, message)
        super(DorfParseError, self).__init__(message)
        self.record_index = record_index


class CrfDatabase(object):
    """An immutable, ordered collection of response curves.

    Args:
      curves: non-empty iterable of `ResponseCurve` with unique ids.
      source: provenance string, a file path or `"synthetic"`.
      repaired: `(curve_id, max_violation)` pairs for curves whose
        brightness was projected to nondecreasing at load time.
    """

    def __init__(self, curves, source, repaired=()):
        curves = tuple(curves)
        if not curves:
            raise ValueError("A CrfDatabase needs at least one curve")
        ids = [curve.id for curve in curves]
        if len(set(ids)) != len(ids):
            raise ValueError("Curve ids must be unique, got {}".format(ids))
        self._curves = curves
        self._index = {curve.id: curve for curve in curves}
        self._source = source
        self._repaired = tuple(repaired)

    @property
    def curves(self):
        return self._curves

    @property
    def source(self):
        return self._source

    @property
    def repaired(self):
        return self._repaired

    @property
    def ids(self):
        return tuple(curve.id for curve in self._curves)

    def get(self, curve_id):
        try:
            return self._index[curve_id]
        except KeyError:
            raise ValueError("Unknown curve id {!r} in database {!r}".format(
                curve_id, self._source))

    def __len__(self):
        return len(self._curves)

    def __iter__(self):
        return iter(self._curves)

    def __getitem__(self, index):
        return self._curves[index]

    def __repr__(self):
        return "CrfDatabase(source={!r}, size={})".format(
            self._source, len(self._curves))


def synthetic_database(exponents=DEFAULT_GAMMA_EXPONENTS):
    """Gamma-family database used when no DoRF file is configured."""
    return CrfDatabase([gamma_curve(gc) for gc in exponents],
                       SYNTHETIC_SOURCE)


def sample_curve(db, rng):
    """Draws one curve uniformly from `db`.

    Args:
      db: a `CrfDatabase`.
      rng: a `tf.random.Generator`; one draw advances its state.

    Returns:
      A `ResponseCurve`.
    """
    if not len(db):
        raise ValueError("Cannot sample from an empty database")
    index = rng.uniform([], 0, len(db), dtype=tf.int64)
    return db[int(index)]


def _parse_floats(tokens, record_index, tag):
    try:
        return [float(token) for token in tokens]
    except ValueError as e:
        raise DorfParseError(
            "unparseable float in {!r} samples: {}".format(tag, e),
            record_index)


def _is_numeric(token):
    try:
        float(token)
    except ValueError:
        return False
    return True


class _Record(object):
    __slots__ = ("name", "info", "irradiance", "brightness")

    def __init__(self, name):
        self.name = name
        self.info = None
        self.irradiance = None
        self.brightness = None


def _build_curve(record, record_index, repaired):
    if record.irradiance is None or record.brightness is None:
        raise DorfParseError(
            "curve {!r} is missing its {!r} or {!r} block".format(
                record.name, _IRRADIANCE_TAG, _BRIGHTNESS_TAG), record_index)
    for tag, samples in ((_IRRADIANCE_TAG, record.irradiance),
                         (_BRIGHTNESS_TAG, record.brightness)):
        if len(samples) != NUM_SAMPLES:
            raise DorfParseError(
                "curve {!r} has {} {!r} samples, expected {}".format(
                    record.name, len(samples), tag, NUM_SAMPLES),
                record_index)

    brightness = np.asarray(record.brightness, np.float64)
    projected = np.maximum.accumulate(brightness)
    violation = float(np.max(projected - brightness))
    if violation > REPAIR_TOLERANCE:
        tf.get_logger().warning(
            "DoRF record %d (%s): brightness decreases by up to %g; "
            "projected to its running maximum.", record_index, record.name,
            violation)
        repaired.append((record.name, violation))

    try:
        return ResponseCurve(record.name, record.irradiance, projected)
    except ValueError as e:
        raise DorfParseError(str(e), record_index)


def _lines(reader):
    for line in reader:
        if isinstance(line, bytes):
            line = line.decode("utf-8")
        line = line.strip()
        if line:
            yield line


def load_dorf(reader, source=None):
    """Parses a DoRF-style stream of response curves.

    Every record is four blocks: a name line, an auxiliary info line, a line
    starting with `I =` followed by `NUM_SAMPLES` irradiance values and a
    line starting with `B =` followed by `NUM_SAMPLES` brightness values.
    Values may continue over several lines. Brightness that decreases is
    replaced by its running maximum and reported in
    `CrfDatabase.repaired`. Duplicate names get a `#<record index>` suffix.

    Args:
      reader: iterable of text or byte lines, such as an open file.
      source: provenance string for the database. Defaults to the reader's
        `name` attribute.

    Returns:
      A `CrfDatabase`.

    Raises:
      DorfParseError: if a record is malformed or the stream holds no
        records.
    """
    if source is None:
        source = getattr(reader, "name", "<stream>")

    records = []
    record = None
    state = "name"
    for line in _lines(reader):
        index = len(records) - 1
        if state == "values_b" and not _is_numeric(line.split()[0]):
            state = "name"
        if state == "name":
            record = _Record(line)
            records.append(record)
            state = "info"
        elif state == "info":
            record.info = line
            state = "header_i"
        elif state == "header_i":
            if not line.startswith(_IRRADIANCE_TAG):
                raise DorfParseError(
                    "expected a line starting with {!r}, got {!r}".format(
                        _IRRADIANCE_TAG, line[:40]), index)
            record.irradiance = _parse_floats(
                line[len(_IRRADIANCE_TAG):].split(), index, _IRRADIANCE_TAG)
            state = "values_i"
        elif state == "values_i":
            if line.startswith(_BRIGHTNESS_TAG):
                record.brightness = _parse_floats(
                    line[len(_BRIGHTNESS_TAG):].split(), index,
                    _BRIGHTNESS_TAG)
                state = "values_b"
            else:
                record.irradiance.extend(
                    _parse_floats(line.split(), index, _IRRADIANCE_TAG))
        else:
            record.brightness.extend(
                _parse_floats(line.split(), index, _BRIGHTNESS_TAG))
        if state == "values_b" and len(record.brightness) >= NUM_SAMPLES:
            # A full brightness block ends the record even if the next name
            # starts with a number.
            state = "name"

    if not records:
        raise DorfParseError("{} contains no curve records".format(source))

    curves = []
    repaired = []
    seen = set()
    for index, record in enumerate(records):
        if record.name in seen:
            unique = "{}#{}".format(record.name, index)
            tf.get_logger().warning(
                "DoRF record %d: duplicate curve name %r renamed to %r.",
                index, record.name, unique)
            record.name = unique
        seen.add(record.name)
        curves.append(_build_curve(record, index, repaired))
    return CrfDatabase(curves, source, repaired)


def load_dorf_file(path):
    """Loads a DoRF-style text file through `tf.io.gfile`."""
    with tf.io.gfile.GFile(path, "r") as f:
        return load_dorf(f, source=path)
