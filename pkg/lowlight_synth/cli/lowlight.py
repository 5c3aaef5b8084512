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
"""Command-line interface for low-light dataset synthesis and evaluation.

Usage:
  lowlight-synth gen --input=DIR --output=DIR --seed=N [--config=FILE]
      [--ablation=TAG] [--limit=N] [--workers=N] [--size=N] [--dorf=FILE]
  lowlight-synth eval (--pred=DIR --gt=DIR | --manifest=FILE) --report=FILE
      [--table=FILE] [--workers=N]
  lowlight-synth crf --dorf=FILE [--roundtrip]
  lowlight-synth verify --manifest=FILE [--dorf=FILE]
  lowlight-synth scale --input=DIR --manifest=FILE --output=DIR

Exit status is 0 on success, 1 on usage errors, 2 on data errors and 3 on
I/O errors. Summaries are printed to standard output; logs and progress go
to standard error.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import enum
import os
import sys
import time

from absl import app
from absl import flags
from absl import logging
import tensorflow as tf
from tqdm.auto import tqdm

from lowlight_synth.crf import dorf
from lowlight_synth.crf import response_curve
from lowlight_synth.dataset import generate as generate_lib
from lowlight_synth.dataset import ingest as ingest_lib
from lowlight_synth.dataset import manifest as manifest_lib
from lowlight_synth.degrade import config as config_lib
from lowlight_synth.degrade.low_light import DegenerateImageError
from lowlight_synth.metrics import evaluate as evaluate_lib
from lowlight_synth.metrics import nonref

FLAGS = flags.FLAGS

flags.DEFINE_string("input", None, "Corpus or dark image directory.")
flags.DEFINE_string("output", None, "Output directory.")
flags.DEFINE_integer("seed", None, "Global seed; overrides the config file.",
                     lower_bound=0)
flags.DEFINE_string("config", None, "YAML pipeline config file.")
flags.DEFINE_enum("ablation", None, list(config_lib.ABLATIONS),
                  "Ablation applied on top of the config.")
flags.DEFINE_integer("limit", None, "Maximum number of source images.",
                     lower_bound=1)
flags.DEFINE_integer("workers", 1, "Number of worker threads.", lower_bound=1)
flags.DEFINE_integer("size", None, "Square output size; overrides the config.",
                     lower_bound=1)
flags.DEFINE_string("dorf", None, "DoRF-format response curve file.")
flags.DEFINE_string("pred", None, "Directory of predicted images.")
flags.DEFINE_string("gt", None, "Directory of reference images.")
flags.DEFINE_string("manifest", None, "Dataset manifest file.")
flags.DEFINE_string("report", None, "Where to write the YAML metric report.")
flags.DEFINE_string("table", None, "Optional CSV table of per-pair scores.")
flags.DEFINE_bool("roundtrip", False,
                  "Print the apply/invert round-trip error of every curve.")
flags.DEFINE_bool("progress", True, "Show progress bars on standard error.")

SCALES_FILENAME = "scales.yaml"


class ExitStatus(enum.IntEnum):
    SUCCESS = 0
    USAGE = 1
    DATA = 2
    IO = 3


def _require(*names):
    missing = [name for name in names if FLAGS[name].value is None]
    if missing:
        raise app.UsageError("Missing required flag(s): {}".format(", ".join(
            "--" + name for name in missing)))


def _pipeline_config():
    """Config file (or defaults) with the command-line overrides applied."""
    if FLAGS.config:
        config, seed = config_lib.load_config(FLAGS.config)
    else:
        config, seed = config_lib.PipelineConfig(), None
    if FLAGS.ablation:
        config = config_lib.apply_ablation(config, FLAGS.ablation)
    overrides = {}
    if FLAGS.size is not None:
        overrides["size"] = FLAGS.size
    if FLAGS.dorf:
        overrides["crf_file"] = FLAGS.dorf
    if overrides:
        config = config.replace(**overrides)
    if FLAGS.seed is not None:
        seed = FLAGS.seed
    return config, seed


def cmd_gen():
    _require("input", "output")
    config, seed = _pipeline_config()
    if seed is None:
        raise app.UsageError("gen needs --seed or a seed in the config file")
    start = time.perf_counter()
    manifest = generate_lib.generate(
        FLAGS.input,
        FLAGS.output,
        config,
        seed,
        workers=FLAGS.workers,
        limit=FLAGS.limit,
        progress=FLAGS.progress)
    elapsed = time.perf_counter() - start
    count = len(manifest.records)
    print("pairs written: {}".format(count))
    print("skipped: {}".format(len(manifest.skipped)))
    print("corpus mean intensity: {:.6f}".format(
        manifest.corpus_mean_intensity))
    print("wall time: {:.2f}s ({:.2f} pairs/s)".format(
        elapsed, count / elapsed if elapsed > 0 else float("inf")))
    return ExitStatus.SUCCESS


def cmd_eval():
    _require("report")
    if FLAGS.manifest is not None:
        if FLAGS.pred is not None or FLAGS.gt is not None:
            raise app.UsageError("--manifest excludes --pred and --gt")
        report = evaluate_lib.evaluate(
            manifest=FLAGS.manifest,
            workers=FLAGS.workers,
            progress=FLAGS.progress)
    else:
        _require("pred", "gt")
        report = evaluate_lib.evaluate(
            pred_dir=FLAGS.pred,
            gt_dir=FLAGS.gt,
            workers=FLAGS.workers,
            progress=FLAGS.progress)
    evaluate_lib.write_report(report, FLAGS.report)
    if FLAGS.table:
        evaluate_lib.write_table(report, FLAGS.table)
    print("pairs: {}".format(len(report.per_image)))
    print("mean psnr: {:.4f}".format(report.mean_psnr))
    print("mean ssim: {:.6f}".format(report.mean_ssim))
    return ExitStatus.SUCCESS


def cmd_crf():
    _require("dorf")
    db = dorf.load_dorf_file(FLAGS.dorf)
    for curve in db:
        if FLAGS.roundtrip:
            print("{}\t{:.3e}".format(curve.id,
                                      response_curve.roundtrip_error(curve)))
        else:
            print(curve.id)
    if db.repaired:
        print("repaired: {}".format(len(db.repaired)))
    return ExitStatus.SUCCESS


def cmd_verify():
    _require("manifest")
    db = dorf.load_dorf_file(FLAGS.dorf) if FLAGS.dorf else None
    report = generate_lib.verify_manifest(
        FLAGS.manifest, db=db, progress=FLAGS.progress)
    print("pairs replayed: {}".format(report.replayed))
    print("corpus mean intensity: stored {:.17g}, recomputed {:.17g}".format(
        report.stored_mean, report.recomputed_mean))
    print("max dark level difference: {}".format(report.max_level_difference))
    if not report.ok:
        logging.error("Manifest %s does not match the stored images.",
                      FLAGS.manifest)
        return ExitStatus.DATA
    return ExitStatus.SUCCESS


def cmd_scale():
    _require("input", "manifest", "output")
    corpus_mean = manifest_lib.read_manifest(
        FLAGS.manifest).corpus_mean_intensity
    paths = ingest_lib.ingest(FLAGS.input, FLAGS.limit)
    tf.io.gfile.makedirs(FLAGS.output)
    scales = []
    skipped = []
    for path in tqdm(paths, desc="scale", unit="img",
                     disable=not FLAGS.progress):
        image = ingest_lib.read_image(path)
        try:
            k = nonref.estimate_k_nonref(corpus_mean, image)
        except DegenerateImageError as e:
            logging.warning("Skipping %s: %s", path, e)
            skipped.append(path)
            continue
        name = os.path.splitext(os.path.basename(path))[0] + ".png"
        ingest_lib.write_png(
            os.path.join(FLAGS.output, name), nonref.apply_scale(image, k))
        scales.append({"source": path, "output": name, "k": k})
    manifest_lib.write_yaml_atomic({
        "corpus_mean_intensity": corpus_mean,
        "images": scales,
        "skipped": skipped,
    }, os.path.join(FLAGS.output, SCALES_FILENAME))
    print("scaled: {}".format(len(scales)))
    print("skipped: {}".format(len(skipped)))
    return ExitStatus.SUCCESS


_COMMANDS = {
    "gen": cmd_gen,
    "eval": cmd_eval,
    "crf": cmd_crf,
    "verify": cmd_verify,
    "scale": cmd_scale,
}


def _dispatch(argv):
    if len(argv) != 2 or argv[1] not in _COMMANDS:
        raise app.UsageError("Expected one command out of {}, got {}".format(
            ", ".join(sorted(_COMMANDS)), argv[1:]))
    return _COMMANDS[argv[1]]()


def main(argv):
    tf.config.experimental.enable_op_determinism()
    try:
        return int(_dispatch(argv))
    except app.UsageError as e:
        logging.error("%s", e)
        return int(ExitStatus.USAGE)
    except tf.errors.NotFoundError as e:
        logging.error("%s", e.message)
        return int(ExitStatus.IO)
    except tf.errors.OpError as e:
        # Decode failures surface as InvalidArgumentError.
        logging.error("%s", e.message)
        if isinstance(e, tf.errors.InvalidArgumentError):
            return int(ExitStatus.DATA)
        return int(ExitStatus.IO)
    except ValueError as e:
        logging.error("%s", e)
        return int(ExitStatus.DATA)
    except (IOError, OSError) as e:
        logging.error("%s", e)
        return int(ExitStatus.IO)


_HELP_FLAGS = frozenset(["-h", "--help", "-?", "--helpshort", "--helpfull"])


def _usage():
    """Returns the usage text followed by the help of every command flag."""
    if __name__ in FLAGS.flags_by_module_dict():
        flag_help = FLAGS.module_help(__name__)
    else:
        flag_help = FLAGS.get_help()
    return "{}\n{}".format(__doc__, flag_help)


def run(argv=None):
    if argv is None:
        argv = sys.argv
    # absl exits with status 1 on --help, which reads as a usage error.
    if _HELP_FLAGS.intersection(argv[1:]):
        print(_usage())
        sys.exit(int(ExitStatus.SUCCESS))
    app.run(main, argv=argv)


if __name__ == "__main__":
    run()
