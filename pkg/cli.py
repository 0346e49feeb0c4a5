"""Command line entry point.

Examples:
  python cli.py generate --model scale-free --n 1000 --s 2 --alpha 2.5 --seed 7
  python cli.py sweep --config configs/desk.cfg --out out --workers 8
  python cli.py verify-edges --config configs/desk.cfg
  python cli.py plot-data --records out/records.csv --figure asp --out out/asp
"""

import os
import sys

from absl import app
from absl import flags
from absl import logging
import pandas as pd

from netcompare import errors
from netcompare import rng as rng_lib
from netcompare.experiments import config as sweep_config
from netcompare.experiments import run_sweep
from netcompare.generators import builder
from netcompare.generators.config import Model
from netcompare.generators.config import ModelSpec
from netcompare.utils import loggers
from netcompare.utils import plot_series
from netcompare.utils import records as records_lib

FLAGS = flags.FLAGS

flags.DEFINE_enum("model", None, [m.cli_name for m in Model],
                  "Model to generate (generate).")
flags.DEFINE_integer("n", None, "Number of vertices (generate).")
flags.DEFINE_integer(
    "s", None, "Edges per growth step, also the lattice radius (generate).")
flags.DEFINE_float("alpha", None, "Attachment power for scale-free graphs.")
flags.DEFINE_float("p", None, "Rewiring probability for small-world graphs.")
flags.DEFINE_integer("seed", 0, "64-bit random seed (generate).")
flags.DEFINE_string("out", None,
                    "Output file (generate) or directory (sweep, plot-data).")
flags.DEFINE_string("config", None, "Sweep config file (sweep, verify-edges).")
flags.DEFINE_integer("workers", 1, "Worker processes used by sweep.")
flags.DEFINE_bool("use_wandb", False,
                  "Mirror sweep progress rows to a wandb run.")
flags.DEFINE_string("wandb_entity", None,
                    "wandb user or team that owns the sweep run.")
flags.DEFINE_string("wandb_project", "netcompare",
                    "wandb project that collects sweep runs.")
flags.DEFINE_float("log_every", 5.0, "Seconds between sweep progress rows.")
flags.DEFINE_string("records", None, "records.csv of a sweep (plot-data).")
flags.DEFINE_enum("figure", None, list(plot_series.FIGURES),
                  "Figure to emit series for (plot-data).")

# Exit codes.
OK = 0
FAILED = 1
USAGE = 2


def _require(*names: str):
  missing = [f"--{name}" for name in names if FLAGS[name].value is None]
  if missing:
    raise app.UsageError(f"missing required flags: {', '.join(missing)}",
                         exitcode=USAGE)


def _spec_from_flags() -> ModelSpec:
  _require("model", "n", "s")
  model = Model.parse(FLAGS.model)
  if model is Model.SCALE_FREE:
    _require("alpha")
    return ModelSpec.scale_free(FLAGS.n, FLAGS.s, FLAGS.alpha)
  if model is Model.SMALL_WORLD:
    _require("p")
    return ModelSpec.small_world(FLAGS.n, FLAGS.s, FLAGS.p)
  return ModelSpec.random(FLAGS.n, FLAGS.s)


def generate() -> int:
  spec = _spec_from_flags()
  graph = builder.build_graph(spec, rng_lib.derive_stream(FLAGS.seed))
  logging.info("Generated %s with seed %d: %r", spec, FLAGS.seed, graph)
  if FLAGS.out:
    records_lib.write_edge_list(graph, FLAGS.out)
  else:
    sys.stdout.writelines(
        f"{line}\n" for line in records_lib.edge_list_lines(graph))
  return OK


def sweep() -> int:
  _require("config", "out")
  config = sweep_config.load_sweep_config(FLAGS.config)
  wandb_config = {
      "project": FLAGS.wandb_project,
      "entity": FLAGS.wandb_entity,
      "name": os.path.basename(os.path.normpath(FLAGS.out)),
      "config": config.to_items(),
  }
  logger = loggers.make_default_logger("sweep",
                                       use_wandb=FLAGS.use_wandb,
                                       wandb_config=wandb_config,
                                       time_delta=FLAGS.log_every)
  try:
    result = run_sweep.execute_sweep(config,
                                     workers=FLAGS.workers,
                                     logger=logger)
  finally:
    logger.close()

  os.makedirs(FLAGS.out, exist_ok=True)
  records_lib.write_records(result, os.path.join(FLAGS.out, "records.csv"))
  records_lib.write_aggregates(result.aggregates,
                               os.path.join(FLAGS.out, "aggregates.csv"))
  records_lib.write_manifest(result.manifest,
                             os.path.join(FLAGS.out, "manifest.txt"))
  logging.info("Wrote %d records to %s", len(result.records), FLAGS.out)
  return OK


def verify_edges() -> int:
  _require("config")
  config = sweep_config.load_sweep_config(FLAGS.config)
  mismatches = run_sweep.verify_edge_identity(config)
  if not mismatches:
    logging.info("Every (n, S) group shares its vertex and edge count.")
    return OK
  rows = [
      {
          "n": mismatch.n,
          "S": mismatch.s,
          "expected_m": mismatch.expected_m,
          "series": key,
          "observed (n, m)": observed,
      }
      for mismatch in mismatches
      for key, observed in mismatch.counts.items()
  ]
  print(pd.DataFrame(rows).to_string(index=False))
  return FAILED


def plot_data() -> int:
  _require("records", "figure", "out")
  result = plot_series.aggregates_from_records(
      records_lib.read_records(FLAGS.records))
  series = plot_series.emit_plot_series(result, FLAGS.figure)
  paths = plot_series.write_plot_series(series, FLAGS.out)
  logging.info("Wrote %d series to %s", len(paths), FLAGS.out)
  return OK


COMMANDS = {
    "generate": generate,
    "sweep": sweep,
    "verify-edges": verify_edges,
    "plot-data": plot_data,
}


def parse_flags(argv: list[str]) -> list[str]:
  """Parses flags, exiting with the usage code on bad flags."""
  try:
    return FLAGS(argv)
  except flags.Error as e:
    sys.stderr.write(f"FATAL Flags parsing error: {e}\n")
    sys.stderr.write("Pass --helpshort or --helpfull to see help on flags.\n")
    sys.exit(USAGE)


def main(argv: list[str]) -> int:
  commands = argv[1:]
  if len(commands) != 1 or commands[0] not in COMMANDS:
    raise app.UsageError(
        f"expected one command out of {', '.join(COMMANDS)}, got {commands}",
        exitcode=USAGE)
  try:
    return COMMANDS[commands[0]]()
  except (errors.ParameterError, errors.SchemaVersionError,
          errors.RecordParseError, errors.SelectionError) as e:
    logging.error("%s", e)
    return USAGE
  except errors.SampleError as e:
    logging.error("%s", e)
    return FAILED


if __name__ == "__main__":
  app.run(main, flags_parser=parse_flags)
