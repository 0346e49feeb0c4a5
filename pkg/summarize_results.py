"""Prints pivot tables of aggregated sweep means, one per figure and panel."""

import os

from absl import app
from absl import flags
from absl import logging
import pandas as pd

from netcompare.utils import plot_series
from netcompare.utils import records as records_lib

FLAGS = flags.FLAGS
flags.DEFINE_string("results_dir", "./results/",
                    "Sweep output directory containing aggregates.csv.")
flags.DEFINE_string("figures", ",".join(plot_series.FIGURES),
                    "Comma-separated list of figures to summarize.")

# Manifest entries echoed above the tables.
MANIFEST_KEYS = ("samples", "base_seed", "record_count", "created_at")


def pivot(series: list[plot_series.PlotSeries], panel: int) -> pd.DataFrame:
  """Rows are x values, columns series keys in legend order."""
  columns = {
      line.series_key: pd.Series(dict(line.points))
      for line in series
      if line.panel == panel
  }
  df = pd.DataFrame(columns)
  df.index.name = "x"
  return df.sort_index()


def describe_sweep(manifest: dict[str, str]) -> str:
  return " ".join(
      f"{key}={manifest[key]}" for key in MANIFEST_KEYS if key in manifest)


def main(_):
  manifest_path = os.path.join(FLAGS.results_dir, "manifest.txt")
  if os.path.exists(manifest_path):
    manifest = records_lib.read_manifest(manifest_path)
    print(f"== sweep {describe_sweep(manifest)}")
  path = os.path.join(FLAGS.results_dir, "aggregates.csv")
  aggregates = records_lib.read_aggregates(path)
  if not aggregates:
    logging.warning("No aggregates found in %s", path)
    return
  for figure_id in [f for f in FLAGS.figures.split(",") if f]:
    series = plot_series.emit_plot_series(aggregates, figure_id)
    for panel in sorted({line.panel for line in series}):
      print(f"== {figure_id}, S={panel} ==")
      print(pivot(series, panel).to_string())
      print()


if __name__ == "__main__":
  app.run(main)
