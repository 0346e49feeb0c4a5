"""Tests for the sweep summary tables."""

import contextlib
import io
import os

from absl import flags
from absl.testing import absltest
from absl.testing import flagsaver

import summarize_results
from netcompare.experiments import config as sweep_config
from netcompare.experiments import run_sweep
from netcompare.utils import plot_series
from netcompare.utils import records as records_lib

FLAGS = flags.FLAGS


class SummarizeResultsTest(absltest.TestCase):

  def setUp(self):
    super().setUp()
    if not FLAGS.is_parsed():
      FLAGS.mark_as_parsed()
    config = sweep_config.SweepConfig(n_values=[20, 30],
                                      s_values=[2],
                                      alpha_values=[2.5],
                                      p_values=[0.3, 0.7],
                                      samples=1)
    self.result = run_sweep.execute_sweep(config)

  def test_pivot(self):
    series = plot_series.emit_plot_series(self.result, "asp")
    table = summarize_results.pivot(series, panel=2)
    self.assertEqual(list(table.index), [37, 57])
    self.assertEqual(list(table.columns), [
        "random", "scale_free alpha=2.5", "small_world p=0.3",
        "small_world p=0.7"
    ])

  def test_main_prints_tables(self):
    results_dir = self.create_tempdir().full_path
    records_lib.write_aggregates(self.result.aggregates,
                                 os.path.join(results_dir, "aggregates.csv"))
    with flagsaver.flagsaver(results_dir=results_dir, figures="closeness"):
      summarize_results.main([])

  def test_main_echoes_manifest(self):
    results_dir = self.create_tempdir().full_path
    records_lib.write_aggregates(self.result.aggregates,
                                 os.path.join(results_dir, "aggregates.csv"))
    records_lib.write_manifest(self.result.manifest,
                               os.path.join(results_dir, "manifest.txt"))
    out = io.StringIO()
    with flagsaver.flagsaver(results_dir=results_dir, figures="asp"):
      with contextlib.redirect_stdout(out):
        summarize_results.main([])
    first_line = out.getvalue().splitlines()[0]
    self.assertTrue(first_line.startswith("== sweep samples=1 base_seed=0 "))
    self.assertIn(f"record_count={len(self.result.records)}", first_line)

  def test_describe_sweep_skips_missing_keys(self):
    self.assertEqual(
        summarize_results.describe_sweep({"samples": "3", "other": "x"}),
        "samples=3")


if __name__ == "__main__":
  absltest.main()
