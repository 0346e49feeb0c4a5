"""Tests for figure series."""

import dataclasses
import os

from absl.testing import absltest
from absl.testing import parameterized
import pandas as pd

from netcompare import errors
from netcompare.experiments import config as sweep_config
from netcompare.experiments import run_sweep
from netcompare.generators.config import Model
from netcompare.generators.config import ModelSpec
from netcompare.utils import plot_series

_CONFIG = sweep_config.SweepConfig(n_values=[30, 20, 40],
                                   s_values=[2, 3],
                                   alpha_values=[10.0, 2.5],
                                   p_values=[0.3],
                                   samples=2,
                                   base_seed=4)


class PlotSeriesTest(parameterized.TestCase):

  @classmethod
  def setUpClass(cls):
    super().setUpClass()
    cls.result = run_sweep.execute_sweep(_CONFIG)

  def test_one_series_per_panel_and_parameter(self):
    series = plot_series.emit_plot_series(self.result, "closeness")
    self.assertLen(series, 2 * 4)
    self.assertEqual([(s.panel, s.series_key) for s in series[:4]], [
        (2, "random"),
        (2, "scale_free alpha=2.5"),
        (2, "scale_free alpha=10"),
        (2, "small_world p=0.3"),
    ])

  @parameterized.parameters(*plot_series.FIGURES)
  def test_points_sorted_by_x(self, figure_id):
    for line in plot_series.emit_plot_series(self.result, figure_id):
      xs = [x for x, _ in line.points]
      self.assertEqual(xs, sorted(xs))
      self.assertLen(line.points, 3)

  def test_metric_figure_uses_edges_as_x(self):
    series = plot_series.emit_plot_series(self.result, "asp", panels=[2])
    means = {(a.spec.series_key(), a.m): a.means["avg_shortest_path"]
             for a in self.result.aggregates
             if a.spec.s == 2}
    for line in series:
      for x, y in line.points:
        self.assertEqual(y, means[(line.series_key, x)])
    self.assertEqual([x for x, _ in series[0].points], [37, 57, 77])

  def test_edges_vertices_figure(self):
    series = plot_series.emit_plot_series(self.result, "edges_vertices",
                                          panels=[3])
    for line in series:
      self.assertEqual(line.points, ((20, 54), (30, 84), (40, 114)))

  def test_filters(self):
    series = plot_series.emit_plot_series(self.result, "clustering",
                                          models=[Model.SMALL_WORLD])
    self.assertEqual({s.series_key for s in series}, {"small_world p=0.3"})

  def test_empty_selection(self):
    with self.assertRaises(errors.SelectionError):
      plot_series.emit_plot_series(self.result, "closeness", panels=[16])

  def test_aggregate_without_panel(self):
    first = self.result.aggregates[0]
    unpanelled = dataclasses.replace(
        first, spec=ModelSpec(Model.RANDOM, first.spec.n, first.spec.m))
    with self.assertRaises(errors.SelectionError):
      plot_series.emit_plot_series([unpanelled] + self.result.aggregates[1:],
                                   "closeness")

  def test_unknown_figure(self):
    with self.assertRaises(errors.ParameterError):
      plot_series.emit_plot_series(self.result, "degree")

  def test_from_records(self):
    rebuilt = plot_series.aggregates_from_records(self.result.records)
    self.assertEqual(
        plot_series.emit_plot_series(rebuilt, "betweenness"),
        plot_series.emit_plot_series(self.result, "betweenness"))

  def test_write(self):
    out_dir = self.create_tempdir().full_path
    series = plot_series.emit_plot_series(self.result, "closeness")
    paths = plot_series.write_plot_series(series, out_dir)
    self.assertLen(paths, len(series))
    self.assertEqual(os.path.basename(paths[1]),
                     "closeness_S2_scale_free_alpha_2.5.csv")
    frame = pd.read_csv(paths[0])
    self.assertEqual(list(frame.columns), ["x", "y"])
    self.assertEqual(frame["x"].tolist(), [37, 57, 77])
    with open(os.path.join(out_dir, "manifest.txt"), encoding="utf-8") as f:
      manifest = f.read()
    self.assertIn("series_count=8", manifest)
    self.assertIn("series=small_world p=0.3", manifest)


if __name__ == "__main__":
  absltest.main()
