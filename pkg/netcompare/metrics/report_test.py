"""Tests for per-graph metric records."""

from absl.testing import absltest
from absl.testing import parameterized

from netcompare import graph as graph_lib
from netcompare.generators.config import Model
from netcompare.generators.config import ModelSpec
from netcompare.metrics import report


class MetricReportTest(parameterized.TestCase):

  def test_triangle(self):
    spec = ModelSpec(Model.RANDOM, 3, 3)
    record = report.metric_report(graph_lib.complete_graph(3), spec, 5, 0)
    self.assertEqual((record.n, record.m, record.seed), (3, 3, 5))
    self.assertAlmostEqual(record.mean_closeness, 0.5)
    self.assertAlmostEqual(record.mean_betweenness, 0.0)
    self.assertAlmostEqual(record.avg_shortest_path, 1.0)
    self.assertAlmostEqual(record.global_clustering, 1.0)

  def test_path(self):
    spec = ModelSpec(Model.RANDOM, 3, 2)
    g = graph_lib.Graph.from_edges(3, [(0, 1), (1, 2)])
    record = report.metric_report(g, spec, 0, 1)
    self.assertEqual(record.sample_index, 1)
    for name, expected in (("mean_closeness", 7 / 18),
                           ("mean_betweenness", 1 / 3),
                           ("avg_shortest_path", 4 / 3),
                           ("global_clustering", 0.0)):
      self.assertAlmostEqual(record.metrics()[name], expected, delta=1e-9)

  def test_empty_graph(self):
    spec = ModelSpec(Model.RANDOM, 5, 0)
    record = report.metric_report(graph_lib.new_graph(5), spec, 0, 0)
    self.assertEqual(list(record.metrics().values()), [0.0] * 4)


if __name__ == "__main__":
  absltest.main()
