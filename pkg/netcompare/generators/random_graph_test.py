"""Tests for the G(n, m) generator."""

import collections
import itertools

from absl.testing import absltest
from absl.testing import parameterized
import numpy as np

from netcompare import errors
from netcompare import rng as rng_lib
from netcompare.generators import random_graph


class RandomGraphTest(parameterized.TestCase):

  def test_unrank_pairs_covers_every_pair_once(self):
    n = 60
    u, v = random_graph.unrank_pairs(np.arange(random_graph.max_edge_count(n)))
    pairs = list(zip(u.tolist(), v.tolist()))
    self.assertEqual(sorted(pairs),
                     list(itertools.combinations(range(n), 2)))

  @parameterized.parameters((100, 197), (10, 45), (10, 0), (1, 0), (0, 0))
  def test_counts(self, n, m):
    g = random_graph.generate_random_gnm(n, m, rng_lib.derive_stream(3))
    self.assertEqual(g.vertex_count(), n)
    self.assertEqual(g.edge_count(), m)

  @parameterized.parameters((10, 46), (5, -1), (-1, 0))
  def test_infeasible(self, n, m):
    with self.assertRaises(errors.ParameterError):
      random_graph.generate_random_gnm(n, m, rng_lib.derive_stream(0))

  def test_same_seed_same_graph(self):
    a = random_graph.generate_random_gnm(50, 120, rng_lib.derive_stream(11))
    b = random_graph.generate_random_gnm(50, 120, rng_lib.derive_stream(11))
    c = random_graph.generate_random_gnm(50, 120, rng_lib.derive_stream(12))
    self.assertEqual(a, b)
    self.assertNotEqual(a, c)

  def test_uniform_over_labelled_graphs(self):
    # C(6, 3) = 20 labelled graphs with 3 edges on 4 vertices.
    draws = 10_000
    counts = collections.Counter(
        tuple(
            random_graph.generate_random_gnm(
                4, 3, rng_lib.derive_stream(seed)).edges())
        for seed in range(draws))
    self.assertLen(counts, 20)
    for graph, count in counts.items():
      self.assertAlmostEqual(count / draws, 1 / 20, delta=0.02, msg=graph)


if __name__ == "__main__":
  absltest.main()
