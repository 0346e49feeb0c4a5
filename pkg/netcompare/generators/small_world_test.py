"""Tests for lattices, deletion and rewiring."""

from absl.testing import absltest
from absl.testing import parameterized
import numpy as np

from netcompare import errors
from netcompare import graph as graph_lib
from netcompare import rng as rng_lib
from netcompare.generators import small_world


def _degree_sum_is_twice_edges(g: graph_lib.Graph) -> bool:
  return int(g.degrees().sum()) == 2 * g.edge_count()


class RingLatticeTest(parameterized.TestCase):

  @parameterized.parameters((20, 2), (100, 2), (33, 16))
  def test_regular(self, n, nei):
    g = small_world.generate_ring_lattice(n, nei)
    self.assertEqual(g.edge_count(), n * nei)
    np.testing.assert_array_equal(g.degrees(), np.full(n, 2 * nei))

  def test_neighbours(self):
    g = small_world.generate_ring_lattice(10, 2)
    self.assertEqual(g.neighbors(0), [1, 2, 8, 9])

  def test_too_small(self):
    with self.assertRaises(errors.ParameterError):
      small_world.generate_ring_lattice(4, 2)


class DeletionTest(parameterized.TestCase):

  def test_removes_exactly_x(self):
    lattice = small_world.generate_ring_lattice(100, 2)
    trimmed = small_world.delete_random_edges(lattice, 3,
                                              rng_lib.derive_stream(0))
    self.assertEqual(trimmed.edge_count(), 197)
    self.assertEqual(lattice.edge_count(), 200)
    self.assertContainsSubset(trimmed.edges(), lattice.edges())
    self.assertTrue(_degree_sum_is_twice_edges(trimmed))

  @parameterized.parameters(-1, 201)
  def test_bad_count(self, x):
    lattice = small_world.generate_ring_lattice(100, 2)
    with self.assertRaises(errors.ParameterError):
      small_world.delete_random_edges(lattice, x, rng_lib.derive_stream(0))


class RewireTest(parameterized.TestCase):

  @parameterized.parameters(0.0, 0.3, 0.7, 1.0)
  def test_preserves_edge_count(self, p):
    lattice = small_world.generate_ring_lattice(60, 3)
    for seed in range(5):
      rewired = small_world.rewire_edges(lattice, p,
                                         rng_lib.derive_stream(seed))
      self.assertEqual(rewired.edge_count(), lattice.edge_count())
      self.assertTrue(_degree_sum_is_twice_edges(rewired))

  def test_five_cycle_invariants(self):
    cycle = small_world.generate_ring_lattice(5, 1)
    outcomes = set()
    for seed in range(1000):
      rewired = small_world.rewire_edges(cycle, 0.5,
                                         rng_lib.derive_stream(seed))
      self.assertEqual(rewired.vertex_count(), 5)
      self.assertEqual(rewired.edge_count(), 5)
      self.assertTrue(_degree_sum_is_twice_edges(rewired))
      outcomes.add(tuple(rewired.edges()))
    self.assertGreater(len(outcomes), 1)

  def test_zero_probability_is_identity(self):
    lattice = small_world.generate_ring_lattice(30, 2)
    self.assertEqual(
        small_world.rewire_edges(lattice, 0.0, rng_lib.derive_stream(1)),
        lattice)

  def test_full_probability_moves_edges(self):
    lattice = small_world.generate_ring_lattice(200, 2)
    rewired = small_world.rewire_edges(lattice, 1.0, rng_lib.derive_stream(1))
    moved = set(lattice.edges()) - set(rewired.edges())
    self.assertGreater(len(moved), lattice.edge_count() // 2)

  def test_exhausted_candidates_keep_edge(self):
    complete = graph_lib.complete_graph(6)
    rewired = small_world.rewire_edges(complete, 1.0, rng_lib.derive_stream(0))
    self.assertEqual(rewired, complete)

  def test_bad_probability(self):
    with self.assertRaises(errors.ParameterError):
      small_world.rewire_edges(graph_lib.new_graph(3), 1.5,
                               rng_lib.derive_stream(0))


class SmallWorldTest(parameterized.TestCase):

  @parameterized.parameters(
      (100, 2, 0.3, 197),
      (1000, 16, 0.7, 15864),
      (200, 8, 0.5, 1564),
  )
  def test_matches_scale_free_edge_count(self, n, s, p, expected):
    g = small_world.generate_small_world(n, s, s, p, rng_lib.derive_stream(4))
    self.assertEqual(g.vertex_count(), n)
    self.assertEqual(g.edge_count(), expected)
    self.assertTrue(_degree_sum_is_twice_edges(g))

  def test_without_rewiring_is_a_trimmed_lattice(self):
    lattice = small_world.generate_ring_lattice(9, 2)
    for seed in range(50):
      g = small_world.generate_small_world(9, 2, 2, 0.0,
                                           rng_lib.derive_stream(seed))
      self.assertEqual(g.edge_count(), 15)
      self.assertContainsSubset(g.edges(), lattice.edges())
      self.assertLen(set(lattice.edges()) - set(g.edges()), 3)

  def test_nei_must_equal_s(self):
    with self.assertRaises(errors.ParameterError):
      small_world.generate_small_world(100, 4, 2, 0.3, rng_lib.derive_stream(0))

  def test_deterministic(self):
    a = small_world.generate_small_world(80, 2, 2, 0.5,
                                          rng_lib.derive_stream(9))
    b = small_world.generate_small_world(80, 2, 2, 0.5,
                                          rng_lib.derive_stream(9))
    self.assertEqual(a, b)


if __name__ == "__main__":
  absltest.main()
