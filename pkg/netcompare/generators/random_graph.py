"""Uniform random graphs with a fixed edge count, G(n, m)."""

import numpy as np

from netcompare import errors
from netcompare import graph as graph_lib
from netcompare import rng as rng_lib


def max_edge_count(n: int) -> int:
  return n * (n - 1) // 2


def unrank_pairs(indices: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
  """Maps pair indices k = v*(v-1)/2 + u back to (u, v) with u < v."""
  k = np.asarray(indices, dtype=np.int64)
  v = ((1 + np.sqrt(1 + 8 * k.astype(np.float64))) // 2).astype(np.int64)
  # Correct float rounding at triangular-number boundaries.
  v = np.where(v * (v - 1) // 2 > k, v - 1, v)
  v = np.where((v + 1) * v // 2 <= k, v + 1, v)
  return k - v * (v - 1) // 2, v


def generate_random_gnm(n: int, m: int,
                        rng: rng_lib.RngStream) -> graph_lib.Graph:
  """Draws uniformly from all simple graphs with n vertices and m edges.

  Picks m distinct slots out of the n*(n-1)/2 vertex pairs without
  replacement, which makes every m-subset of pairs equally likely.
  """
  if n < 0:
    raise errors.ParameterError(f"n must be >= 0, got {n}")
  if not 0 <= m <= max_edge_count(n):
    raise errors.ParameterError(
        f"G(n, m) needs 0 <= m <= {max_edge_count(n)} for n={n}, got m={m}")
  graph = graph_lib.Graph(n)
  if m == 0:
    return graph
  slots = rng.choice(max_edge_count(n), size=m, replace=False)
  for u, v in zip(*unrank_pairs(slots)):
    graph.add_edge(int(u), int(v))
  assert graph.edge_count() == m
  return graph
