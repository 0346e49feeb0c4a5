"""Preferential attachment growth with a power attachment kernel."""

import numpy as np

from netcompare import errors
from netcompare import graph as graph_lib
from netcompare import rng as rng_lib
from netcompare.generators import edge_budget


def attachment_weights(degrees: np.ndarray, alpha: float) -> np.ndarray:
  """Unnormalised attachment appeal, degree**alpha + 1."""
  return np.power(degrees, alpha) + 1.0


def generate_scale_free(n: int, s: int, alpha: float,
                        rng: rng_lib.RngStream) -> graph_lib.Graph:
  """Grows a network one vertex at a time from a single seed vertex.

  Arrival i (zero-indexed, i >= 1) attaches min(i, s) edges to distinct
  earlier vertices. Each target is drawn with probability proportional to
  degree**alpha + 1 among the vertices not yet picked in this step, so the
  final edge count is exactly `scale_free_edge_count(n, s)`.

  Args:
    n: Final vertex count, at least s + 1.
    s: Edges attached per arrival once enough vertices exist.
    alpha: Attachment power, > 0.
    rng: Stream all target choices are drawn from.

  Returns:
    The grown graph.
  """
  expected_edges = edge_budget.scale_free_edge_count(n, s)
  if not alpha > 0:
    raise errors.ParameterError(f"alpha must be > 0, got {alpha}")

  graph = graph_lib.Graph(n)
  degrees = np.zeros(n, dtype=np.float64)
  for i in range(1, n):
    k = min(i, s)
    if k == i:
      targets = np.arange(i)
    else:
      weights = attachment_weights(degrees[:i], alpha)
      targets = rng.choice(i, size=k, replace=False, p=weights / weights.sum())
    for target in targets:
      graph.add_edge(i, int(target))
    degrees[targets] += 1
    degrees[i] = k

  assert graph.edge_count() == expected_edges
  return graph
