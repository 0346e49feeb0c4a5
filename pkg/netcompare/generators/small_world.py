"""Ring lattices, edge deletion and rewiring.

A small-world network here is a ring lattice trimmed to the scale-free edge
count by deleting random edges and then rewired with probability p. Deletion
always precedes rewiring and the result may be disconnected.
"""

from absl import logging

from netcompare import errors
from netcompare import graph as graph_lib
from netcompare import rng as rng_lib
from netcompare.generators import edge_budget

MAX_REWIRE_ATTEMPTS = 100


def generate_ring_lattice(n: int, nei: int) -> graph_lib.Graph:
  """Circulant graph joining v to (v +- d) mod n for d = 1..nei."""
  edge_budget.lattice_edge_count(n, nei)
  return graph_lib.Graph.from_edges(n, ((v, (v + d) % n)
                                        for v in range(n)
                                        for d in range(1, nei + 1)))


def delete_random_edges(graph: graph_lib.Graph, x: int,
                        rng: rng_lib.RngStream) -> graph_lib.Graph:
  """Copy of `graph` with x edges removed uniformly without replacement."""
  m = graph.edge_count()
  if not 0 <= x <= m:
    raise errors.ParameterError(
        f"cannot delete {x} edges from a graph with {m} edges")
  result = graph.copy()
  if x == 0:
    return result
  edges = graph.edge_array()
  for index in rng.choice(m, size=x, replace=False):
    u, v = edges[index]
    result.remove_edge(int(u), int(v))
  return result


def rewire_edges(graph: graph_lib.Graph,
                 p: float,
                 rng: rng_lib.RngStream,
                 max_attempts: int = MAX_REWIRE_ATTEMPTS) -> graph_lib.Graph:
  """Copy of `graph` with each edge rewired independently with probability p.

  Edges are visited in ascending order. A selected edge keeps one endpoint,
  picked uniformly, and moves the other to a uniformly random vertex.
  Candidates that would form a self-loop or duplicate edge are redrawn; after
  `max_attempts` rejections the edge stays where it is. The edge count never
  changes.
  """
  if not 0.0 <= p <= 1.0:
    raise errors.ParameterError(f"p must lie in [0, 1], got {p}")
  result = graph.copy()
  n = graph.n
  exhausted = 0
  for u, v in graph.edges():
    if rng.random() >= p:
      continue
    keep, drop = (u, v) if rng.random() < 0.5 else (v, u)
    for _ in range(max_attempts):
      w = int(rng.integers(n))
      if w != keep and not result.has_edge(keep, w):
        result.remove_edge(keep, drop)
        result.add_edge(keep, w)
        break
    else:
      exhausted += 1
  if exhausted:
    logging.debug("rewiring kept %d edges after %d rejected candidates",
                  exhausted, max_attempts)
  return result


def generate_small_world(n: int, nei: int, s: int, p: float,
                         rng: rng_lib.RngStream) -> graph_lib.Graph:
  """Lattice, minus `deletion_count(n, nei, s)` edges, then rewired."""
  if nei != s:
    raise errors.ParameterError(f"small-world generation requires Nei = S, "
                                f"got Nei={nei}, S={s}")
  budget = edge_budget.make_edge_budget(n, nei, s)
  lattice = generate_ring_lattice(n, nei)
  trimmed = delete_random_edges(lattice, budget.x, rng)
  graph = rewire_edges(trimmed, p, rng)
  assert graph.edge_count() == budget.m
  return graph
