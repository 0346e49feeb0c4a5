"""Global clustering coefficient (transitivity)."""

from netcompare import graph as graph_lib


def triangle_count(g: graph_lib.Graph) -> int:
  # Each triangle is seen once from each of its three edges.
  closed = sum(g.common_neighbor_count(u, v) for u, v in g.edges())
  return closed // 3


def connected_triples(g: graph_lib.Graph) -> int:
  """Vertices paired with an unordered pair of their neighbours."""
  degrees = g.degrees()
  return int((degrees * (degrees - 1) // 2).sum())


def global_clustering(g: graph_lib.Graph) -> float:
  """3 * triangles / connected triples, 0 when there are no triples."""
  triples = connected_triples(g)
  if triples == 0:
    return 0.0
  return 3 * triangle_count(g) / triples
