"""Shortest-path based metrics: distances, closeness, ASP and betweenness.

All of them come out of one level-synchronous breadth-first search run from a
batch of sources at once over a sparse adjacency matrix. Column j of every
(n, batch) array belongs to source j; each BFS level is one sparse product
over the frontier cells that also counts shortest paths. Betweenness then
walks the levels backwards accumulating Brandes dependencies.

Unreachable pairs are left out of every sum: a vertex with no reachable peers
has closeness 0, and the average shortest path averages over reachable pairs
only (0 when there are none). Betweenness is unnormalised and counts each
unordered pair once.
"""

from typing import NamedTuple

import numpy as np
from scipy import sparse

from netcompare import graph as graph_lib

# Upper bound on n * batch cells per array.
_MAX_BATCH_CELLS = 1 << 22


class PathStatistics(NamedTuple):
  """Everything a single batched traversal yields.

    Attributes:
      closeness: Per-vertex closeness, 1 / (sum of distances to reachable
        peers), 0 for vertices without reachable peers.
      betweenness: Per-vertex unnormalised betweenness, or None when it was
        not requested.
      distance_sum: Sum of d(u, v) over ordered reachable pairs u != v.
      reachable_pairs: Number of ordered reachable pairs u != v.
    """
  closeness: np.ndarray
  betweenness: np.ndarray
  distance_sum: int
  reachable_pairs: int


def _batches(n: int):
  size = max(1, min(n, _MAX_BATCH_CELLS // max(n, 1)))
  for start in range(0, n, size):
    yield np.arange(start, min(start + size, n))


def _search(adjacency: sparse.csr_matrix, sources: np.ndarray):
  """BFS from every source in `sources` simultaneously.

  Each level only touches the cells of the current frontier.

  Returns:
    dist: (n, b) int64 hop counts, -1 where unreachable.
    sigma: (n, b) float64 shortest-path counts, 0 where unreachable.
    levels: levels[d] is the (rows, columns) index pair of the cells at
      distance d.
  """
  shape = (adjacency.shape[0], len(sources))
  columns = np.arange(len(sources))
  dist = np.full(shape, -1, dtype=np.int64)
  sigma = np.zeros(shape, dtype=np.float64)
  dist[sources, columns] = 0
  sigma[sources, columns] = 1.0
  levels = [(np.asarray(sources), columns)]
  while True:
    rows, cols = levels[-1]
    frontier = sparse.csr_matrix((sigma[rows, cols], (rows, cols)),
                                 shape=shape)
    reach = (adjacency @ frontier).tocoo()
    reach.sum_duplicates()
    fresh = dist[reach.row, reach.col] < 0
    if not fresh.any():
      break
    rows, cols = reach.row[fresh], reach.col[fresh]
    dist[rows, cols] = len(levels)
    sigma[rows, cols] = reach.data[fresh]
    levels.append((rows, cols))
  return dist, sigma, levels


def _dependencies(adjacency: sparse.csr_matrix, dist: np.ndarray,
                  sigma: np.ndarray, levels: list) -> np.ndarray:
  """Brandes dependencies delta_s(v), deepest level first."""
  delta = np.zeros_like(sigma)
  for depth in range(len(levels) - 1, 0, -1):
    rows, cols = levels[depth]
    weights = (1.0 + delta[rows, cols]) / sigma[rows, cols]
    pulled = (adjacency @ sparse.csr_matrix(
        (weights, (rows, cols)), shape=sigma.shape)).tocoo()
    pulled.sum_duplicates()
    parents = dist[pulled.row, pulled.col] == depth - 1
    rows, cols = pulled.row[parents], pulled.col[parents]
    delta[rows, cols] += sigma[rows, cols] * pulled.data[parents]
  return delta


def path_statistics(g: graph_lib.Graph,
                    with_betweenness: bool = True) -> PathStatistics:
  """Runs the batched traversal once and collects every path metric."""
  n = g.n
  closeness = np.zeros(n, dtype=np.float64)
  betweenness = np.zeros(n, dtype=np.float64) if with_betweenness else None
  distance_sum = 0
  reachable_pairs = 0
  if n == 0 or g.edge_count() == 0:
    return PathStatistics(closeness, betweenness, 0, 0)

  adjacency = g.to_sparse()
  # Batches run in ascending source order so float sums are bit-stable.
  for sources in _batches(n):
    dist, sigma, levels = _search(adjacency, sources)
    reached = dist > 0
    per_source = np.where(reached, dist, 0).sum(axis=0)
    closeness[sources] = np.divide(1.0,
                                   per_source,
                                   out=np.zeros(len(sources)),
                                   where=per_source > 0)
    distance_sum += int(per_source.sum())
    reachable_pairs += int(reached.sum())
    if with_betweenness:
      delta = _dependencies(adjacency, dist, sigma, levels)
      delta[sources, np.arange(len(sources))] = 0.0
      betweenness += delta.sum(axis=1)

  if with_betweenness:
    # Every unordered pair was visited from both of its endpoints.
    betweenness /= 2.0
  return PathStatistics(closeness, betweenness, distance_sum, reachable_pairs)


def bfs_distances(g: graph_lib.Graph, source: int) -> np.ma.MaskedArray:
  """Hop distances from `source`; unreachable vertices are masked."""
  g.check_vertex(source)
  dist, _, _ = _search(g.to_sparse(), np.array([source]))
  return np.ma.masked_array(dist[:, 0], mask=dist[:, 0] < 0)


def closeness(g: graph_lib.Graph) -> np.ndarray:
  return path_statistics(g, with_betweenness=False).closeness


def betweenness(g: graph_lib.Graph) -> np.ndarray:
  return path_statistics(g).betweenness


def average_shortest_path(g: graph_lib.Graph) -> float:
  return asp_from_statistics(path_statistics(g, with_betweenness=False))


def asp_from_statistics(stats: PathStatistics) -> float:
  if stats.reachable_pairs == 0:
    return 0.0
  return stats.distance_sum / stats.reachable_pairs


def mean_closeness(g: graph_lib.Graph) -> float:
  values = closeness(g)
  return float(values.mean()) if values.size else 0.0


def mean_betweenness(g: graph_lib.Graph) -> float:
  values = betweenness(g)
  return float(values.mean()) if values.size else 0.0
