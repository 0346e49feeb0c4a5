"""Undirected simple graph over dense integer vertex ids."""

from collections.abc import Iterable

import numpy as np
from scipy import sparse

from netcompare import errors

Edge = tuple[int, int]


class Graph:
  """Undirected simple graph with vertices 0..n-1.

  Self-loops and multi-edges are never stored: `add_edge` reports them by
  returning False instead of raising, so generators can use rejection-style
  insertion. Neighbour queries are answered in ascending vertex order.
  """

  def __init__(self, n: int):
    if n < 0:
      raise errors.ParameterError(f"vertex count must be >= 0, got {n}")
    self._n = n
    self._adjacency: list[set[int]] = [set() for _ in range(n)]
    self._num_edges = 0

  @classmethod
  def from_edges(cls, n: int, edges: Iterable[Edge]) -> "Graph":
    graph = cls(n)
    for u, v in edges:
      graph.add_edge(u, v)
    return graph

  def check_vertex(self, v: int):
    if not 0 <= v < self._n:
      raise errors.VertexRangeError(v, self._n)

  @property
  def n(self) -> int:
    return self._n

  def vertex_count(self) -> int:
    return self._n

  def edge_count(self) -> int:
    return self._num_edges

  def has_edge(self, u: int, v: int) -> bool:
    self.check_vertex(u)
    self.check_vertex(v)
    return v in self._adjacency[u]

  def add_edge(self, u: int, v: int) -> bool:
    """Inserts {u, v}; returns False for self-loops and existing edges."""
    self.check_vertex(u)
    self.check_vertex(v)
    if u == v or v in self._adjacency[u]:
      return False
    self._adjacency[u].add(v)
    self._adjacency[v].add(u)
    self._num_edges += 1
    return True

  def remove_edge(self, u: int, v: int) -> bool:
    """Removes {u, v}; returns False when the edge is absent."""
    self.check_vertex(u)
    self.check_vertex(v)
    if v not in self._adjacency[u]:
      return False
    self._adjacency[u].discard(v)
    self._adjacency[v].discard(u)
    self._num_edges -= 1
    return True

  def degree(self, v: int) -> int:
    self.check_vertex(v)
    return len(self._adjacency[v])

  def neighbors(self, v: int) -> list[int]:
    self.check_vertex(v)
    return sorted(self._adjacency[v])

  def common_neighbor_count(self, u: int, v: int) -> int:
    self.check_vertex(u)
    self.check_vertex(v)
    a, b = self._adjacency[u], self._adjacency[v]
    if len(a) > len(b):
      a, b = b, a
    return sum(1 for w in a if w in b)

  def degrees(self) -> np.ndarray:
    return np.fromiter((len(a) for a in self._adjacency),
                       dtype=np.int64,
                       count=self._n)

  def edges(self) -> list[Edge]:
    """All edges as (u, v) with u < v, sorted ascending."""
    return [(u, v)
            for u in range(self._n)
            for v in sorted(self._adjacency[u])
            if u < v]

  def edge_array(self) -> np.ndarray:
    """Edges as an int64 array of shape (m, 2), rows sorted ascending."""
    edges = self.edges()
    if not edges:
      return np.zeros((0, 2), dtype=np.int64)
    return np.asarray(edges, dtype=np.int64)

  def to_sparse(self) -> sparse.csr_matrix:
    """Symmetric 0/1 adjacency matrix in CSR form."""
    edges = self.edge_array()
    rows = np.concatenate([edges[:, 0], edges[:, 1]])
    cols = np.concatenate([edges[:, 1], edges[:, 0]])
    data = np.ones(rows.shape[0], dtype=np.float64)
    return sparse.csr_matrix((data, (rows, cols)), shape=(self._n, self._n))

  def relabel(self, permutation: Iterable[int]) -> "Graph":
    """Copy with vertex v renamed to permutation[v]."""
    permutation = list(permutation)
    if sorted(permutation) != list(range(self._n)):
      raise errors.ParameterError("relabel needs a permutation of 0..n-1")
    return Graph.from_edges(self._n, ((permutation[u], permutation[v])
                                      for u, v in self.edges()))

  def copy(self) -> "Graph":
    graph = Graph(self._n)
    graph._adjacency = [set(a) for a in self._adjacency]
    graph._num_edges = self._num_edges
    return graph

  def __eq__(self, other: object) -> bool:
    if not isinstance(other, Graph):
      return NotImplemented
    return self._n == other._n and self._adjacency == other._adjacency

  def __repr__(self) -> str:
    return f"Graph(n={self._n}, m={self._num_edges})"


def new_graph(n: int) -> Graph:
  """Returns an edgeless graph with n vertices."""
  return Graph(n)


def complete_graph(n: int) -> Graph:
  return Graph.from_edges(n, ((u, v) for u in range(n)
                              for v in range(u + 1, n)))
