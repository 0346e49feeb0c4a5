"""Edge-count calculus that keeps the three models size-comparable.

A scale-free network grown from one vertex with S edges per arrival ends with
n*S - S*(S+1)/2 edges. A ring lattice of radius Nei has n*Nei edges, so
deleting x = n*(Nei - S) + S*(S+1)/2 lattice edges before rewiring leaves the
small-world network with the same count. With Nei = S, x no longer depends
on n.
"""

from typing import NamedTuple

from netcompare import errors


class EdgeBudget(NamedTuple):
  """Target edge total `m` and lattice deletion count `x`."""
  m: int
  x: int


def scale_free_edge_count(n: int, s: int) -> int:
  if s < 1:
    raise errors.ParameterError(f"S must be >= 1, got {s}")
  if n < s + 1:
    raise errors.ParameterError(
        f"growth cannot attach S={s} edges before S+1 vertices exist (n={n})")
  return n * s - s * (s + 1) // 2


def lattice_edge_count(n: int, nei: int) -> int:
  if nei < 1:
    raise errors.ParameterError(f"Nei must be >= 1, got {nei}")
  if n < 2 * nei + 1:
    raise errors.ParameterError(
        f"a simple ring lattice of radius Nei={nei} needs n >= {2 * nei + 1}, "
        f"got n={n}")
  return n * nei


def deletion_count(n: int, nei: int, s: int) -> int:
  x = n * (nei - s) + s * (s + 1) // 2
  if x < 0 or x > n * nei:
    raise errors.ParameterError(
        f"infeasible edge budget: x={x} for n={n}, Nei={nei}, S={s}")
  return x


def make_edge_budget(n: int, nei: int, s: int) -> EdgeBudget:
  """Budget for trimming an (n, Nei) lattice down to the (n, S) edge count."""
  lattice_edge_count(n, nei)
  budget = EdgeBudget(m=scale_free_edge_count(n, s),
                      x=deletion_count(n, nei, s))
  assert budget.m == n * nei - budget.x
  return budget
