"""Per-graph metric record."""

from netcompare import graph as graph_lib
from netcompare import types
from netcompare.generators.config import ModelSpec
from netcompare.metrics import clustering
from netcompare.metrics import paths


def metric_report(g: graph_lib.Graph, spec: ModelSpec, seed: int,
                  sample_index: int) -> types.MetricRecord:
  stats = paths.path_statistics(g)
  n = g.n
  return types.MetricRecord(
      spec=spec,
      seed=int(seed),
      sample_index=int(sample_index),
      n=n,
      m=g.edge_count(),
      mean_closeness=float(stats.closeness.mean()) if n else 0.0,
      mean_betweenness=float(stats.betweenness.mean()) if n else 0.0,
      avg_shortest_path=paths.asp_from_statistics(stats),
      global_clustering=clustering.global_clustering(g),
  )
