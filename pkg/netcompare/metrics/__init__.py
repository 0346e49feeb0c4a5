"""Network metrics on unweighted undirected graphs."""

from netcompare.metrics.clustering import connected_triples
from netcompare.metrics.clustering import global_clustering
from netcompare.metrics.clustering import triangle_count
from netcompare.metrics.paths import average_shortest_path
from netcompare.metrics.paths import betweenness
from netcompare.metrics.paths import bfs_distances
from netcompare.metrics.paths import closeness
from netcompare.metrics.paths import mean_betweenness
from netcompare.metrics.paths import mean_closeness
from netcompare.metrics.paths import path_statistics
from netcompare.metrics.paths import PathStatistics
from netcompare.metrics.report import metric_report
