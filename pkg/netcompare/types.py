"""Records produced by the metrics engine and the sweep runner."""

from collections.abc import Mapping
import dataclasses
from typing import NamedTuple

from immutabledict import immutabledict

from netcompare.generators.config import ModelSpec

METRIC_NAMES = (
    "mean_closeness",
    "mean_betweenness",
    "avg_shortest_path",
    "global_clustering",
)


class MetricRecord(NamedTuple):
  """Metrics of one generated graph plus where it came from."""
  spec: ModelSpec
  seed: int
  sample_index: int
  n: int
  m: int
  mean_closeness: float
  mean_betweenness: float
  avg_shortest_path: float
  global_clustering: float

  def metrics(self) -> dict[str, float]:
    return {name: getattr(self, name) for name in METRIC_NAMES}

  def sort_key(self) -> tuple:
    return self.spec.sort_key() + (self.sample_index,)


@dataclasses.dataclass(frozen=True)
class AggregateRecord:
  """Per-metric mean and population standard deviation over samples.

    Attributes:
      spec: Spec shared by every aggregated record.
      samples: Number of aggregated records.
      means: Metric name -> arithmetic mean.
      sds: Metric name -> population standard deviation.
    """
  spec: ModelSpec
  samples: int
  means: Mapping[str, float]
  sds: Mapping[str, float]

  def __post_init__(self):
    object.__setattr__(self, "means", immutabledict(self.means))
    object.__setattr__(self, "sds", immutabledict(self.sds))

  @property
  def n(self) -> int:
    return self.spec.n

  @property
  def m(self) -> int:
    return self.spec.m


@dataclasses.dataclass
class SweepResult:
  """Raw records, their aggregates and a manifest of how they were made.

    Attributes:
      records: One record per (spec, sample), sorted by spec key then sample.
      aggregates: One aggregate per spec, in the same spec order.
      manifest: String key/value pairs echoing the sweep config, the package
        version, a timestamp and the record count.
    """
  records: list[MetricRecord]
  aggregates: list[AggregateRecord]
  manifest: Mapping[str, str] = dataclasses.field(default_factory=dict)
