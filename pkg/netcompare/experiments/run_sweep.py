"""Runner that expands a sweep config, samples every spec and aggregates."""

from collections.abc import Sequence
from concurrent import futures
import datetime
import itertools
from typing import NamedTuple

from absl import logging
import numpy as np

import netcompare
from netcompare import errors
from netcompare import rng as rng_lib
from netcompare import types
from netcompare.experiments import config as sweep_config
from netcompare.generators import builder
from netcompare.generators import edge_budget
from netcompare.generators.config import Model
from netcompare.generators.config import ModelSpec
from netcompare.metrics import report


def build_design(config: sweep_config.SweepConfig) -> list[ModelSpec]:
  """Every spec of the grid, sorted by spec key.

  Scale-free specs cover n x alpha x S, small-world specs n x p x S and random
  graphs get one spec per (n, S) because their edge count depends on S.
  """
  specs = []
  for n, s in itertools.product(config.n_values, config.s_values):
    if Model.RANDOM in config.models:
      specs.append(ModelSpec.random(n, s))
    if Model.SCALE_FREE in config.models:
      specs.extend(ModelSpec.scale_free(n, s, a) for a in config.alpha_values)
    if Model.SMALL_WORLD in config.models:
      specs.extend(ModelSpec.small_world(n, s, p) for p in config.p_values)
  return sorted(specs, key=ModelSpec.sort_key)


def sample_stream(spec: ModelSpec, base_seed: int,
                  sample_index: int) -> rng_lib.RngStream:
  """Stream a sample's graph is generated from.

  Its seed depends only on the base seed, the spec identity and the sample
  index, so growing the grid never changes existing samples.
  """
  labelled = rng_lib.derive_stream(base_seed,
                                   spec.stream_labels() + [sample_index])
  return rng_lib.derive_stream(labelled.seed)


def run_sample(spec: ModelSpec, base_seed: int,
               sample_index: int) -> types.MetricRecord:
  stream = sample_stream(spec, base_seed, sample_index)
  graph = builder.build_graph(spec, stream)
  return report.metric_report(graph, spec, stream.seed, sample_index)


def aggregate(records: Sequence[types.MetricRecord]) -> types.AggregateRecord:
  """Mean and population standard deviation of every metric."""
  if not records:
    raise errors.ParameterError("cannot aggregate an empty record list")
  specs = {record.spec for record in records}
  if len(specs) > 1:
    raise errors.MixedSpecError(
        f"aggregate got records of {len(specs)} specs: "
        f"{sorted(str(s) for s in specs)}")
  values = np.array([[getattr(r, name)
                      for name in types.METRIC_NAMES]
                     for r in records],
                    dtype=np.float64)
  constant = np.ptp(values, axis=0) == 0
  means = np.where(constant, values[0], values.mean(axis=0))
  sds = np.where(constant, 0.0, values.std(axis=0))
  return types.AggregateRecord(
      spec=records[0].spec,
      samples=len(records),
      means=dict(zip(types.METRIC_NAMES, means.tolist())),
      sds=dict(zip(types.METRIC_NAMES, sds.tolist())),
  )


def aggregate_all(
    records: Sequence[types.MetricRecord]) -> list[types.AggregateRecord]:
  """Aggregates records grouped by spec, in spec-key order."""
  ordered = sorted(records, key=types.MetricRecord.sort_key)
  return [
      aggregate(list(group))
      for _, group in itertools.groupby(ordered, key=lambda r: r.spec)
  ]


def _run_task(task: tuple[ModelSpec, int, int]) -> types.MetricRecord:
  spec, base_seed, sample_index = task
  return run_sample(spec, base_seed, sample_index)


def make_manifest(config: sweep_config.SweepConfig, record_count: int,
                  aggregate_count: int) -> dict[str, str]:
  manifest = dict(config.to_items())
  manifest.update(
      artifact_version=netcompare.__version__,
      record_count=str(record_count),
      aggregate_count=str(aggregate_count),
      created_at=datetime.datetime.now(datetime.timezone.utc).isoformat(
          timespec="seconds"),
  )
  return manifest


def execute_sweep(config: sweep_config.SweepConfig,
                  workers: int = 1,
                  logger=None) -> types.SweepResult:
  """Runs `samples` samples of every spec and aggregates them.

  Samples run in-process when `workers` <= 1 and in a process pool
  otherwise. Results are sorted before aggregation, so the output does not
  depend on the worker count or completion order. The first failing sample
  aborts the sweep with a `SampleError` naming its spec.

  Args:
    config: The grid to run.
    workers: Number of worker processes.
    logger: Optional Acme `base.Logger`, e.g. from `make_default_logger`,
      written one `completed`/`total`/`spec` row per finished sample.

  Returns:
    Raw records, per-spec aggregates and a manifest.
  """
  specs = build_design(config)
  tasks = [(spec, config.base_seed, index)
           for spec in specs
           for index in range(config.samples)]
  logging.info("Sweep: %d specs x %d samples = %d networks, %d worker(s)",
               len(specs), config.samples, len(tasks), max(workers, 1))

  records = []

  def _progress(record: types.MetricRecord):
    records.append(record)
    if logger is not None:
      logger.write({
          "completed": len(records),
          "total": len(tasks),
          "spec": str(record.spec),
      })

  if workers <= 1:
    for task in tasks:
      try:
        _progress(_run_task(task))
      except Exception as e:  # pylint: disable=broad-except
        raise errors.SampleError(task[0], task[2], e) from e
  else:
    with futures.ProcessPoolExecutor(max_workers=workers) as executor:
      pending = {executor.submit(_run_task, task): task for task in tasks}
      for future in futures.as_completed(pending):
        task = pending[future]
        try:
          _progress(future.result())
        except Exception as e:  # pylint: disable=broad-except
          executor.shutdown(wait=False, cancel_futures=True)
          raise errors.SampleError(task[0], task[2], e) from e

  records.sort(key=types.MetricRecord.sort_key)
  aggregates = aggregate_all(records)
  logging.info("Sweep finished: %d records, %d aggregates", len(records),
               len(aggregates))
  return types.SweepResult(
      records=records,
      aggregates=aggregates,
      manifest=make_manifest(config, len(records), len(aggregates)),
  )


class EdgeCount(NamedTuple):
  """Size of one generated graph."""
  spec: ModelSpec
  n: int
  m: int


class EdgeMismatch(NamedTuple):
  """An (n, S) group whose members do not all have the target size.

    Attributes:
      n: Vertex count of the group.
      s: S of the group.
      expected_m: Target edge count `n*S - S*(S+1)/2`.
      counts: Series key -> sorted distinct (vertices, edges) observed.
    """
  n: int
  s: int
  expected_m: int
  counts: dict[str, list[tuple[int, int]]]


def count_edges(config: sweep_config.SweepConfig) -> list[EdgeCount]:
  """Generates sample 0 of every spec of the grid and records its size."""
  counts = []
  for spec in build_design(config):
    graph = builder.build_graph(spec, sample_stream(spec, config.base_seed, 0))
    counts.append(EdgeCount(spec, graph.vertex_count(), graph.edge_count()))
  return counts


def audit_edge_identity(rows: Sequence) -> list[EdgeMismatch]:
  """Finds (n, S) groups whose graphs disagree on vertex or edge count.

  Every member of a group must have exactly n vertices and the shared target
  edge count. Accepts `MetricRecord`s or `EdgeCount`s.

  Returns:
    The failing groups, ordered by (n, S); empty when all sizes match.
  """
  groups = {}
  for row in rows:
    key = (row.spec.n, row.spec.s)
    groups.setdefault(key, {}).setdefault(row.spec.series_key(),
                                          set()).add((row.n, row.m))
  mismatches = []
  for (n, s), counts in sorted(groups.items()):
    expected = (n, edge_budget.scale_free_edge_count(n, s))
    if any(observed != {expected} for observed in counts.values()):
      mismatches.append(
          EdgeMismatch(n, s, expected[1],
                       {key: sorted(v) for key, v in sorted(counts.items())}))
  return mismatches


def verify_edge_identity(
    config: sweep_config.SweepConfig) -> list[EdgeMismatch]:
  mismatches = audit_edge_identity(count_edges(config))
  for mismatch in mismatches:
    logging.warning("Edge identity broken for n=%d, S=%d: %s", mismatch.n,
                    mismatch.s, mismatch.counts)
  return mismatches
