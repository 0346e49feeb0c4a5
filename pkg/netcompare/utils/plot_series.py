"""Figure-ready series built from sweep aggregates."""

from collections.abc import Sequence
import dataclasses
import os
import re
from typing import Optional, Union

from immutabledict import immutabledict
from natsort import natsorted
from natsort import ns
import pandas as pd

from netcompare import errors
from netcompare import types
from netcompare.experiments import run_sweep
from netcompare.generators.config import Model
from netcompare.utils import records as records_lib

# Figure id -> plotted metric; None plots edges against vertices.
FIGURES = immutabledict({
    "edges_vertices": None,
    "closeness": "mean_closeness",
    "betweenness": "mean_betweenness",
    "asp": "avg_shortest_path",
    "clustering": "global_clustering",
})


@dataclasses.dataclass(frozen=True)
class PlotSeries:
  """One line of one panel.

    Attributes:
      figure_id: Key of `FIGURES`.
      panel: S shared by every point.
      series_key: Legend label, e.g. "small_world p=0.3".
      points: (x, y) pairs sorted by x.
    """
  figure_id: str
  panel: int
  series_key: str
  points: tuple[tuple[float, float], ...]

  def to_frame(self) -> pd.DataFrame:
    return pd.DataFrame(list(self.points), columns=["x", "y"])


def aggregates_from_records(
    records: Sequence[types.MetricRecord]) -> types.SweepResult:
  return types.SweepResult(records=list(records),
                           aggregates=run_sweep.aggregate_all(records))


def emit_plot_series(
    result: Union[types.SweepResult, Sequence[types.AggregateRecord]],
    figure_id: str,
    panels: Optional[Sequence[int]] = None,
    models: Optional[Sequence[Model]] = None,
) -> list[PlotSeries]:
  """Groups aggregates into (panel, series) lines for one figure.

  Metric figures plot the mean metric against m; `edges_vertices` plots m
  against n. Series come out ordered by panel, then naturally by key.

  Args:
    result: A sweep result or its aggregates.
    figure_id: Which figure to build.
    panels: Only keep these S values.
    models: Only keep these models.

  Returns:
    The series of the figure.

  Raises:
    ParameterError: Unknown figure id.
    SelectionError: Nothing is left to plot, or an aggregate has no S panel.
  """
  if figure_id not in FIGURES:
    raise errors.ParameterError(
        f"unknown figure {figure_id!r}, expected one of {', '.join(FIGURES)}")
  metric = FIGURES[figure_id]
  aggregates = getattr(result, "aggregates", result)
  if isinstance(result, types.SweepResult) and not aggregates:
    aggregates = run_sweep.aggregate_all(result.records)

  lines = {}
  for aggregate in aggregates:
    spec = aggregate.spec
    if spec.s is None:
      raise errors.SelectionError(
          f"{spec} has no S value, so it belongs to no panel of {figure_id!r}")
    if panels is not None and spec.s not in panels:
      continue
    if models is not None and spec.model not in models:
      continue
    if metric is None:
      point = (aggregate.n, aggregate.m)
    else:
      point = (aggregate.m, aggregate.means[metric])
    lines.setdefault((spec.s, spec.series_key()), []).append(point)

  if not lines:
    raise errors.SelectionError(
        f"no aggregates for figure {figure_id!r} with panels={panels} "
        f"models={models}")
  series = []
  for panel in sorted({panel for panel, _ in lines}):
    keys = natsorted((key for p, key in lines if p == panel), alg=ns.FLOAT)
    for key in keys:
      series.append(
          PlotSeries(figure_id, panel, key,
                     tuple(sorted(lines[(panel, key)]))))
  return series


def series_file_name(series: PlotSeries) -> str:
  slug = re.sub(r"[^A-Za-z0-9.]+", "_", series.series_key).strip("_")
  return f"{series.figure_id}_S{series.panel}_{slug}.csv"


def write_plot_series(series: Sequence[PlotSeries], out_dir: str) -> list[str]:
  """Writes one `x,y` CSV per series plus a `manifest.txt` index."""
  os.makedirs(out_dir, exist_ok=True)
  manifest = {"series_count": str(len(series))}
  paths = []
  for line in series:
    name = series_file_name(line)
    path = os.path.join(out_dir, name)
    frame = line.to_frame()
    frame["y"] = frame["y"].map(records_lib.format_real)
    frame.to_csv(path, index=False, lineterminator="\n")
    manifest[name] = (f"figure={line.figure_id};panel={line.panel};"
                      f"series={line.series_key};points={len(line.points)}")
    paths.append(path)
  records_lib.write_manifest(manifest, os.path.join(out_dir, "manifest.txt"))
  return paths
