"""CSV files for metric records, aggregates, manifests and edge lists.

Records and aggregates are flat CSV tables read and written with pandas.
Every value is stored as text: integers in decimal, reals with 12 significant
digits and fields that do not apply to a model left empty.
"""

from collections.abc import Iterable, Mapping, Sequence
import re
from typing import Optional, Union

import pandas as pd

from netcompare import errors
from netcompare import graph as graph_lib
from netcompare import types
from netcompare.generators.config import Model
from netcompare.generators.config import ModelSpec

SPEC_COLUMNS = ("model", "n", "m", "s", "nei", "alpha", "p")

RECORD_COLUMNS = SPEC_COLUMNS + ("sample_index", "seed") + types.METRIC_NAMES

AGGREGATE_COLUMNS = SPEC_COLUMNS + ("samples",) + tuple(
    f"{name}_{stat}" for name in types.METRIC_NAMES for stat in ("mean", "sd"))


def format_real(value: float) -> str:
  return f"{value:.12g}"


def _optional(value, fmt=str) -> str:
  return "" if value is None else fmt(value)


def _spec_fields(spec: ModelSpec) -> dict[str, str]:
  return {
      "model": spec.model.value,
      "n": str(spec.n),
      "m": str(spec.m),
      "s": _optional(spec.s),
      "nei": _optional(spec.nei),
      "alpha": _optional(spec.alpha, format_real),
      "p": _optional(spec.p, format_real),
  }


def _write_table(rows: list[dict[str, str]], columns: Sequence[str],
                 path: str):
  df = pd.DataFrame(rows, columns=list(columns), dtype=str)
  df.to_csv(path, index=False, lineterminator="\n")


def _read_table(path: str, columns: Sequence[str]) -> pd.DataFrame:
  """Reads a CSV as text and checks its header."""
  try:
    df = pd.read_csv(path,
                     dtype=str,
                     keep_default_na=False,
                     skip_blank_lines=False)
  except pd.errors.EmptyDataError:
    raise errors.SchemaVersionError(f"{path}: file has no header") from None
  except pd.errors.ParserError as e:
    match = re.search(r"line (\d+)", str(e))
    line = int(match.group(1)) if match else 0
    raise errors.RecordParseError(path, line, str(e)) from e
  if tuple(df.columns) != tuple(columns):
    raise errors.SchemaVersionError(
        f"{path}: expected header {','.join(columns)}, "
        f"got {','.join(map(str, df.columns))}")
  return df


class _RowReader:
  """Typed access to the text fields of one CSV row."""

  def __init__(self, path: str, line: int, row: Mapping):
    self._path = path
    self._line = line
    self._row = row

  def error(self, message: str) -> errors.RecordParseError:
    return errors.RecordParseError(self._path, self._line, message)

  def text(self, column: str) -> str:
    value = self._row[column]
    if not isinstance(value, str):
      raise self.error(f"missing field {column!r}")
    return value.strip()

  def integer(self, column: str) -> int:
    value = self.text(column)
    try:
      return int(value)
    except ValueError:
      raise self.error(f"{column}: not an integer: {value!r}") from None

  def real(self, column: str) -> float:
    value = self.text(column)
    try:
      return float(value)
    except ValueError:
      raise self.error(f"{column}: not a number: {value!r}") from None

  def optional_integer(self, column: str) -> Optional[int]:
    return self.integer(column) if self.text(column) else None

  def optional_real(self, column: str) -> Optional[float]:
    return self.real(column) if self.text(column) else None

  def spec(self) -> ModelSpec:
    try:
      return ModelSpec(
          model=Model.parse(self.text("model")),
          n=self.integer("n"),
          m=self.integer("m"),
          s=self.optional_integer("s"),
          nei=self.optional_integer("nei"),
          alpha=self.optional_real("alpha"),
          p=self.optional_real("p"),
      )
    except errors.ParameterError as e:
      raise self.error(str(e)) from e


def _rows(path: str, df: pd.DataFrame) -> Iterable[_RowReader]:
  # Line 1 is the header.
  for index, row in enumerate(df.to_dict("records")):
    yield _RowReader(path, index + 2, row)


def write_records(result_or_records: Union[types.SweepResult,
                                           Sequence[types.MetricRecord]],
                  path: str):
  """Writes one row per record; an empty list yields a header-only file."""
  records = getattr(result_or_records, "records", result_or_records)
  rows = []
  for record in records:
    row = _spec_fields(record.spec)
    row.update(n=str(record.n), m=str(record.m))
    row["sample_index"] = str(record.sample_index)
    row["seed"] = str(record.seed)
    for name in types.METRIC_NAMES:
      row[name] = format_real(getattr(record, name))
    rows.append(row)
  _write_table(rows, RECORD_COLUMNS, path)


def read_records(path: str) -> list[types.MetricRecord]:
  records = []
  for row in _rows(path, _read_table(path, RECORD_COLUMNS)):
    spec = row.spec()
    records.append(
        types.MetricRecord(spec=spec,
                           seed=row.integer("seed"),
                           sample_index=row.integer("sample_index"),
                           n=spec.n,
                           m=spec.m,
                           **{
                               name: row.real(name)
                               for name in types.METRIC_NAMES
                           }))
  return records


def write_aggregates(aggregates: Sequence[types.AggregateRecord], path: str):
  rows = []
  for aggregate in aggregates:
    row = _spec_fields(aggregate.spec)
    row["samples"] = str(aggregate.samples)
    for name in types.METRIC_NAMES:
      row[f"{name}_mean"] = format_real(aggregate.means[name])
      row[f"{name}_sd"] = format_real(aggregate.sds[name])
    rows.append(row)
  _write_table(rows, AGGREGATE_COLUMNS, path)


def read_aggregates(path: str) -> list[types.AggregateRecord]:
  aggregates = []
  for row in _rows(path, _read_table(path, AGGREGATE_COLUMNS)):
    aggregates.append(
        types.AggregateRecord(
            spec=row.spec(),
            samples=row.integer("samples"),
            means={
                name: row.real(f"{name}_mean") for name in types.METRIC_NAMES
            },
            sds={name: row.real(f"{name}_sd") for name in types.METRIC_NAMES},
        ))
  return aggregates


def write_manifest(manifest: Mapping[str, str], path: str):
  with open(path, "w", encoding="utf-8") as f:
    for key, value in manifest.items():
      f.write(f"{key}={value}\n")


def read_manifest(path: str) -> dict[str, str]:
  manifest = {}
  with open(path, encoding="utf-8") as f:
    for line in f:
      key, sep, value = line.rstrip("\n").partition("=")
      if sep:
        manifest[key] = value
  return manifest


def edge_list_lines(g: graph_lib.Graph) -> list[str]:
  """"u v" per edge with u < v, in ascending order."""
  return [f"{u} {v}" for u, v in g.edges()]


def write_edge_list(g: graph_lib.Graph, path: str):
  with open(path, "w", encoding="utf-8") as f:
    f.writelines(f"{line}\n" for line in edge_list_lines(g))
