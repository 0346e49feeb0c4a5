"""Exceptions raised by netcompare."""


class NetcompareError(Exception):
  """Base class for all netcompare errors."""


class VertexRangeError(NetcompareError, IndexError):
  """A vertex id lies outside 0..n-1."""

  def __init__(self, vertex: int, n: int):
    super().__init__(f"vertex {vertex} out of range for a graph with {n} "
                     "vertices")
    self.vertex = vertex
    self.n = n


class ParameterError(NetcompareError, ValueError):
  """Model, generator or sweep parameters are invalid or infeasible."""


class ConfigError(ParameterError):
  """A config file could not be parsed."""

  def __init__(self, message: str, line: int = None):
    if line is not None:
      message = f"line {line}: {message}"
    super().__init__(message)
    self.line = line


class MixedSpecError(NetcompareError, RuntimeError):
  """Records of different model specs were aggregated together."""


class SampleError(NetcompareError, RuntimeError):
  """A single sweep sample failed."""

  def __init__(self, spec, sample_index: int, cause: BaseException):
    super().__init__(f"sample {sample_index} of {spec} failed: {cause!r}")
    self.spec = spec
    self.sample_index = sample_index


class RecordParseError(NetcompareError, ValueError):
  """A CSV row could not be parsed."""

  def __init__(self, path: str, line: int, message: str):
    super().__init__(f"{path}:{line}: {message}")
    self.path = path
    self.line = line


class SchemaVersionError(NetcompareError, ValueError):
  """A CSV file does not carry the expected header."""


class SelectionError(NetcompareError, LookupError):
  """A plot-series selection matched no aggregates."""
