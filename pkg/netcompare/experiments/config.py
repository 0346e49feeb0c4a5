"""Sweep config and its flat key-value file format."""

from collections.abc import Sequence
import dataclasses

from netcompare import errors
from netcompare.generators.config import Model

_LIST_KEYS = ("n_values", "s_values", "alpha_values", "p_values", "models")
_SCALAR_KEYS = ("samples", "base_seed")
_REQUIRED_KEYS = ("n_values", "s_values")


@dataclasses.dataclass
class SweepConfig:
  """The experiment grid.

    Attributes:
      n_values: Vertex counts.
      s_values: Edges per growth step; also the lattice radius Nei.
      alpha_values: Attachment powers swept for scale-free networks.
      p_values: Rewiring probabilities swept for small-world networks.
      samples: Networks generated per spec.
      base_seed: 64-bit seed every sample stream is derived from.
      models: Models to generate.
    """

  n_values: Sequence[int]
  s_values: Sequence[int]
  alpha_values: Sequence[float] = ()
  p_values: Sequence[float] = ()
  samples: int = 30
  base_seed: int = 0
  models: Sequence[Model] = tuple(Model)

  def __post_init__(self):
    self.n_values = tuple(int(n) for n in self.n_values)
    self.s_values = tuple(int(s) for s in self.s_values)
    self.alpha_values = tuple(float(a) for a in self.alpha_values)
    self.p_values = tuple(float(p) for p in self.p_values)
    self.models = tuple(
        m if isinstance(m, Model) else Model.parse(m) for m in self.models)
    self.samples = int(self.samples)
    self.base_seed = int(self.base_seed)

    if self.samples < 1:
      raise errors.ParameterError(f"samples must be >= 1, got {self.samples}")
    if not 0 <= self.base_seed < 1 << 64:
      raise errors.ParameterError("base_seed must fit in 64 unsigned bits")
    if not self.models:
      raise errors.ParameterError("at least one model must be selected")
    for name in ("n_values", "s_values", "models"):
      self._check_unique(name)
    if not self.n_values or not self.s_values:
      raise errors.ParameterError("n_values and s_values must be non-empty")
    if Model.SCALE_FREE in self.models:
      if not self.alpha_values:
        raise errors.ParameterError("scale_free needs alpha_values")
      self._check_unique("alpha_values")
      if any(not a > 0 for a in self.alpha_values):
        raise errors.ParameterError(
            f"alpha values must be > 0, got {self.alpha_values}")
    if Model.SMALL_WORLD in self.models:
      if not self.p_values:
        raise errors.ParameterError("small_world needs p_values")
      self._check_unique("p_values")
      if any(not 0.0 <= p <= 1.0 for p in self.p_values):
        raise errors.ParameterError(
            f"p values must lie in [0, 1], got {self.p_values}")
    if any(s < 1 for s in self.s_values):
      raise errors.ParameterError(f"S values must be >= 1, got {self.s_values}")
    offending = [(n, s)
                 for n in self.n_values
                 for s in self.s_values
                 if n < 2 * s + 1]
    if offending:
      listed = ", ".join(f"(n={n}, S={s})" for n, s in offending)
      raise errors.ParameterError(
          f"every (n, S) needs n >= 2S + 1; offending pairs: {listed}")

  def _check_unique(self, name: str):
    values = getattr(self, name)
    if len(set(values)) != len(values):
      raise errors.ParameterError(f"{name} contains duplicates: {values}")

  @classmethod
  def full_grid(cls, samples: int = 30, base_seed: int = 0) -> "SweepConfig":
    """Full grid: n up to 10,000, nine alphas, five p values, S in 2..16."""
    return cls(
        n_values=list(range(100, 1001, 100)) + list(range(2000, 10001, 1000)),
        s_values=(2, 4, 8, 16),
        alpha_values=[1.5 + 0.25 * i for i in range(9)],
        p_values=(0.3, 0.4, 0.5, 0.6, 0.7),
        samples=samples,
        base_seed=base_seed)

  @classmethod
  def desk_grid(cls, samples: int = 30, base_seed: int = 0) -> "SweepConfig":
    """The full grid restricted to n <= 1000."""
    full = cls.full_grid(samples, base_seed)
    return dataclasses.replace(
        full, n_values=[n for n in full.n_values if n <= 1000])

  def to_items(self) -> dict[str, str]:
    """Config as ordered key -> text value pairs, the file format's fields."""
    return {
        "n_values": ",".join(str(n) for n in self.n_values),
        "s_values": ",".join(str(s) for s in self.s_values),
        "alpha_values": ",".join(repr(a) for a in self.alpha_values),
        "p_values": ",".join(repr(p) for p in self.p_values),
        "samples": str(self.samples),
        "base_seed": str(self.base_seed),
        "models": ",".join(m.value for m in self.models),
    }


def dump_sweep_config(config: SweepConfig) -> str:
  items = config.to_items().items()
  return "".join(f"{key} = {value}\n" for key, value in items)


def parse_sweep_config(text: str) -> SweepConfig:
  """Parses `key = value` lines; list values are comma separated."""
  values = {}
  for line_number, raw in enumerate(text.splitlines(), start=1):
    line = raw.split("#", 1)[0].strip()
    if not line:
      continue
    key, sep, value = line.partition("=")
    key, value = key.strip(), value.strip()
    if not sep or not key:
      raise errors.ConfigError(f"expected 'key = value', got {raw!r}",
                               line_number)
    if key not in _LIST_KEYS and key not in _SCALAR_KEYS:
      raise errors.ConfigError(f"unknown key {key!r}", line_number)
    if key in values:
      raise errors.ConfigError(f"duplicate key {key!r}", line_number)
    try:
      values[key] = _parse_value(key, value)
    except ValueError as e:
      raise errors.ConfigError(f"bad value for {key!r}: {e}",
                               line_number) from e

  missing = [key for key in _REQUIRED_KEYS if key not in values]
  if missing:
    raise errors.ConfigError(f"missing required keys: {', '.join(missing)}")
  try:
    return SweepConfig(**values)
  except errors.ParameterError as e:
    raise errors.ConfigError(str(e)) from e


def _parse_value(key: str, value: str):
  if key in _SCALAR_KEYS:
    return int(value)
  items = [item.strip() for item in value.split(",") if item.strip()]
  if key in ("n_values", "s_values"):
    return [int(item) for item in items]
  if key == "models":
    return [Model.parse(item) for item in items]
  return [float(item) for item in items]


def load_sweep_config(path: str) -> SweepConfig:
  try:
    with open(path, encoding="utf-8") as f:
      text = f.read()
  except OSError as e:
    raise errors.ConfigError(f"cannot read config {path}: {e}") from e
  return parse_sweep_config(text)
