"""Model specification shared by the generators, metrics and sweep."""

import dataclasses
import enum
from typing import Optional

from netcompare import errors
from netcompare.generators import edge_budget


class Model(str, enum.Enum):
  RANDOM = "random"
  SCALE_FREE = "scale_free"
  SMALL_WORLD = "small_world"

  @property
  def cli_name(self) -> str:
    return self.value.replace("_", "-")

  @classmethod
  def parse(cls, name: str) -> "Model":
    try:
      return cls(name.strip().replace("-", "_"))
    except ValueError:
      choices = ", ".join(m.value for m in cls)
      raise errors.ParameterError(
          f"unknown model {name!r}, expected one of {choices}") from None


MODEL_ORDER = tuple(Model)


@dataclasses.dataclass(frozen=True)
class ModelSpec:
  """Which model to generate and with which parameters.

    Attributes:
      model: Network model.
      n: Vertex count.
      m: Target edge count. Whenever `s` is set it must equal
        `scale_free_edge_count(n, s)`.
      s: Edges attached per growth step; also the panel the spec is plotted
        in. Set for every model produced by the sweep design.
      nei: Ring lattice radius (small-world only, must equal `s`).
      alpha: Attachment power (scale-free only).
      p: Rewiring probability (small-world only).
    """

  model: Model
  n: int
  m: int
  s: Optional[int] = None
  nei: Optional[int] = None
  alpha: Optional[float] = None
  p: Optional[float] = None

  def __post_init__(self):
    object.__setattr__(self, "model", Model(self.model))
    if self.n < 1:
      raise errors.ParameterError(f"n must be >= 1, got {self.n} in {self}")
    if self.s is not None and self.s < 1:
      raise errors.ParameterError(f"S must be >= 1 in {self}")

    if self.model is Model.RANDOM:
      self._expect_unset("nei", "alpha", "p")
      if self.m < 0 or self.m > self.n * (self.n - 1) // 2:
        raise errors.ParameterError(f"edge count out of range in {self}")
    elif self.model is Model.SCALE_FREE:
      self._expect_unset("nei", "p")
      if self.s is None or self.alpha is None:
        raise errors.ParameterError(f"scale_free needs S and alpha: {self}")
      if not self.alpha > 0:
        raise errors.ParameterError(f"alpha must be > 0 in {self}")
    else:
      self._expect_unset("alpha")
      if self.s is None or self.nei is None or self.p is None:
        raise errors.ParameterError(f"small_world needs S, Nei and p: {self}")
      if self.nei != self.s:
        raise errors.ParameterError(f"small_world requires Nei = S: {self}")
      if not 0.0 <= self.p <= 1.0:
        raise errors.ParameterError(f"p must lie in [0, 1] in {self}")
      edge_budget.lattice_edge_count(self.n, self.nei)

    if self.s is not None:
      expected = edge_budget.scale_free_edge_count(self.n, self.s)
      if self.m != expected:
        raise errors.ParameterError(
            f"m={self.m} breaks the cross-model edge count {expected} "
            f"for n={self.n}, S={self.s}")

  def _expect_unset(self, *names: str):
    for name in names:
      if getattr(self, name) is not None:
        raise errors.ParameterError(
            f"{name} does not apply to {self.model.value} specs")

  @classmethod
  def random(cls, n: int, s: int) -> "ModelSpec":
    return cls(Model.RANDOM, n, edge_budget.scale_free_edge_count(n, s), s=s)

  @classmethod
  def scale_free(cls, n: int, s: int, alpha: float) -> "ModelSpec":
    return cls(Model.SCALE_FREE,
               n,
               edge_budget.scale_free_edge_count(n, s),
               s=s,
               alpha=float(alpha))

  @classmethod
  def small_world(cls, n: int, s: int, p: float) -> "ModelSpec":
    return cls(Model.SMALL_WORLD,
               n,
               edge_budget.scale_free_edge_count(n, s),
               s=s,
               nei=s,
               p=float(p))

  @property
  def parameter(self) -> Optional[float]:
    """The swept model parameter: alpha, p, or None for random graphs."""
    if self.model is Model.SCALE_FREE:
      return self.alpha
    if self.model is Model.SMALL_WORLD:
      return self.p
    return None

  def sort_key(self) -> tuple:
    return (MODEL_ORDER.index(self.model), self.n,
            -1 if self.s is None else self.s,
            -1.0 if self.alpha is None else self.alpha,
            -1.0 if self.p is None else self.p)

  def param_label(self) -> str:
    parameter = self.parameter
    if parameter is None:
      return ""
    name = "alpha" if self.model is Model.SCALE_FREE else "p"
    return f"{name}={parameter:g}"

  def series_key(self) -> str:
    """Legend label, e.g. "scale_free alpha=2.5"."""
    return f"{self.model.value} {self.param_label()}".strip()

  def stream_labels(self) -> list:
    parameter = self.parameter
    return [
        self.model.value, self.n, 0 if self.s is None else self.s,
        "" if parameter is None else repr(float(parameter))
    ]

  def __str__(self) -> str:
    fields = [f"n={self.n}", f"m={self.m}"]
    if self.s is not None:
      fields.append(f"S={self.s}")
    if self.param_label():
      fields.append(self.param_label())
    return f"{self.model.value}({', '.join(fields)})"
