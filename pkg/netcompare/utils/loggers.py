"""Sweep progress loggers built on the Acme logger stack."""

from collections.abc import Mapping
from typing import Any, Callable, Optional

from absl import logging
from acme.utils.loggers import aggregators
from acme.utils.loggers import base
from acme.utils.loggers import filters
from acme.utils.loggers import terminal
import numpy as np

try:
  import wandb
except ImportError:
  wandb = None


def make_default_logger(
    label: str,
    use_wandb: bool = False,
    wandb_config: Optional[Mapping[str, Any]] = None,
    time_delta: float = 1.0,
    print_fn: Optional[Callable[[str], None]] = None,
    serialize_fn: Optional[Callable[[Mapping[str, Any]],
                                    Any]] = base.to_numpy,
) -> base.Logger:
  """Makes the default sweep progress logger.

    Args:
      label: Name to give to the logger.
      use_wandb: Whether to mirror progress rows to a wandb run.
      wandb_config: Keyword arguments for `WandbLogger`.
      time_delta: Time (in seconds) between progress rows.
      print_fn: How to print to terminal (defaults to absl logging.info).
      serialize_fn: An optional function to apply to the rows before passing
        them to the various loggers.

    Returns:
      A logger object that responds to logger.write(some_dict).
    """
  if not print_fn:
    print_fn = logging.info
  loggers = [terminal.TerminalLogger(label=label, print_fn=print_fn)]
  if use_wandb:
    loggers.append(WandbLogger(label=label, **(wandb_config or {})))

  logger = aggregators.Dispatcher(loggers, serialize_fn)
  logger = filters.NoneFilter(logger)
  return CompletionFilter(filters.TimeFilter(logger, time_delta), logger)


class CompletionFilter(base.Logger):
  """Rate-limits progress rows except the one that completes the sweep."""

  def __init__(self, throttled: base.Logger, unthrottled: base.Logger):
    """Initializes the logger.

        Args:
          throttled: Logger that receives every intermediate row, usually a
            `TimeFilter`.
          unthrottled: Logger underneath `throttled` that receives the row
            whose `completed` count reaches `total`.
        """
    self._throttled = throttled
    self._unthrottled = unthrottled

  def write(self, values: base.LoggingData):
    completed = values.get("completed")
    if completed is not None and completed == values.get("total"):
      self._unthrottled.write(values)
    else:
      self._throttled.write(values)

  def close(self):
    self._throttled.close()


class WandbLogger(base.Logger):
  """Mirrors numeric sweep progress into a Weights & Biases run."""

  def __init__(
      self,
      label: Optional[str] = None,
      *,
      project: Optional[str] = None,
      entity: Optional[str] = None,
      name: Optional[str] = None,
      group: Optional[str] = None,
      config: Optional[Any] = None,
      **wandb_kwargs,
  ):
    if wandb is None:
      raise ImportError(
          "Sweep progress cannot go to wandb: the optional `wandb` package is "
          "missing. Install it with `pip install wandb` or drop --use_wandb.")
    self._label = label
    if wandb.run is None:
      self._run = wandb.init(
          project=project,
          entity=entity,
          name=name,
          group=group,
          config=config,
          reinit=True,
          **wandb_kwargs,
      )
    else:
      self._run = wandb.run

  @property
  def run(self):
    return self._run

  def write(self, data: base.LoggingData):
    # Spec labels and other text stay in the terminal log.
    numeric = {
        k: v
        for k, v in base.to_numpy(data).items()
        if isinstance(v, (int, float, np.number)) and not isinstance(v, bool)
    }
    if self._label:
      numeric = {f"{self._label}/{k}": v for k, v in numeric.items()}
    self._run.log(numeric)

  def close(self):
    wandb.finish()
