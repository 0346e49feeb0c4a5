"""Seeded random streams.

Every stochastic choice in netcompare draws from an `RngStream`. A stream is a
numpy `PCG64` generator seeded through a `SeedSequence` built from a 64-bit
base seed and a sequence of labels, so streams are reproducible across runs
and platforms and independent streams can be derived without sharing state.
"""

from collections.abc import Sequence
import hashlib
from typing import Optional, Union

import numpy as np

Label = Union[int, str]

_MASK64 = (1 << 64) - 1


def _label_word(label: Label) -> int:
  """Maps a label to a 64-bit spawn-key word; "1" and 1 map differently."""
  if isinstance(label, (bool, np.bool_)):
    raise TypeError(f"labels must be int or str, got {label!r}")
  if isinstance(label, (int, np.integer)):
    tagged = f"i:{int(label)}"
  elif isinstance(label, str):
    tagged = f"s:{label}"
  else:
    raise TypeError(f"labels must be int or str, got {type(label).__name__}")
  digest = hashlib.blake2b(tagged.encode("utf-8"), digest_size=8).digest()
  return int.from_bytes(digest, "little")


class RngStream:
  """Single-owner deterministic random stream."""

  def __init__(self, base_seed: int, labels: Sequence[Label] = ()):
    self._base_seed = int(base_seed) & _MASK64
    self._labels = tuple(labels)
    self._seed_sequence = np.random.SeedSequence(
        entropy=self._base_seed,
        spawn_key=tuple(_label_word(label) for label in self._labels))
    self._generator = np.random.Generator(np.random.PCG64(self._seed_sequence))

  @property
  def labels(self) -> tuple[Label, ...]:
    return self._labels

  @property
  def seed(self) -> int:
    """64-bit word determined by (base seed, labels).

    Label-free streams return their base seed, so `derive_stream(s.seed)`
    replays `s` from the start. Labelled streams hash their seed sequence down
    to one word, which callers use to start a fresh label-free stream.
    """
    if not self._labels:
      return self._base_seed
    return int(self._seed_sequence.generate_state(1, dtype=np.uint64)[0])

  @property
  def generator(self) -> np.random.Generator:
    return self._generator

  def child(self, *labels: Label) -> "RngStream":
    return RngStream(self._base_seed, self._labels + labels)

  def random(self, size: Optional[int] = None):
    return self._generator.random(size)

  def integers(self, low: int, high: Optional[int] = None, size=None):
    return self._generator.integers(low, high, size=size)

  def choice(self, a, size=None, replace: bool = True, p=None):
    return self._generator.choice(a, size=size, replace=replace, p=p)


def derive_stream(base_seed: int, labels: Sequence[Label] = ()) -> RngStream:
  """Returns the stream for (base_seed, labels)."""
  return RngStream(base_seed, labels)
