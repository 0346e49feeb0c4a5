"""Builds the graph described by a `ModelSpec`."""

from netcompare import graph as graph_lib
from netcompare import rng as rng_lib
from netcompare.generators import config
from netcompare.generators import random_graph
from netcompare.generators import scale_free
from netcompare.generators import small_world


def build_graph(spec: config.ModelSpec,
                rng: rng_lib.RngStream) -> graph_lib.Graph:
  if spec.model is config.Model.RANDOM:
    return random_graph.generate_random_gnm(spec.n, spec.m, rng)
  if spec.model is config.Model.SCALE_FREE:
    return scale_free.generate_scale_free(spec.n, spec.s, spec.alpha, rng)
  if spec.model is config.Model.SMALL_WORLD:
    return small_world.generate_small_world(spec.n, spec.nei, spec.s, spec.p,
                                            rng)
  raise ValueError(f"Unknown model {spec.model}")
