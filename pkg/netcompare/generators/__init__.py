"""Random, scale-free and small-world generators with matched edge counts."""

from netcompare.generators.edge_budget import deletion_count
from netcompare.generators.edge_budget import make_edge_budget
from netcompare.generators.edge_budget import EdgeBudget
from netcompare.generators.edge_budget import lattice_edge_count
from netcompare.generators.edge_budget import scale_free_edge_count
from netcompare.generators.config import Model
from netcompare.generators.config import ModelSpec
from netcompare.generators.random_graph import generate_random_gnm
from netcompare.generators.scale_free import generate_scale_free
from netcompare.generators.small_world import delete_random_edges
from netcompare.generators.small_world import generate_ring_lattice
from netcompare.generators.small_world import generate_small_world
from netcompare.generators.small_world import rewire_edges
from netcompare.generators.builder import build_graph
