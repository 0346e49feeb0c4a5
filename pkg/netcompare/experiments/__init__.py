"""Parameter sweeps over the three network models."""

from netcompare.experiments.config import dump_sweep_config
from netcompare.experiments.config import load_sweep_config
from netcompare.experiments.config import parse_sweep_config
from netcompare.experiments.config import SweepConfig
from netcompare.experiments.run_sweep import aggregate
from netcompare.experiments.run_sweep import aggregate_all
from netcompare.experiments.run_sweep import audit_edge_identity
from netcompare.experiments.run_sweep import build_design
from netcompare.experiments.run_sweep import count_edges
from netcompare.experiments.run_sweep import EdgeCount
from netcompare.experiments.run_sweep import EdgeMismatch
from netcompare.experiments.run_sweep import execute_sweep
from netcompare.experiments.run_sweep import run_sample
from netcompare.experiments.run_sweep import sample_stream
from netcompare.experiments.run_sweep import verify_edge_identity
