"""Desk-scale caps.  Exceeding one raises :class:`~invorder.errors.CapExceeded`."""

from dataclasses import dataclass


@dataclass
class Limits:
    relation_universe: int = 16  # relations read from user input
    linear_extension_universe: int = 7
    group_order: int = 4096
    powerset_base: int = 5
    intersection_universe: int = 6
    sim_oracle_group: int = 64
    sequence_oracle_group: int = 6
    sequence_oracle_length: int = 6
    preorder_oracle_universe: int = 5
    lattice_dim: int = 6
    lattice_gens: int = 12
    monoid_search_nodes: int = 2_000_000


LIMITS = Limits()
