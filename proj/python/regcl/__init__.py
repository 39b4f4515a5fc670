"""Regular closed sets of finite closure spaces, permutohedra and related lattices."""

from ._regcl import (
    Lattice,
    RegclError,
    RegLattice,
    Space,
    claim_ids,
    graph_is_lattice,
    verify,
)

__all__ = [
    "Lattice",
    "RegclError",
    "RegLattice",
    "Space",
    "claim_ids",
    "graph_is_lattice",
    "verify",
]
