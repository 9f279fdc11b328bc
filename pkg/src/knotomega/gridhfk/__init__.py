"""Grid-diagram knot Floer homology and the combinatorial transverse invariant."""

from .diagram import (GridDiagram, GridState, commute_columns, commute_rows,
                      cyclic_columns, cyclic_rows, destabilize, stabilize,
                      unknot_grid)
from .homology import (DEFAULT_MAX_SIZE, BigradedRanks, deconvolve,
                       differential_tilde, euler_determinant,
                       euler_from_states, homology)
from .transverse import CycleClass, boundary_of_chain, is_nonzero_class, transverse_state

#: Reference table, not computed here: the hat-flavor link Floer homology of
#: the two-fiber link in S^1 x S^2 has total rank 4, with one generator in
#: bigrading (1,-1), two in (0,0), and one in (-1,1).  Recorded because the
#: rim-surgery gluing argument consumes it; its Heegaard diagram is
#: figure-bound and out of scope for computation.
TWO_FIBER_LINK_HFL_RANKS = {(1, -1): 1, (0, 0): 2, (-1, 1): 1}

__all__ = [
    "BigradedRanks", "CycleClass", "DEFAULT_MAX_SIZE", "GridDiagram",
    "GridState", "TWO_FIBER_LINK_HFL_RANKS", "boundary_of_chain",
    "commute_columns", "commute_rows", "cyclic_columns", "cyclic_rows",
    "deconvolve", "destabilize", "differential_tilde", "euler_determinant",
    "euler_from_states", "homology", "is_nonzero_class", "stabilize",
    "transverse_state", "unknot_grid",
]
