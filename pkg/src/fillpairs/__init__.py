"""Coherent minimally intersecting filling pairs on closed surfaces, via [1,1]-origamis."""

from .census import (
    CensusResult,
    count_ordered,
    enumerate_brute,
    enumerate_constructive,
    genus2_census,
    verify_one,
)
from .origami import (
    Origami,
    PairClass,
    canonical_form,
    is_coherent_minimal_pair,
    orbit_size,
    symmetry_orbit,
    vertex_orbits,
)
from .perms import Perm, PermutationError, parse_cycle, parse_cycles

__version__ = "0.1.0"
