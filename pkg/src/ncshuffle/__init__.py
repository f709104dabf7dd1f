"""Exact shuffle-algebra engine for non-commutative cumulants and convolutions."""
from .combinatorics import MonotonePartition, NoncrossingPartition, enumerate_partitions
from .convolutions import (additive_convolve, belinschi_nica, cfree_convolve, cmonotone_convolve,
                           cmonotone_power, orthogonal, subordination)
from .cumulants import (CumulantFamily, PairState, cfree_cumulants, cmonotone_cumulants, cumulants_of,
                        moments_from, t_boolean, t_monotone)
from .shuffle import (Functional, conv_inverse, convolve, counit, exp_map, half_shuffle, log_map,
                      moments_character, pre_lie, sequence)

__version__ = "0.1.0"
