from .charpoly import (family_sums, q_n_cycles, q_n_det, q_n_local)
from .cycles import (cycle_families, planar_sanity, simple_cycles)
from .localization import (LocalForm, local_counts, localize, relabel)
from .quotient import (
    QuotientNetwork, build_network, network_to_dict, offset_digraph, specialize,
    transfer_matrix)

__all__ = ['LocalForm', 'QuotientNetwork', 'build_network', 'cycle_families',
           'family_sums', 'local_counts', 'localize', 'network_to_dict',
           'offset_digraph', 'planar_sanity', 'q_n_cycles', 'q_n_det', 'q_n_local',
           'relabel', 'simple_cycles', 'specialize', 'transfer_matrix']
