from .algebra import (MPoly, RingMatrix, TPoly, charpoly, parse_expr, parse_tpoly)

from .analysis import (
    annihilates, check_minimality, check_plee_general, check_polya, check_real_roots,
    check_total_positivity, estimate_minimal, minimal_recurrence)

from .network import (
    QuotientNetwork, build_network, cycle_families, family_sums, localize, q_n_cycles,
    q_n_det, q_n_local, simple_cycles)

from .paths import (count_paths, enumerate_r_paths, lgv_determinant, lgv_matrix,
                    lgv_sequence)

from .plethysm import (exterior_power, psi_schur, q_plee, q_pleh, symmetric_power)

__all__ = [
    'MPoly', 'QuotientNetwork', 'RingMatrix', 'TPoly', 'annihilates', 'build_network',
    'charpoly', 'check_minimality', 'check_plee_general', 'check_polya',
    'check_real_roots', 'check_total_positivity', 'count_paths', 'cycle_families',
    'enumerate_r_paths', 'estimate_minimal', 'exterior_power', 'family_sums',
    'lgv_determinant', 'lgv_matrix', 'lgv_sequence', 'localize', 'minimal_recurrence',
    'parse_expr', 'parse_tpoly', 'psi_schur', 'q_n_cycles', 'q_n_det', 'q_n_local',
    'q_plee', 'q_pleh', 'simple_cycles', 'symmetric_power']
