from .conjectures import (
    ConjectureReport, check_minimality, check_plee_general, check_polya,
    check_real_roots, check_total_positivity, random_endpoints, random_local_network,
    random_network, random_planar_network, random_rational_point, report_to_dict,
    toeplitz_minor)
from .recurrence import (annihilates, berlekamp_massey, estimate_minimal, extend,
                         minimal_recurrence, random_point, rational_poly)

__all__ = ['ConjectureReport', 'annihilates', 'berlekamp_massey', 'check_minimality',
           'check_plee_general', 'check_polya', 'check_real_roots',
           'check_total_positivity', 'estimate_minimal', 'extend', 'minimal_recurrence',
           'random_endpoints', 'random_local_network', 'random_network',
           'random_planar_network', 'random_point', 'random_rational_point',
           'rational_poly', 'report_to_dict', 'toeplitz_minor']
