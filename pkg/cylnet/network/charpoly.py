"""
Characteristic polynomial ``Q_N`` of a network, computed three ways:

* from the families of disjoint simple cycles,
* from the transfer matrix, ``Q_N(t) = t^d det(Id - B(1/t))``,
* from the local form, ``charpoly(S)`` without its ``t`` power.

With ``d`` the largest winding of a family::

    Q_N(t) = sum_F (-1)^r(F) t^(d - wind(F)) wt(F)

which is monic; for planar networks ``wind(F) = r(F)`` and
``Q_N = sum_r (-1)^r t^(d - r) H_r`` with ``H_r`` the sum of the weights
of the families of ``r`` cycles.
"""

__all__ = ['family_sums', 'q_n_cycles', 'q_n_det', 'q_n_local']

from .cycles import cycle_families
from .localization import localize
from .quotient import (QuotientNetwork, transfer_matrix)
from cylnet.algebra import (MPoly, RingMatrix, TPoly, charpoly, det_division_free)
from cylnet.common import (CycleFamily, PlanarityViolation)
from typing import List, Sequence

import logging

# Starting logger
logger = logging.getLogger(__name__)


def q_n_cycles(net: QuotientNetwork, families: Sequence[CycleFamily] = None) -> TPoly:
    """
    ``Q_N`` from the cycle families.
    Powers of ``t`` left by cancelling families of the largest windings
    are removed, as in :func:`q_n_det`.

    :raises PlanarityViolation: a declared planar network has a family
        whose winding differs from its number of cycles
    """
    if families is None:
        families = cycle_families(net)
    if net.planar_declared:
        for family in families:
            if family.winding != family.r:
                raise PlanarityViolation(
                    f"family of {family.r} cycles winds {family.winding} times",
                    family.cycles)
    d = max(f.winding for f in families)
    coeffs = {}
    for family in families:
        k = d - family.winding
        term = family.weight if family.r % 2 == 0 else -family.weight
        coeffs[k] = coeffs.get(k, MPoly()) + term
    q = TPoly(coeffs)
    if q.low_degree != 0:
        # families of the largest windings cancel
        logger.info(f"cycle families give a factor t^{q.low_degree}, stripped")
        q = q.strip_t_power()
    return q


def q_n_det(net: QuotientNetwork) -> TPoly:
    """``Q_N`` as the reciprocal of ``det(Id - B(t))``"""
    b = transfer_matrix(net)
    q_l = det_division_free(RingMatrix.identity(len(net.vertices), TPoly) - b)
    if not q_l:
        raise ValueError("det(Id - B(t)) vanishes identically")
    if q_l.low_degree != 0:
        logger.warning(f"det(Id - B(t)) has lowest power t^{q_l.low_degree}, stripped")
        q_l = q_l.strip_t_power()
    return q_l.reciprocal()


def q_n_local(net: QuotientNetwork) -> TPoly:
    """``Q_N`` as ``charpoly(S)`` of the local form, ``t`` powers removed"""
    form = localize(net)
    return charpoly(form.S).strip_t_power()


def family_sums(q_n: TPoly) -> List[MPoly]:
    """``[H_0, ..., H_d]`` from ``Q_N = sum (-1)^r t^(d - r) H_r``"""
    d = q_n.degree
    return [q_n[d - r] if r % 2 == 0 else -q_n[d - r] for r in range(d + 1)]
