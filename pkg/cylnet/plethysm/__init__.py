from .compound import (basis_exterior, basis_symmetric, companion, exterior_power,
                       symmetric_power)
from .plethysm import (conjugate, psi_schur, q_plee, q_pleh, rescale)

__all__ = ['basis_exterior', 'basis_symmetric', 'companion', 'conjugate',
           'exterior_power', 'psi_schur', 'q_plee', 'q_pleh', 'rescale',
           'symmetric_power']
