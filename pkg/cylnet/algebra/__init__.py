from .expressions import (parse_expr, parse_tpoly)
from .matrices import (RingMatrix, berkowitz, charpoly, det_division_free, minors)
from .mpoly import (MPoly, as_fraction)
from .tpoly import (TPoly, T_VARIABLE)

__all__ = ['MPoly', 'RingMatrix', 'TPoly', 'T_VARIABLE', 'as_fraction', 'berkowitz',
           'charpoly', 'det_division_free', 'minors', 'parse_expr', 'parse_tpoly']
