from .cover import (count_paths, enumerate_paths, parse_r_vertex, path_weight,
                    shift_r_vertex)
from .lgv import (disjoint, enumerate_r_paths, lgv_determinant, lgv_matrix,
                  lgv_sequence)

__all__ = ['count_paths', 'disjoint', 'enumerate_paths', 'enumerate_r_paths',
           'lgv_determinant', 'lgv_matrix', 'lgv_sequence', 'parse_r_vertex',
           'path_weight', 'shift_r_vertex']
