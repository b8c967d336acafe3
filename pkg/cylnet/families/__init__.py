from .domino import (
    DominoQuery, all_horizontal_tiling, aztec_region, build_domino,
    count_tilings_permanent, domino_endpoints, domino_oracle, domino_partition_function,
    domino_tilings, domino_vertex, family_to_cylinder_tiling, query_region,
    reference_path_weight, tiling_to_rpath, tiling_weight)
from .lozenge import (
    LozengeQuery, build_lozenge, carlitz, lozenge_endpoints_and_beta, lozenge_identity,
    lozenge_recurrence, lozenge_shape, reverse_plane_partitions, rpp_oracle,
    rpp_to_rpath)
from .schur import (build_schur, complete_homogeneous, schur_endpoints, schur_oracle,
                    schur_vertex)

__all__ = ['DominoQuery', 'LozengeQuery', 'all_horizontal_tiling', 'aztec_region',
           'build_domino', 'build_lozenge', 'build_schur', 'carlitz',
           'complete_homogeneous', 'count_tilings_permanent', 'domino_endpoints',
           'domino_oracle', 'domino_partition_function', 'domino_tilings',
           'domino_vertex', 'family_to_cylinder_tiling', 'lozenge_endpoints_and_beta',
           'lozenge_identity', 'lozenge_recurrence', 'lozenge_shape', 'query_region',
           'reference_path_weight', 'reverse_plane_partitions', 'rpp_oracle',
           'rpp_to_rpath', 'schur_endpoints', 'schur_oracle', 'schur_vertex',
           'tiling_to_rpath', 'tiling_weight']
