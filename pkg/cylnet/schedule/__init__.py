from .components import (parallel_map, threads_from_env)

__all__ = ['parallel_map', 'threads_from_env']
