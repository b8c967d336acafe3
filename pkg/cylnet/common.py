__all__ = ['DEFAULTS', 'BadRank', 'CycleFamily', 'DictConfig', 'DivByZero',
           'EdgeRecord', 'EnumerationLimit', 'Inconclusive', 'LiftedVertex',
           'NonPositiveWinding', 'NotDivisible', 'NotLocal', 'NotNilpotent',
           'ParseError', 'PlanarityViolation', 'RecurrenceReport',
           'SequenceF', 'SimpleCycle', 'SizeLimit', 'TheoremViolation',
           'UnknownVertex', 'Unstable', 'Untileable', 'WindowOverflow']


from collections import namedtuple


class DictConfig(dict):

    def __getattr__(self, attr):
        return self.get(attr)

    def __setattr__(self, key, value):
        self.__setitem__(key, value)

    def __deepcopy__(self, _):
        return DictConfig(self.copy())


# Named Tuples
EdgeRecord = namedtuple("EdgeRecord", ("tail", "head", "offset", "weight"))
LiftedVertex = namedtuple("LiftedVertex", ("base", "shift"))
SimpleCycle = namedtuple("SimpleCycle", ("vertices", "edges", "winding", "weight"))
CycleFamily = namedtuple("CycleFamily", ("cycles", "r", "winding", "weight"))
SequenceF = namedtuple("SequenceF", ("values", "meta"))
RecurrenceReport = namedtuple(
    "RecurrenceReport", ("holds", "first_valid_index", "residuals"))

# ================> Tunables <================
DEFAULTS = DictConfig(
    max_cycles=10 ** 4,
    max_families=10 ** 6,
    max_window=64,
    enumeration_limit=10 ** 6,
    substitution_range=(2, 97),
    substitution_points=3)


# ================> Exceptions <================
class ParseError(ValueError):
    pass


class UnknownVertex(ValueError):
    pass


class BadRank(ValueError):
    pass


class NotDivisible(RuntimeError):
    pass


class DivByZero(ZeroDivisionError):
    pass


class _CycleError(RuntimeError):
    """Error carrying the cycle (list of vertices or edges) that caused it"""

    def __init__(self, msg: str, cycle=None):
        super().__init__(msg)
        self.cycle = cycle


class NonPositiveWinding(_CycleError):
    pass


class NotLocal(_CycleError):
    pass


class PlanarityViolation(_CycleError):
    pass


class NotNilpotent(RuntimeError):
    pass


class SizeLimit(RuntimeError):
    pass


class WindowOverflow(RuntimeError):
    pass


class EnumerationLimit(RuntimeError):
    pass


class Inconclusive(RuntimeError):
    pass


class Unstable(RuntimeError):
    pass


class TheoremViolation(RuntimeError):
    pass


class Untileable(RuntimeError):
    pass
