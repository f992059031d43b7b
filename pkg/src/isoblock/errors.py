"""Exception taxonomy shared by all modules.

Every error raised by the engine is an ``IsoblockError``; the service layer
maps them to structured JSON errors and the CLI maps them to exit codes.
"""


class IsoblockError(Exception):
    """Base class; ``code`` is the stable machine-readable identifier."""

    code = "error"


class IllegalType(IsoblockError):
    code = "illegal_type"


class IllegalParameter(IsoblockError):
    code = "illegal_parameter"


class BasisMismatch(IsoblockError):
    code = "basis_mismatch"


class NotDominant(IsoblockError):
    code = "not_dominant"


class OrbitTooLarge(IsoblockError):
    code = "orbit_too_large"


class CapExceeded(IsoblockError):
    code = "cap_exceeded"


class NoRestrictionMap(IsoblockError):
    code = "no_restriction_map"


class NoWeightModel(IsoblockError):
    code = "no_weight_model"


class NotAWeightOf(IsoblockError):
    code = "not_a_weight_of"


class CountMismatch(IsoblockError):
    code = "count_mismatch"


class NonPositiveVolume(IsoblockError):
    code = "non_positive_volume"


class OutOfTable(IsoblockError):
    code = "out_of_table"


class ConsistencyFault(IsoblockError):
    """Two routes that must agree disagreed; indicates an engine bug."""

    code = "consistency_fault"
