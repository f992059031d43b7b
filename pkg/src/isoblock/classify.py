"""Type 1 / Type 2 classification of simple groups, and Euler-number bounds.

The classification is a literal lookup: every row carries its parameter
constraints, and parameters outside them raise ``OutOfTable`` rather than
guessing (low-rank isomorphisms such as SU(1,1) = SL(2,R) make
extrapolation unsafe; known aliases are reported as notes instead).

``milnor_wood_bound`` is the flat-bundle Euler-number bound over a
product of k hyperbolic planes, |eu(TM)| / 2^k, exact.  ``smillie_ratio``
is the corresponding coefficient over a hyperbolic 2k-manifold,
pi^k / (2^k (2k-1)!! v_{2k}), with the ideal-simplex volume v_{2k}
supplied by the caller for k >= 2 (v_2 = pi is built in).
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import IllegalParameter, NonPositiveVolume, OutOfTable

TYPE1 = "Type1"
TYPE2 = "Type2"


@dataclass(frozen=True)
class GroupDescriptor:
    kind: str
    params: tuple[int, ...] = ()

    def __str__(self) -> str:
        if self.kind == "SU_pq":
            return f"SU({self.params[0]},{self.params[1]})"
        if self.kind == "SP_2n_R":
            return f"SP({self.params[0]},R)"
        if self.kind == "SO_pq":
            return f"SO({self.params[0]},{self.params[1]})"
        if self.kind == "SP_pq":
            return f"SP({self.params[0]},{self.params[1]})"
        if self.kind == "SO_star":
            return f"SO*({self.params[0]})"
        if self.kind == "SL_n_R":
            return f"SL({self.params[0]},R)"
        if self.kind == "SO_n1":
            return f"SO({self.params[0]},1)"
        if self.kind == "SU_star":
            return f"SU*({self.params[0]})"
        if self.kind == "SL_n_C":
            return f"SL({self.params[0]},C)"
        if self.kind == "SO_n_C":
            return f"SO({self.params[0]},C)"
        if self.kind == "SP_2n_C":
            return f"SP({self.params[0]},C)"
        return self.kind  # exceptional forms carry their own name


_EXCEPTIONAL_T1 = (
    "G2(2)",
    "F4(4)",
    "F4(-20)",
    "E6(6)",
    "E6(2)",
    "E6(-14)",
    "E7(7)",
    "E7(-5)",
    "E7(-25)",
    "E8(8)",
)
_EXCEPTIONAL_T2 = ("E6(-26)", "G2(C)", "F4(C)", "E6(C)", "E7(C)", "E8(C)")


def parse_group(name: str) -> GroupDescriptor:
    s = name.strip().replace(" ", "")
    su = re.fullmatch(r"SU\((\d+),(\d+)\)", s)
    if su:
        return GroupDescriptor("SU_pq", (int(su.group(1)), int(su.group(2))))
    m = re.fullmatch(r"SU\*\((\d+)\)", s)
    if m:
        return GroupDescriptor("SU_star", (int(m.group(1)),))
    m = re.fullmatch(r"SP\((\d+),([Rr]|ℝ)\)", s)
    if m:
        return GroupDescriptor("SP_2n_R", (int(m.group(1)),))
    m = re.fullmatch(r"SP\((\d+),([Cc]|ℂ)\)", s)
    if m:
        return GroupDescriptor("SP_2n_C", (int(m.group(1)),))
    m = re.fullmatch(r"SP\((\d+),(\d+)\)", s)
    if m:
        return GroupDescriptor("SP_pq", (int(m.group(1)), int(m.group(2))))
    m = re.fullmatch(r"SO\*\((\d+)\)", s)
    if m:
        return GroupDescriptor("SO_star", (int(m.group(1)),))
    m = re.fullmatch(r"SO\((\d+),([Rr]|ℝ)\)", s)
    if m:
        raise OutOfTable(f"{name}: the table classifies SO(p,q), SO(n,1) and SO(n,C) forms")
    m = re.fullmatch(r"SO\((\d+),([Cc]|ℂ)\)", s)
    if m:
        return GroupDescriptor("SO_n_C", (int(m.group(1)),))
    m = re.fullmatch(r"SO\((\d+),1\)", s)
    if m:
        return GroupDescriptor("SO_n1", (int(m.group(1)),))
    m = re.fullmatch(r"SO\((\d+),(\d+)\)", s)
    if m:
        return GroupDescriptor("SO_pq", (int(m.group(1)), int(m.group(2))))
    m = re.fullmatch(r"SL\((\d+),([Rr]|ℝ)\)", s)
    if m:
        return GroupDescriptor("SL_n_R", (int(m.group(1)),))
    m = re.fullmatch(r"SL\((\d+),([Cc]|ℂ)\)", s)
    if m:
        return GroupDescriptor("SL_n_C", (int(m.group(1)),))
    canon = s.upper().replace("ℂ", "C")
    for known in _EXCEPTIONAL_T1 + _EXCEPTIONAL_T2:
        if canon == known.upper():
            return GroupDescriptor(known)
    raise IllegalParameter(f"cannot parse group name {name!r}")


def lookup_type(g: GroupDescriptor | str) -> tuple[str, list[str]]:
    """Table row for a simple group: 'Type1' or 'Type2', plus notes.

    Raises OutOfTable for parameters the table excludes.
    """
    if isinstance(g, str):
        g = parse_group(g)
    notes: list[str] = []
    kind, p = g.kind, g.params
    if kind == "SU_pq":
        if p[0] >= 1 and p[1] >= 1 and p[0] + p[1] >= 2:
            if sorted(p) == [1, 1]:
                notes.append("SU(1,1) is isomorphic to SL(2,R); the table lists it in Type 1")
            return TYPE1, notes
        raise OutOfTable(f"{g}: needs p,q >= 1 and p+q >= 2")
    if kind == "SP_2n_R":
        m = p[0]
        if m % 2 == 0 and m >= 4:
            return TYPE1, notes
        if m == 2:
            raise OutOfTable("SP(2,R): excluded (isomorphic to SL(2,R))")
        raise OutOfTable(f"{g}: needs even parameter 2n with n >= 2")
    if kind == "SO_pq":
        pq = tuple(sorted(p))
        if pq[0] >= 2 and pq not in ((2, 2), (3, 3)):
            return TYPE1, notes
        if pq in ((2, 2), (3, 3)):
            raise OutOfTable(f"{g}: excluded from the table (non-simple or low-rank isomorphism)")
        if pq[0] == 1 and pq[1] >= 2:
            notes.append(f"{g} read as SO({pq[1]},1)")
            return TYPE2, notes
        raise OutOfTable(f"{g}: needs p,q >= 2")
    if kind == "SP_pq":
        if p[0] >= 1 and p[1] >= 1:
            return TYPE1, notes
        raise OutOfTable(f"{g}: needs p,q >= 1")
    if kind == "SO_star":
        m = p[0]
        if m % 2 == 0 and m >= 6:
            return TYPE1, notes
        raise OutOfTable(f"{g}: needs even parameter 2n with n >= 3")
    if kind in _EXCEPTIONAL_T1 or (not p and kind in _EXCEPTIONAL_T1):
        return TYPE1, notes
    if kind == "SL_n_R":
        if p[0] >= 2:
            return TYPE2, notes
        raise OutOfTable(f"{g}: needs n >= 2")
    if kind == "SO_n1":
        if p[0] >= 2:
            return TYPE2, notes
        raise OutOfTable(f"{g}: needs n >= 2")
    if kind == "SU_star":
        m = p[0]
        if m % 2 == 0 and m >= 4:
            return TYPE2, notes
        raise OutOfTable(f"{g}: needs even parameter 2n with n >= 2")
    if kind == "SL_n_C":
        if p[0] >= 2:
            return TYPE2, notes
        raise OutOfTable(f"{g}: needs n >= 2")
    if kind == "SO_n_C":
        if p[0] >= 2:
            return TYPE2, notes
        raise OutOfTable(f"{g}: needs n >= 2")
    if kind == "SP_2n_C":
        m = p[0]
        if m % 2 == 0 and m >= 4:
            return TYPE2, notes
        raise OutOfTable(f"{g}: needs even parameter 2n with n >= 2")
    if kind in _EXCEPTIONAL_T2:
        return TYPE2, notes
    raise OutOfTable(f"{g}: not a table row")


def product_type(factors: list[GroupDescriptor | str]) -> str:
    """Type of a product of simple factors: Type1 iff some factor is Type1."""
    if not factors:
        raise IllegalParameter("empty product has no type")
    types = [lookup_type(f)[0] for f in factors]
    return TYPE1 if TYPE1 in types else TYPE2


@dataclass(frozen=True)
class MilnorWoodQuery:
    k: int
    euler_tm: int

    def __post_init__(self):
        if self.k < 1:
            raise IllegalParameter("k must be a positive integer")


def milnor_wood_bound(q: MilnorWoodQuery) -> Fraction:
    """|eu(TM)| / 2^k: maximal |Euler number| of a flat bundle over a
    product of k hyperbolic surfaces."""
    return Fraction(abs(q.euler_tm), 2**q.k)


def obstructs_flat(q: MilnorWoodQuery, euler_e: int) -> bool:
    return abs(euler_e) > milnor_wood_bound(q)


def double_factorial_odd(k: int) -> int:
    """(2k-1)!! = product of the first k odd numbers."""
    out = 1
    for i in range(1, k + 1):
        out *= 2 * i - 1
    return out


def smillie_ratio(k: int, v_2k: float | None = None) -> float:
    """pi^k / (2^k (2k-1)!! v_2k); the Euler-bound coefficient over a
    hyperbolic 2k-manifold.  v_2 = pi is built in; larger k need the
    regular ideal simplex volume from the caller."""
    if k < 1:
        raise IllegalParameter("k must be a positive integer")
    if v_2k is None:
        if k != 1:
            raise IllegalParameter("v_2k must be supplied for k >= 2")
        v_2k = math.pi
    if not v_2k > 0:
        raise NonPositiveVolume(f"v_2k must be positive, got {v_2k}")
    return math.pi**k / (2**k * double_factorial_odd(k) * v_2k)


# Three sample parameter sets per table row, used by the verification suite.
TABLE_SAMPLES: list[tuple[str, str]] = [
    ("SU(1,1)", TYPE1),
    ("SU(2,1)", TYPE1),
    ("SU(3,3)", TYPE1),
    ("SP(4,R)", TYPE1),
    ("SP(6,R)", TYPE1),
    ("SP(10,R)", TYPE1),
    ("SO(2,3)", TYPE1),
    ("SO(3,4)", TYPE1),
    ("SO(5,5)", TYPE1),
    ("SP(1,1)", TYPE1),
    ("SP(2,3)", TYPE1),
    ("SP(4,4)", TYPE1),
    ("SO*(6)", TYPE1),
    ("SO*(8)", TYPE1),
    ("SO*(12)", TYPE1),
    ("G2(2)", TYPE1),
    ("F4(4)", TYPE1),
    ("F4(-20)", TYPE1),
    ("E6(6)", TYPE1),
    ("E6(2)", TYPE1),
    ("E6(-14)", TYPE1),
    ("E7(7)", TYPE1),
    ("E7(-5)", TYPE1),
    ("E7(-25)", TYPE1),
    ("E8(8)", TYPE1),
    ("SL(2,R)", TYPE2),
    ("SL(4,R)", TYPE2),
    ("SL(7,R)", TYPE2),
    ("SO(2,1)", TYPE2),
    ("SO(5,1)", TYPE2),
    ("SO(9,1)", TYPE2),
    ("SU*(4)", TYPE2),
    ("SU*(6)", TYPE2),
    ("SU*(10)", TYPE2),
    ("E6(-26)", TYPE2),
    ("SL(2,C)", TYPE2),
    ("SL(3,C)", TYPE2),
    ("SL(8,C)", TYPE2),
    ("SO(2,C)", TYPE2),
    ("SO(7,C)", TYPE2),
    ("SO(10,C)", TYPE2),
    ("SP(4,C)", TYPE2),
    ("SP(6,C)", TYPE2),
    ("SP(10,C)", TYPE2),
    ("G2(C)", TYPE2),
    ("F4(C)", TYPE2),
    ("E6(C)", TYPE2),
    ("E7(C)", TYPE2),
    ("E8(C)", TYPE2),
]

OUT_OF_TABLE_SAMPLES = ["SO(2,2)", "SO(3,3)", "SP(2,R)", "SO*(4)", "SL(1,R)", "SU*(3)", "SP(2,C)"]
