"""Root systems of the simple Lie algebras in exact rational coordinates.

Conventions
-----------
* Realizations follow the standard coordinate choices: A_n lives in the
  quotient of R^{n+1} by the all-ones vector, B_n/C_n/D_n fill R^n, G_2
  sits in the sum-zero plane of R^3, F_4 in R^4, and E_6/E_7/E_8 in R^8
  (E_6, E_7 as the span of their simple roots).
* A-type weights are stored with last coordinate zero: the quotient by
  L_1 + ... + L_n = 0 is realized by subtracting the last coordinate.
  This keeps integral weights integral.  Roots pair correctly with both
  gauges because the invariant inner product projects onto the sum-zero
  hyperplane first.
* Simple roots are numbered as in Bourbaki; fundamental weights follow
  the same indexing.

All data is exact (``Fraction``), immutable after construction, and
deterministic: the same ``SimpleType`` always yields byte-identical
descriptions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .errors import BasisMismatch, IllegalType
from .linalg import (
    Vec,
    frac_str,
    invert,
    is_zero,
    solve_in_span,
    vadd,
    vdot,
    vec,
    vscale,
    vsub,
    vzero,
)

FAMILIES = ("A", "B", "C", "D", "E", "F", "G")

# (family, rank) -> number of positive roots
_POSITIVE_COUNT = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}

# Degrees of the fundamental Weyl-group invariants; their product is |W|.
WEYL_DEGREES = {
    "A": lambda n: list(range(2, n + 2)),
    "B": lambda n: list(range(2, 2 * n + 1, 2)),
    "C": lambda n: list(range(2, 2 * n + 1, 2)),
    "D": lambda n: list(range(2, 2 * n - 1, 2)) + [n],
    "E": lambda n: {
        6: [2, 5, 6, 8, 9, 12],
        7: [2, 6, 8, 10, 12, 14, 18],
        8: [2, 8, 12, 14, 18, 20, 24, 30],
    }[n],
    "F": lambda n: [2, 6, 8, 12],
    "G": lambda n: [2, 6],
}


def _legal(family: str, rank: int) -> bool:
    return {
        "A": rank >= 1,
        "B": rank >= 2,
        "C": rank >= 2,
        "D": rank >= 3,
        "E": rank in (6, 7, 8),
        "F": rank == 4,
        "G": rank == 2,
    }.get(family, False)


@dataclass(frozen=True)
class SimpleType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES or not isinstance(self.rank, int) or not _legal(self.family, self.rank):
            raise IllegalType(f"illegal simple type {self.family}{self.rank}")

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class Weight:
    """Exact weight vector in a declared basis ('ambient' or 'fundamental')."""

    basis: str
    coords: Vec

    def __str__(self) -> str:
        inner = ",".join(frac_str(c) for c in self.coords)
        return f"{self.basis}({inner})"


def _e(i: int, n: int) -> Vec:
    return tuple(Fraction(int(j == i)) for j in range(n))


def _simple_root_data(st: SimpleType) -> tuple[int, list[Vec], bool, bool]:
    """Return (ambient_dim, simple_roots, a_quotient, restrict_span)."""
    f, n = st.family, st.rank
    if f == "A":
        dim = n + 1
        roots = [vsub(_e(i, dim), _e(i + 1, dim)) for i in range(n)]
        return dim, roots, True, False
    if f in ("B", "C", "D"):
        dim = n
        roots = [vsub(_e(i, dim), _e(i + 1, dim)) for i in range(n - 1)]
        if f == "B":
            roots.append(_e(n - 1, dim))
        elif f == "C":
            roots.append(vscale(Fraction(2), _e(n - 1, dim)))
        else:
            roots.append(vadd(_e(n - 2, dim), _e(n - 1, dim)))
        return dim, roots, False, False
    if f == "G":
        dim = 3
        a1 = vsub(_e(0, dim), _e(1, dim))
        a2 = vec([-2, 1, 1])
        return dim, [a1, a2], False, True
    if f == "F":
        dim = 4
        half = Fraction(1, 2)
        roots = [
            vsub(_e(1, dim), _e(2, dim)),
            vsub(_e(2, dim), _e(3, dim)),
            _e(3, dim),
            (half, -half, -half, -half),
        ]
        return dim, roots, False, False
    # E-family inside R^8
    dim = 8
    half = Fraction(1, 2)
    a1 = (half, -half, -half, -half, -half, -half, -half, half)
    a2 = vadd(_e(0, dim), _e(1, dim))
    chain = [vsub(_e(i + 1, dim), _e(i, dim)) for i in range(6)]  # e2-e1, ..., e7-e6
    roots = [a1, a2] + chain[: n - 2]
    return dim, roots, False, n < 8


class RootSystem:
    """Roots, Cartan data and Weyl data of a (possibly reducible) system.

    Instances for the simple types come from :func:`build_root_system`;
    the general constructor also accepts explicit simple roots, which is
    how the subalgebra systems of the symmetric pairs (including the
    reducible so_4 and the rank-zero so_2) are realized.
    """

    def __init__(
        self,
        simple_roots: list[Vec],
        ambient_dim: int,
        *,
        simple_type: SimpleType | None = None,
        cartan_dim: int | None = None,
        a_quotient: bool = False,
        restrict_span: bool = False,
        label: str | None = None,
    ):
        self.simple_type = simple_type
        self.ambient_dim = ambient_dim
        self.rank = len(simple_roots)
        self.cartan_dim = cartan_dim if cartan_dim is not None else self.rank
        self._a_quotient = a_quotient
        self._restrict_span = restrict_span
        self.label = label or (str(simple_type) if simple_type else f"rank{self.rank}")
        self._simple = tuple(simple_roots)
        self._norms = tuple(self.inner(a, a) for a in self._simple)
        self._coroots = tuple(
            vscale(Fraction(2) / self._norms[i], self._simple[i]) for i in range(self.rank)
        )

        all_roots = self._reflection_closure()
        positive, coeff_by_root = self._split_positive(all_roots)
        self._positive = positive
        self._pos_coeffs = coeff_by_root
        self.cartan_matrix = tuple(
            tuple(int(self.pair_coroot(self._simple[i], j)) for j in range(self.rank))
            for i in range(self.rank)
        )
        for i in range(self.rank):
            if self.cartan_matrix[i][i] != 2:
                raise ConsistencyError("Cartan diagonal must be 2")
            for j in range(self.rank):
                if i != j and self.cartan_matrix[i][j] > 0:
                    raise ConsistencyError("Cartan off-diagonal must be <= 0")

        self.fundamental_weights = self._compute_fundamental_weights()
        self.weyl_vector = self._compute_weyl_vector()
        self.weyl_group_order = self._weyl_order_from_diagram()
        # pairings of the Weyl vector with the positive roots (the fixed
        # denominators of the dimension formula), and scratch caches for
        # derived quantities keyed by canonical coordinates
        self._rho_pos_pairings = tuple(
            self.inner(self.weyl_vector.coords, a) for a in self._positive
        )
        self._caches: dict[str, dict] = {}

        if simple_type is not None:
            f, n = simple_type.family, simple_type.rank
            if len(self._positive) != _POSITIVE_COUNT[f](n):
                raise ConsistencyError(f"{simple_type}: positive root count mismatch")
            if self.weyl_group_order != weyl_order_formula(simple_type):
                raise ConsistencyError(f"{simple_type}: Weyl order mismatch")

    # -- inner product and gauge -------------------------------------------------

    def _project(self, v: Vec) -> Vec:
        if not self._a_quotient:
            return v
        mean = sum(v, Fraction(0)) / len(v)
        return tuple(x - mean for x in v)

    def inner(self, u: Vec, v: Vec) -> Fraction:
        """Invariant inner product; for A-type it descends to the quotient."""
        return vdot(self._project(u), self._project(v))

    def coroot_pairing_vector(self, v: Vec) -> tuple[Fraction, ...]:
        """All <v, alpha_i^vee> at once (projects v a single time)."""
        pv = self._project(v)
        return tuple(vdot(pv, c) for c in self._coroots)

    def positive_pairings(self, v: Vec) -> tuple[Fraction, ...]:
        """<v, a> for every positive root a, projecting v once."""
        pv = self._project(v)
        return tuple(vdot(pv, a) for a in self._positive)

    def rho_positive_pairings(self) -> tuple[Fraction, ...]:
        return self._rho_pos_pairings

    def cache(self, name: str) -> dict:
        return self._caches.setdefault(name, {})

    def canonicalize(self, coords: Vec) -> Vec:
        """Canonical ambient representative (A-type: last coordinate zero)."""
        if not self._a_quotient:
            return coords
        last = coords[-1]
        return tuple(x - last for x in coords)

    # -- weights and bases ---------------------------------------------------------

    def weight(self, coords, basis: str = "ambient") -> Weight:
        cs = vec(coords)
        if basis == "fundamental":
            if len(cs) != self.rank:
                raise BasisMismatch(
                    f"{self.label}: expected {self.rank} fundamental coordinates, got {len(cs)}"
                )
            return Weight("fundamental", cs)
        if basis != "ambient":
            raise BasisMismatch(f"unknown basis {basis!r}")
        if len(cs) != self.ambient_dim:
            raise BasisMismatch(
                f"{self.label}: expected {self.ambient_dim} ambient coordinates, got {len(cs)}"
            )
        cs = self.canonicalize(cs)
        if self._restrict_span and self.simple_root_coeffs(cs) is None:
            raise BasisMismatch(f"{self.label}: ambient vector outside the weight space span")
        return Weight("ambient", cs)

    def ambient_coords(self, w: Weight) -> Vec:
        """Canonical ambient coordinate vector of a weight."""
        if w.basis == "ambient":
            if len(w.coords) != self.ambient_dim:
                raise BasisMismatch(f"{self.label}: ambient length mismatch")
            return self.canonicalize(w.coords)
        if w.basis != "fundamental":
            raise BasisMismatch(f"unknown basis {w.basis!r}")
        if len(w.coords) != self.rank:
            raise BasisMismatch(f"{self.label}: fundamental length mismatch")
        total = vzero(self.ambient_dim)
        for c, fw in zip(w.coords, self.fundamental_weights):
            total = vadd(total, vscale(c, fw.coords))
        return self.canonicalize(total)

    def to_fundamental(self, w: Weight) -> Weight:
        v = self.ambient_coords(w)
        return Weight("fundamental", tuple(self.pair_coroot(v, i) for i in range(self.rank)))

    def to_ambient(self, w: Weight) -> Weight:
        return Weight("ambient", self.ambient_coords(w))

    def pair_coroot(self, v: Vec, i: int) -> Fraction:
        """<v, alpha_i^vee> for the i-th simple root."""
        return self.inner(v, self._coroots[i])

    def reflect(self, v: Vec, i: int) -> Vec:
        return vsub(v, vscale(self.pair_coroot(v, i), self._simple[i]))

    def simple_root_coeffs(self, v: Vec) -> Vec | None:
        """Coefficients of v over the simple roots, or None if outside the span."""
        if self.rank == 0:
            return () if is_zero(v) else None
        return solve_in_span(list(self._simple), self._project(v))

    # -- derived data ---------------------------------------------------------------

    def _reflection_closure(self) -> list[Vec]:
        roots: set[Vec] = set(self._simple)
        frontier = list(self._simple)
        while frontier:
            new: list[Vec] = []
            for v in frontier:
                for i in range(self.rank):
                    w = self.reflect(v, i)
                    if w not in roots:
                        roots.add(w)
                        new.append(w)
            frontier = new
        return sorted(roots)

    def _split_positive(self, all_roots: list[Vec]) -> tuple[tuple[Vec, ...], dict[Vec, Vec]]:
        positive: list[tuple[Fraction, Vec]] = []
        coeffs: dict[Vec, Vec] = {}
        for r in all_roots:
            cs = self.simple_root_coeffs(r)
            if cs is None:
                raise ConsistencyError("root outside simple-root span")
            if any(c != int(c) for c in cs):
                raise ConsistencyError("root with non-integer simple coordinates")
            if all(c >= 0 for c in cs):
                positive.append((sum(cs, Fraction(0)), r))
                coeffs[r] = cs
            elif not all(c <= 0 for c in cs):
                raise ConsistencyError("root with mixed-sign simple coordinates")
        if 2 * len(positive) != len(all_roots):
            raise ConsistencyError("positive roots are not half of all roots")
        positive.sort(key=lambda t: (t[0], t[1]))
        return tuple(r for _, r in positive), coeffs

    def _compute_fundamental_weights(self) -> tuple[Weight, ...]:
        if self.rank == 0:
            return ()
        cinv = invert(tuple(tuple(Fraction(x) for x in row) for row in self.cartan_matrix))
        out = []
        for i in range(self.rank):
            v = vzero(self.ambient_dim)
            for k in range(self.rank):
                v = vadd(v, vscale(cinv[i][k], self._simple[k]))
            out.append(Weight("ambient", self.canonicalize(v)))
        return tuple(out)

    def _compute_weyl_vector(self) -> Weight:
        total = vzero(self.ambient_dim)
        for fw in self.fundamental_weights:
            total = vadd(total, fw.coords)
        rho = self.canonicalize(total)
        half_sum = vzero(self.ambient_dim)
        for r in self._positive:
            half_sum = vadd(half_sum, r)
        half_sum = self.canonicalize(vscale(Fraction(1, 2), half_sum))
        if rho != half_sum:
            raise ConsistencyError("sum of fundamental weights != half-sum of positive roots")
        return Weight("ambient", rho)

    def _weyl_order_from_diagram(self) -> int:
        return weyl_order_of_subdiagram(self.cartan_matrix, tuple(range(self.rank)))

    # -- convenience -----------------------------------------------------------------

    @property
    def positive_roots(self) -> tuple[Weight, ...]:
        return tuple(Weight("ambient", self.canonicalize(r)) for r in self._positive)

    @property
    def simple_roots(self) -> tuple[Weight, ...]:
        return tuple(Weight("ambient", self.canonicalize(r)) for r in self._simple)

    def raw_positive_roots(self) -> tuple[Vec, ...]:
        return self._positive

    def raw_simple_roots(self) -> tuple[Vec, ...]:
        return self._simple

    def highest_root(self) -> Weight:
        """The unique root of maximal height (requires an irreducible system)."""
        best = None
        best_h = None
        for r in self._positive:
            h = sum(self._pos_coeffs[r], Fraction(0))
            if best_h is None or h > best_h:
                best, best_h = r, h
        if best is None:
            raise IllegalType(f"{self.label}: no roots")
        ties = sum(1 for r in self._positive if sum(self._pos_coeffs[r], Fraction(0)) == best_h)
        if ties != 1:
            raise IllegalType(f"{self.label}: highest root not unique (reducible system)")
        return Weight("ambient", self.canonicalize(best))

    def zero_weight(self) -> Weight:
        return Weight("ambient", vzero(self.ambient_dim))

    def describe(self) -> dict:
        d = {
            "label": self.label,
            "rank": self.rank,
            "ambient_dim": self.ambient_dim,
            "algebra_dim": algebra_dim(self),
            "positive_root_count": len(self._positive),
            "weyl_group_order": self.weyl_group_order,
            "cartan_matrix": [list(row) for row in self.cartan_matrix],
            "simple_roots": [[frac_str(c) for c in w.coords] for w in self.simple_roots],
            "fundamental_weights": [
                [frac_str(c) for c in w.coords] for w in self.fundamental_weights
            ],
            "weyl_vector": [frac_str(c) for c in self.weyl_vector.coords],
        }
        if self.simple_type is not None:
            d["family"] = self.simple_type.family
        return d


class ConsistencyError(RuntimeError):
    """Internal invariant violated during construction (engine bug)."""


def weyl_order_formula(st: SimpleType) -> int:
    f, n = st.family, st.rank
    if f == "A":
        return factorial(n + 1)
    if f in ("B", "C"):
        return 2**n * factorial(n)
    if f == "D":
        return 2 ** (n - 1) * factorial(n)
    if f == "G":
        return 12
    if f == "F":
        return 1152
    return {6: 51840, 7: 2903040, 8: 696729600}[n]


def weyl_order_of_subdiagram(cartan, nodes: tuple[int, ...]) -> int:
    """|W_J| for the sub-diagram on the given node set, by classifying components.

    Components are identified from edge multiplicities and branch shape,
    which determines the order (B and C have equal orders, so they need
    not be distinguished).
    """
    if not nodes:
        return 1
    adj = {
        i: [j for j in nodes if j != i and cartan[i][j] != 0]
        for i in nodes
    }
    seen: set[int] = set()
    order = 1
    for start in nodes:
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        stack = [start]
        while stack:
            u = stack.pop()
            for v in adj[u]:
                if v not in seen:
                    seen.add(v)
                    comp.append(v)
                    stack.append(v)
        order *= _component_weyl_order(cartan, sorted(comp), adj)
    return order


def _component_weyl_order(cartan, comp: list[int], adj) -> int:
    r = len(comp)
    if r == 1:
        return 2
    edges = [
        (i, j, cartan[i][j] * cartan[j][i])
        for ii, i in enumerate(comp)
        for j in comp[ii + 1:]
        if cartan[i][j] != 0
    ]
    if any(m == 3 for _, _, m in edges):
        if r != 2:
            raise ConsistencyError("triple edge in a diagram of rank != 2")
        return 12
    degrees = {i: len([j for j in adj[i] if j in comp]) for i in comp}
    doubles = [(i, j) for i, j, m in edges if m == 2]
    if doubles:
        if max(degrees.values()) > 2 or len(doubles) != 1:
            raise ConsistencyError("unrecognized multiply-laced diagram")
        (a, b) = doubles[0]
        if r == 4 and degrees[a] == 2 and degrees[b] == 2:
            return 1152  # F4: the double edge joins the two interior nodes
        return 2**r * factorial(r)  # B_r / C_r (equal orders)
    # simply laced: A (path), D (one branch with two length-1 arms), E
    branch = [i for i in comp if degrees[i] == 3]
    if not branch:
        return factorial(r + 1)  # A_r
    if len(branch) != 1:
        raise ConsistencyError("more than one branch node in a component")
    arms = sorted(_arm_lengths(branch[0], comp, adj))
    if arms[0] == 1 and arms[1] == 1:
        return 2 ** (r - 1) * factorial(r)  # D_r
    if arms == [1, 2, 2]:
        return 51840  # E6
    if arms == [1, 2, 3]:
        return 2903040  # E7
    if arms == [1, 2, 4]:
        return 696729600  # E8
    raise ConsistencyError(f"unrecognized simply-laced branch shape {arms}")


def _arm_lengths(branch: int, comp: list[int], adj) -> list[int]:
    lengths = []
    for start in adj[branch]:
        if start not in comp:
            continue
        length = 1
        prev, cur = branch, start
        while True:
            nxt = [j for j in adj[cur] if j in comp and j != prev]
            if not nxt:
                break
            if len(nxt) > 1:
                raise ConsistencyError("nested branch in arm")
            prev, cur = cur, nxt[0]
            length += 1
        lengths.append(length)
    return lengths


@lru_cache(maxsize=None)
def build_root_system(st: SimpleType) -> RootSystem:
    """Construct the root system of a simple type (deterministic, cached)."""
    dim, simple, a_quot, span = _simple_root_data(st)
    return RootSystem(
        simple,
        dim,
        simple_type=st,
        a_quotient=a_quot,
        restrict_span=span,
        label=str(st),
    )


def algebra_dim(rs: RootSystem) -> int:
    """dim g = 2 * (number of positive roots) + dim(Cartan)."""
    return 2 * len(rs.raw_positive_roots()) + rs.cartan_dim


def weyl_group_order(rs: RootSystem) -> int:
    return rs.weyl_group_order
