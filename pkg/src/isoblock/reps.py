"""Dominance, Weyl orbits, dimension formula, duality and weight multiplicities.

Two deliberately independent routes exist for every quantity that matters:

* ``weyl_dim`` is the product formula over positive roots; the recursive
  multiplicity computation in ``freudenthal_multiplicities`` shares no
  code with it and acts as its oracle (their totals must agree).
* ``orbit_size`` divides the Weyl-group order by the order of the
  stabilizer (a parabolic, read off from the vanishing coroot pairings);
  ``weyl_orbit`` enumerates the orbit explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .config import DEFAULT_FREUDENTHAL_CAP, DEFAULT_ORBIT_CAP
from .errors import CapExceeded, IllegalType, NotDominant, OrbitTooLarge
from .linalg import Vec, vadd, vscale, vsub, vzero
from .rootsystem import RootSystem, Weight, weyl_order_of_subdiagram


@dataclass(frozen=True)
class HighestWeightRep:
    root_system: RootSystem
    highest_weight: Weight

    def __post_init__(self):
        require_dominant_integral(self.root_system, self.highest_weight)


@dataclass
class WeightMultiset:
    """Finite map weight -> positive multiplicity."""

    entries: dict[Weight, int] = field(default_factory=dict)

    def add(self, w: Weight, mult: int = 1) -> None:
        if mult <= 0:
            raise ValueError("multiplicity must be positive")
        self.entries[w] = self.entries.get(w, 0) + mult

    def total(self) -> int:
        return sum(self.entries.values())

    def sorted_items(self) -> list[tuple[Weight, int]]:
        return sorted(self.entries.items(), key=lambda kv: kv[0].coords)

    def __eq__(self, other) -> bool:
        return isinstance(other, WeightMultiset) and self.entries == other.entries


def coroot_pairings(rs: RootSystem, w: Weight) -> tuple[Fraction, ...]:
    return rs.coroot_pairing_vector(rs.ambient_coords(w))


def is_dominant(rs: RootSystem, w: Weight) -> bool:
    return all(p >= 0 for p in coroot_pairings(rs, w))


def is_integral(rs: RootSystem, w: Weight) -> bool:
    return all(p.denominator == 1 for p in coroot_pairings(rs, w))


def require_dominant_integral(rs: RootSystem, w: Weight) -> None:
    ps = coroot_pairings(rs, w)
    if any(p.denominator != 1 for p in ps):
        raise NotDominant(f"{rs.label}: weight {w} is not integral")
    if any(p < 0 for p in ps):
        raise NotDominant(f"{rs.label}: weight {w} is not dominant")


def weyl_dim(rep: HighestWeightRep) -> int:
    """Dimension of the irreducible with the given highest weight.

    Product over positive roots of <lam+rho, a> / <rho, a>, evaluated
    exactly; the result is asserted to be a positive integer.
    """
    rs = rep.root_system
    lam = rs.ambient_coords(rep.highest_weight)
    cache = rs.cache("weyl_dim")
    hit = cache.get(lam)
    if hit is not None:
        return hit
    lam_rho = vadd(lam, rs.weyl_vector.coords)
    num = rs.positive_pairings(lam_rho)
    den = rs.rho_positive_pairings()
    total = Fraction(1)
    for a, b in zip(num, den):
        total *= a / b
    if total.denominator != 1 or total <= 0:
        raise RuntimeError(f"{rs.label}: dimension formula returned {total}")
    cache[lam] = int(total)
    return int(total)


def dim_of(rs: RootSystem, w: Weight) -> int:
    return weyl_dim(HighestWeightRep(rs, w))


def smallest_nontrivial_dim(rs: RootSystem) -> tuple[int, Weight]:
    """Minimal dimension of a nontrivial irreducible, with a witness weight.

    Minimizing over the fundamental weights suffices: any nontrivial
    dominant weight dominates some fundamental one, and the dimension is
    monotone under adding a dominant weight (property-tested).
    """
    if rs.rank == 0:
        raise IllegalType(f"{rs.label}: no nontrivial representations")
    best: tuple[int, Weight] | None = None
    for fw in rs.fundamental_weights:
        d = dim_of(rs, fw)
        if best is None or d < best[0]:
            best = (d, fw)
    return best


def dominant_coords(rs: RootSystem, v: Vec) -> Vec:
    """Canonical coordinates of the dominant Weyl-orbit representative."""
    v = rs.canonicalize(v)
    cache = rs.cache("dominant")
    hit = cache.get(v)
    if hit is not None:
        return hit
    start = v
    simple = rs.raw_simple_roots()
    while True:
        ps = rs.coroot_pairing_vector(v)
        i = next((j for j, p in enumerate(ps) if p < 0), None)
        if i is None:
            cache[start] = v
            return v
        v = rs.canonicalize(vsub(v, vscale(ps[i], simple[i])))


def dominant_representative(rs: RootSystem, w: Weight) -> Weight:
    return Weight("ambient", dominant_coords(rs, rs.ambient_coords(w)))


def weyl_orbit(rs: RootSystem, w: Weight, orbit_cap: int = DEFAULT_ORBIT_CAP) -> list[Weight]:
    """Full Weyl orbit in canonical sorted order.

    The stabilizer-based size is computed first so the cap check happens
    before any enumeration work.
    """
    size = orbit_size(rs, w)
    if size > orbit_cap:
        raise OrbitTooLarge(f"orbit of size {size} exceeds cap {orbit_cap}")
    start = rs.ambient_coords(w)
    simple = rs.raw_simple_roots()
    seen: set[Vec] = {start}
    frontier = [start]
    while frontier:
        new = []
        for v in frontier:
            ps = rs.coroot_pairing_vector(v)
            for i, p in enumerate(ps):
                if p == 0:
                    continue
                u = rs.canonicalize(vsub(v, vscale(p, simple[i])))
                if u not in seen:
                    seen.add(u)
                    new.append(u)
        frontier = new
    if len(seen) != size:
        raise RuntimeError(
            f"{rs.label}: enumerated orbit size {len(seen)} != stabilizer count {size}"
        )
    return [Weight("ambient", v) for v in sorted(seen)]


def orbit_size(rs: RootSystem, w: Weight) -> int:
    """|W| / |Stab(w)|; the stabilizer of the dominant representative is
    the parabolic subgroup generated by the simple reflections fixing it."""
    dom = dominant_coords(rs, rs.ambient_coords(w))
    cache = rs.cache("orbit_size")
    hit = cache.get(dom)
    if hit is not None:
        return hit
    ps = rs.coroot_pairing_vector(dom)
    fixed = tuple(i for i, p in enumerate(ps) if p == 0)
    sub_cache = rs.cache("subdiagram_order")
    stab = sub_cache.get(fixed)
    if stab is None:
        stab = weyl_order_of_subdiagram(rs.cartan_matrix, fixed)
        sub_cache[fixed] = stab
    if rs.weyl_group_order % stab != 0:
        raise RuntimeError(f"{rs.label}: stabilizer order does not divide |W|")
    size = rs.weyl_group_order // stab
    cache[dom] = size
    return size


def weyl_involution(rs: RootSystem, lam: Weight) -> Weight:
    """Duality involution: the highest weight of the dual representation."""
    require_dominant_integral(rs, lam)
    neg = Weight("ambient", rs.canonicalize(vscale(Fraction(-1), rs.ambient_coords(lam))))
    return dominant_representative(rs, neg)


def _dominant_weights_below(rs: RootSystem, lam: Vec) -> list[Vec]:
    """Dominant weights of V_lam: closure of {lam} under subtracting a
    positive root, keeping dominant results (canonical gauge throughout)."""
    positive = rs.raw_positive_roots()
    seen: set[Vec] = {lam}
    frontier = [lam]
    while frontier:
        new = []
        for v in frontier:
            for a in positive:
                u = rs.canonicalize(vsub(v, a))
                if u in seen:
                    continue
                if all(p >= 0 for p in rs.coroot_pairing_vector(u)):
                    seen.add(u)
                    new.append(u)
        frontier = new
    return sorted(seen)


def freudenthal_multiplicities(
    rep: HighestWeightRep, freudenthal_cap: int = DEFAULT_FREUDENTHAL_CAP
) -> WeightMultiset:
    """Full weight multiset of the irreducible, by the multiplicity recursion.

    Multiplicities are computed on dominant weights (ordered by depth
    below the highest weight) and propagated to orbits; each recursion
    step must produce a positive integer, which is asserted.
    """
    rs = rep.root_system
    total_dim = weyl_dim(rep)
    if total_dim > freudenthal_cap:
        raise CapExceeded(f"dimension {total_dim} exceeds cap {freudenthal_cap}")
    lam = rs.ambient_coords(rep.highest_weight)
    rho = rs.weyl_vector.coords
    lam_rho = vadd(lam, rho)
    lam_rho_norm = rs.inner(lam_rho, lam_rho)
    positive = rs.raw_positive_roots()

    dominants = _dominant_weights_below(rs, rs.canonicalize(lam))
    # depth = height of lam - mu over the simple roots; recursion reads
    # strictly shallower weights, so process by increasing depth
    def depth(v: Vec) -> Fraction:
        cs = rs.simple_root_coeffs(vsub(lam, v))
        if cs is None:
            raise RuntimeError("dominant weight outside lam - root lattice")
        return sum(cs, Fraction(0))

    dominants.sort(key=lambda v: (depth(v), v))
    root_norms = [rs.inner(a, a) for a in positive]
    mult: dict[Vec, int] = {}
    for idx, mu in enumerate(dominants):
        if idx == 0:
            mult[mu] = 1
            continue
        acc = Fraction(0)
        mu_pairings = rs.positive_pairings(mu)
        for a, mu_a, norm_a in zip(positive, mu_pairings, root_norms):
            k = 1
            nu = vadd(mu, a)
            while True:
                nu_dom = dominant_coords(rs, nu)
                m = mult.get(nu_dom)
                if m is None:
                    break
                acc += m * (mu_a + k * norm_a)  # <mu + k a, a>
                k += 1
                nu = vadd(nu, a)
        mu_rho = vadd(mu, rho)
        denom = lam_rho_norm - rs.inner(mu_rho, mu_rho)
        value = 2 * acc / denom
        if value.denominator != 1 or value <= 0:
            raise RuntimeError(f"{rs.label}: non-integral multiplicity {value}")
        mult[mu] = int(value)

    out = WeightMultiset()
    for mu, m in mult.items():
        for w in weyl_orbit(rs, Weight("ambient", mu), orbit_cap=max(total_dim, 1)):
            out.add(w, m)
    return out


def weight_of_irrep(rs: RootSystem, lam: Weight, mu: Weight) -> bool:
    """Exact membership test: mu is a weight of V_lam iff the dominant
    representative of mu sits below lam by a nonnegative integral
    combination of simple roots."""
    require_dominant_integral(rs, lam)
    dom = dominant_representative(rs, mu)
    diff = vsub(rs.ambient_coords(lam), dom.coords)
    cs = rs.simple_root_coeffs(diff)
    if cs is None:
        return False
    return all(c >= 0 and c.denominator == 1 for c in cs)
