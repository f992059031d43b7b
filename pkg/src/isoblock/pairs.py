"""Symmetric pairs: restriction maps, isotropy weight multisets, dim p.

The five pair families and their weight-level models:

* ``sl-so:n``  -- sl_n over so_n; restriction kernel L_i + L_{i+k} (and
  L_n for n odd); isotropy = traceless symmetric square of the vector
  representation.
* ``sl-sp:n``  -- sl_{2n} over sp_{2n}; kernel L_i + L_{n+i}; isotropy =
  primitive second exterior power.
* ``so-so:n``  -- so_{n+1} over so_n; dimension data only (no weight
  model; the obstruction argument for this family is a dimension gap).
* ``e6-f4``    -- e6 over f4; dimension data only.
* ``complex:T``-- a complex simple algebra viewed as a real algebra over
  its compact form; the isotropy multiset is the adjoint one.

The subalgebra root systems are realized directly in the L' basis, so
``restrict`` lands in their ambient coordinates.  For n = 2, so_2 is a
rank-zero system (abelian); for n = 4, so_4 is the reducible D_2.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import IllegalParameter, IllegalType, NoRestrictionMap, NoWeightModel
from .linalg import Vec, frac_str, mat_vec, vadd, vec, vsub, vzero
from .reps import WeightMultiset
from .rootsystem import RootSystem, SimpleType, Weight, algebra_dim, build_root_system

PAIR_KINDS = ("sl-so", "sl-sp", "so-so", "e6-f4", "complex")


@dataclass(frozen=True)
class SymmetricPair:
    pair_id: str
    kind: str
    param: int | SimpleType | None
    g: RootSystem
    k: RootSystem | None
    restriction: tuple[Vec, ...] | None
    dim_p: int
    isotropy_highest: Weight | None


def _e(i: int, n: int) -> Vec:
    return tuple(Fraction(int(j == i)) for j in range(n))


def orthogonal_root_system(n: int) -> RootSystem:
    """so_n realized in R^{floor(n/2)} with coordinates L'_1..L'_k."""
    if n < 2:
        raise IllegalParameter(f"so_{n} is not supported")
    k = n // 2
    if n == 2:
        return RootSystem([], 1, cartan_dim=1, label="so2")
    simple: list[Vec] = [vsub(_e(i, k), _e(i + 1, k)) for i in range(k - 1)]
    if n % 2 == 1:
        simple.append(_e(k - 1, k))
    else:
        simple.append(vadd(_e(k - 2, k), _e(k - 1, k)))
    st = None
    if n % 2 == 1 and k >= 2:
        st = SimpleType("B", k)
    elif n % 2 == 0 and k >= 3:
        st = SimpleType("D", k)
    return RootSystem(simple, k, simple_type=st, cartan_dim=k, label=f"so{n}")


def parse_pair_id(pair_id: str) -> tuple[str, int | SimpleType | None]:
    s = pair_id.strip().lower()
    if s == "e6-f4":
        return "e6-f4", None
    m = re.fullmatch(r"(sl-so|sl-sp|so-so):(\d+)", s)
    if m:
        return m.group(1), int(m.group(2))
    m = re.fullmatch(r"complex:([a-g])(\d+)", s)
    if m:
        return "complex", SimpleType(m.group(1).upper(), int(m.group(2)))
    raise IllegalParameter(f"cannot parse pair id {pair_id!r}")


def make_pair(pair_id: str) -> SymmetricPair:
    kind, param = parse_pair_id(pair_id)
    if kind == "sl-so":
        return _make_sl_so(param)
    if kind == "sl-sp":
        return _make_sl_sp(param)
    if kind == "so-so":
        return _make_so_so(param)
    if kind == "e6-f4":
        return _make_e6_f4()
    return _make_complex(param)


def _make_sl_so(n: int) -> SymmetricPair:
    if n < 2:
        raise IllegalParameter("sl-so requires n >= 2")
    k = n // 2
    g = build_root_system(SimpleType("A", n - 1))
    sub = orthogonal_root_system(n)
    rows = []
    for i in range(k):
        row = [Fraction(0)] * n
        row[i] = Fraction(1)
        row[k + i] = Fraction(-1)
        rows.append(tuple(row))
    restriction = tuple(rows)
    dim_p = algebra_dim(g) - algebra_dim(sub)
    if dim_p != (n - 1) * (n + 2) // 2:
        raise RuntimeError("sl-so: dim p mismatch")
    highest = sub.weight([2] + [0] * (k - 1))
    return SymmetricPair(f"sl-so:{n}", "sl-so", n, g, sub, restriction, dim_p, highest)


def _make_sl_sp(n: int) -> SymmetricPair:
    if n < 2:
        raise IllegalParameter("sl-sp requires n >= 2")
    g = build_root_system(SimpleType("A", 2 * n - 1))
    sub = build_root_system(SimpleType("C", n))
    rows = []
    for i in range(n):
        row = [Fraction(0)] * (2 * n)
        row[i] = Fraction(1)
        row[n + i] = Fraction(-1)
        rows.append(tuple(row))
    restriction = tuple(rows)
    dim_p = algebra_dim(g) - algebra_dim(sub)
    if dim_p != (n - 1) * (2 * n + 1):
        raise RuntimeError("sl-sp: dim p mismatch")
    highest = sub.weight([1, 1] + [0] * (n - 2))
    return SymmetricPair(f"sl-sp:{n}", "sl-sp", n, g, sub, restriction, dim_p, highest)


def _make_so_so(n: int) -> SymmetricPair:
    if n < 2:
        raise IllegalParameter("so-so requires n >= 2")
    g = orthogonal_root_system(n + 1)
    sub = orthogonal_root_system(n)
    dim_p = algebra_dim(g) - algebra_dim(sub)
    if dim_p != n:
        raise RuntimeError("so-so: dim p mismatch")
    return SymmetricPair(f"so-so:{n}", "so-so", n, g, sub, None, dim_p, None)


def _make_e6_f4() -> SymmetricPair:
    g = build_root_system(SimpleType("E", 6))
    sub = build_root_system(SimpleType("F", 4))
    dim_p = algebra_dim(g) - algebra_dim(sub)
    if dim_p != 26:
        raise RuntimeError("e6-f4: dim p mismatch")
    return SymmetricPair("e6-f4", "e6-f4", None, g, sub, None, dim_p, None)


def _make_complex(st: SimpleType) -> SymmetricPair:
    g = build_root_system(st)
    dim_p = algebra_dim(g)
    highest = g.highest_root()
    return SymmetricPair(f"complex:{st}", "complex", st, g, g, None, dim_p, highest)


def restrict(pair: SymmetricPair, w: Weight) -> Weight:
    """Apply the restriction map h* -> h_1* to an ambient weight of g.

    For the complex pairs the ambient Cartan is h* + h*, so the input
    carries twice as many coordinates and restriction is their sum.
    """
    if pair.kind in ("so-so", "e6-f4"):
        raise NoRestrictionMap(f"{pair.pair_id}: dimension-gap pair has no weight model")
    if pair.kind == "complex":
        n = pair.g.ambient_dim
        if w.basis != "ambient" or len(w.coords) != 2 * n:
            raise NoRestrictionMap(
                f"{pair.pair_id}: restriction needs 2*{n} ambient coordinates"
            )
        summed = vadd(w.coords[:n], w.coords[n:])
        return pair.g.weight(summed)
    v = pair.g.ambient_coords(w)
    return pair.k.weight(mat_vec(pair.restriction, v))


def isotropy_weights(pair: SymmetricPair) -> WeightMultiset:
    """Weight multiset of the isotropy representation (total = dim p)."""
    out = WeightMultiset()
    if pair.kind == "sl-so":
        n = pair.param
        k = n // 2
        sub = pair.k
        dim = sub.ambient_dim
        for i in range(k):
            two = vec(2 * x for x in _e(i, dim))
            out.add(sub.weight(two))
            out.add(sub.weight(tuple(-x for x in two)))
        for i in range(k):
            for j in range(k):
                if i != j:
                    out.add(sub.weight(vsub(_e(i, dim), _e(j, dim))))
        for i in range(k):
            for j in range(i + 1, k):
                s = vadd(_e(i, dim), _e(j, dim))
                out.add(sub.weight(s))
                out.add(sub.weight(tuple(-x for x in s)))
        if n % 2 == 1:
            for i in range(k):
                out.add(sub.weight(_e(i, dim)))
                out.add(sub.weight(tuple(-x for x in _e(i, dim))))
        # zero multiplicity: k-1 for n even, k for n odd (the count below
        # forces the extra one; the restriction cross-check verifies it)
        zeros = (k - 1) + (n % 2)
        if zeros > 0:
            out.add(sub.zero_weight(), zeros)
    elif pair.kind == "sl-sp":
        n = pair.param
        sub = pair.k
        for i in range(n):
            for j in range(i + 1, n):
                for s in (vsub(_e(i, n), _e(j, n)), vadd(_e(i, n), _e(j, n))):
                    out.add(sub.weight(s))
                    out.add(sub.weight(tuple(-x for x in s)))
        out.add(sub.zero_weight(), n - 1)
    elif pair.kind == "complex":
        g = pair.g
        for r in g.raw_positive_roots():
            out.add(g.weight(r))
            out.add(g.weight(tuple(-x for x in r)))
        out.add(g.zero_weight(), g.rank)
    else:
        raise NoWeightModel(f"{pair.pair_id}: no isotropy weight model")
    if out.total() != pair.dim_p:
        raise RuntimeError(f"{pair.pair_id}: isotropy count {out.total()} != dim p {pair.dim_p}")
    return out


def isotropy_highest_weight(pair: SymmetricPair) -> Weight:
    """The stored highest weight, verified maximal among the isotropy weights."""
    if pair.isotropy_highest is None:
        raise NoWeightModel(f"{pair.pair_id}: no isotropy weight model")
    sub = pair.k
    high = pair.isotropy_highest
    weights = isotropy_weights(pair)
    if sub.rank == 0:
        # abelian subalgebra: no root order; maximality means lexicographic
        if any(w.coords > high.coords for w in weights.entries):
            raise RuntimeError(f"{pair.pair_id}: declared highest weight not maximal")
        return high
    hv = sub.ambient_coords(high)
    for w in weights.entries:
        cs = sub.simple_root_coeffs(vsub(hv, sub.ambient_coords(w)))
        if cs is None or any(c < 0 for c in cs):
            raise RuntimeError(
                f"{pair.pair_id}: weight {w} not below the declared highest weight"
            )
    return high


def restricted_adjoint(pair: SymmetricPair) -> WeightMultiset:
    """Multiset r(weights of ad g): equals (ad k) + isotropy, which the
    tests verify against the explicit lists and against the recursion oracle."""
    if pair.restriction is None:
        raise NoRestrictionMap(f"{pair.pair_id}: no restriction map")
    g, sub = pair.g, pair.k
    out = WeightMultiset()
    for r in g.raw_positive_roots():
        for v in (r, tuple(-x for x in r)):
            out.add(sub.weight(mat_vec(pair.restriction, v)))
    out.add(sub.weight(mat_vec(pair.restriction, vzero(g.ambient_dim))), g.rank)
    return out


def adjoint_weights(rs: RootSystem) -> WeightMultiset:
    """Adjoint multiset straight from root data: roots plus a zero of
    multiplicity dim(Cartan)."""
    out = WeightMultiset()
    for r in rs.raw_positive_roots():
        out.add(rs.weight(r))
        out.add(rs.weight(tuple(-x for x in r)))
    out.add(rs.zero_weight(), rs.cartan_dim)
    return out


def describe_pair(pair: SymmetricPair) -> dict:
    d = {
        "pair": pair.pair_id,
        "ambient": pair.g.label,
        "ambient_dim": algebra_dim(pair.g),
        "subalgebra": pair.k.label if pair.k is not None else None,
        "subalgebra_dim": algebra_dim(pair.k) if pair.k is not None else None,
        "dim_p": pair.dim_p,
    }
    if pair.isotropy_highest is not None:
        d["isotropy_highest_weight"] = [frac_str(c) for c in pair.isotropy_highest.coords]
        ws = isotropy_weights(pair)
        d["isotropy_weights"] = [
            {"coords": [frac_str(c) for c in w.coords], "multiplicity": m}
            for w, m in ws.sorted_items()
        ]
    else:
        d["isotropy_highest_weight"] = None
        d["note"] = "dimension-gap pair: no weight model"
    return d
