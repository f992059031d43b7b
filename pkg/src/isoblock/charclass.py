"""Chern classes from torus weights and the flat-bundle class kernel.

A representation restricted to a maximal torus is a multiset of weights;
identifying each weight with a degree-2 polynomial generator (the usual
transgression bookkeeping) turns its total Chern class into the product
of (1 + w) over the multiset.  The graded pieces are then the elementary
symmetric polynomials of the weights, computed here with exact rational
coefficients in a canonical graded-lexicographic order.

Since the polynomial ring is a unique factorization domain and every
factor 1 + w has constant term 1, equal products force equal weight
multisets (zero weights contribute unit factors, which is why equality
of total counts is part of the contract).  That gives the
classes-determine-the-representation test, with the multiset comparison
run alongside as a consistency check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import BasisMismatch, ConsistencyFault, CountMismatch
from .linalg import Vec, frac_str, vec

Monomial = tuple[int, ...]


class PolynomialQ:
    """Multivariate polynomial over Q; immutable mapping monomial -> coefficient."""

    __slots__ = ("num_vars", "terms")

    def __init__(self, num_vars: int, terms: dict[Monomial, Fraction] | None = None):
        self.num_vars = num_vars
        self.terms = {m: c for m, c in (terms or {}).items() if c != 0}

    @classmethod
    def constant(cls, num_vars: int, c) -> "PolynomialQ":
        c = Fraction(c)
        return cls(num_vars, {(0,) * num_vars: c} if c else {})

    @classmethod
    def linear(cls, coeffs: Vec) -> "PolynomialQ":
        n = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            if c:
                m = tuple(int(j == i) for j in range(n))
                terms[m] = Fraction(c)
        return cls(n, terms)

    def __add__(self, other: "PolynomialQ") -> "PolynomialQ":
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, Fraction(0)) + c
        return PolynomialQ(self.num_vars, terms)

    def __mul__(self, other: "PolynomialQ") -> "PolynomialQ":
        terms: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                terms[m] = terms.get(m, Fraction(0)) + c1 * c2
        return PolynomialQ(self.num_vars, terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PolynomialQ)
            and self.num_vars == other.num_vars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.num_vars, frozenset(self.terms.items())))

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        # graded lexicographic: total degree first, then exponent vector
        return sorted(self.terms.items(), key=lambda mc: (sum(mc[0]), mc[0]))

    def to_json(self) -> list[dict]:
        return [
            {"exponents": list(m), "coeff": frac_str(c)} for m, c in self.sorted_terms()
        ]

    def __repr__(self):
        if self.is_zero():
            return "0"
        bits = []
        for m, c in self.sorted_terms():
            mono = "*".join(f"w{i + 1}^{e}" if e > 1 else f"w{i + 1}" for i, e in enumerate(m) if e)
            bits.append(frac_str(c) + ("*" + mono if mono else ""))
        return " + ".join(bits)


@dataclass(frozen=True)
class ChernPolynomial:
    """Graded pieces of prod(1 + w): piece d is e_d of the weight multiset."""

    num_generators: int
    total_count: int
    graded: tuple[PolynomialQ, ...]

    def piece(self, d: int) -> PolynomialQ:
        if d < 0 or d > self.total_count:
            return PolynomialQ.constant(self.num_generators, 0)
        return self.graded[d]

    def odd_pieces_vanish(self) -> bool:
        return all(self.graded[d].is_zero() for d in range(1, self.total_count + 1, 2))

    def to_json(self) -> dict:
        return {
            "num_generators": self.num_generators,
            "total_count": self.total_count,
            "graded": [p.to_json() for p in self.graded],
        }


def _normalize_multiset(weights) -> list[tuple[Vec, int]]:
    """Accept {vector: mult} dicts, WeightMultiset, or iterables of vectors."""
    items: list[tuple[Vec, int]] = []
    if hasattr(weights, "sorted_items"):  # WeightMultiset
        for w, m in weights.sorted_items():
            items.append((vec(w.coords), m))
    elif isinstance(weights, dict):
        for w, m in sorted(weights.items()):
            items.append((vec(w), int(m)))
    else:
        for w in weights:
            items.append((vec(w), 1))
    if not items:
        return []
    n = len(items[0][0])
    for w, m in items:
        if len(w) != n:
            raise BasisMismatch("weights over different torus bases")
        if m <= 0:
            raise ValueError("multiplicities must be positive")
    return items


def chern_polynomial(weights) -> ChernPolynomial:
    """Elementary symmetric pieces of the weight multiset, exactly."""
    items = _normalize_multiset(weights)
    num_vars = len(items[0][0]) if items else 0
    graded = [PolynomialQ.constant(num_vars, 1)]
    for w, mult in items:
        lin = PolynomialQ.linear(w)
        for _ in range(mult):
            nxt = [graded[0]]
            for d in range(1, len(graded) + 1):
                prev = graded[d] if d < len(graded) else PolynomialQ.constant(num_vars, 0)
                nxt.append(prev + graded[d - 1] * lin)
            graded = nxt
    total = sum(m for _, m in items)
    return ChernPolynomial(num_vars, total, tuple(graded))


def multisets_equal(w1, w2) -> bool:
    a = {}
    for w, m in _normalize_multiset(w1):
        a[w] = a.get(w, 0) + m
    b = {}
    for w, m in _normalize_multiset(w2):
        b[w] = b.get(w, 0) + m
    return a == b


def reps_equal_by_chern(w1, w2) -> bool:
    """Equality of total Chern classes; equivalent to multiset equality.

    Both routes are evaluated and must agree (unique factorization of
    the product of the linear factors); disagreement raises.
    """
    i1, i2 = _normalize_multiset(w1), _normalize_multiset(w2)
    n1 = sum(m for _, m in i1)
    n2 = sum(m for _, m in i2)
    if n1 != n2:
        raise CountMismatch(f"total counts differ: {n1} vs {n2}")
    if i1 and i2 and len(i1[0][0]) != len(i2[0][0]):
        raise BasisMismatch("weights over different torus bases")
    by_classes = chern_polynomial(w1) == chern_polynomial(w2)
    by_multiset = multisets_equal(w1, w2)
    if by_classes != by_multiset:
        raise ConsistencyFault(
            f"class equality ({by_classes}) disagrees with multiset equality ({by_multiset})"
        )
    return by_classes


def is_negation_closed(weights) -> bool:
    counts: dict[Vec, int] = {}
    for w, m in _normalize_multiset(weights):
        counts[w] = counts.get(w, 0) + m
    return all(counts.get(tuple(-x for x in w), 0) == m for w, m in counts.items())


def complexification_vanishing(weights) -> bool:
    """True iff the multiset is closed under negation; in that case every
    odd graded piece vanishes identically (asserted)."""
    closed = is_negation_closed(weights)
    if closed and not chern_polynomial(weights).odd_pieces_vanish():
        raise ConsistencyFault("negation-closed multiset with a nonzero odd piece")
    return closed


@dataclass(frozen=True)
class FlatKernelDescription:
    """Characteristic classes of rank-n bundles killed by a flat structure."""

    rank: int
    kernel_generators: tuple[tuple[str, int], ...]  # (name, degree)
    euler_class_degree: int | None  # present only for even rank
    euler_in_kernel: bool
    euler_square_identity: str | None

    def to_json(self) -> dict:
        return {
            "rank": self.rank,
            "kernel_generators": [
                {"name": name, "degree": deg} for name, deg in self.kernel_generators
            ],
            "euler_class_degree": self.euler_class_degree,
            "euler_in_kernel": self.euler_in_kernel,
            "euler_square_identity": self.euler_square_identity,
        }


def flat_kernel(n: int) -> FlatKernelDescription:
    """Generators p_1..p_{floor(n/2)} of the flat-bundle kernel in rank n.

    For even n the Euler class survives flattening but its square equals
    p_{n/2}, which does not; for odd n there is no Euler class.
    """
    if n < 1:
        raise ValueError("rank must be positive")
    gens = tuple((f"p{i}", 4 * i) for i in range(1, n // 2 + 1))
    if n % 2 == 0:
        return FlatKernelDescription(
            rank=n,
            kernel_generators=gens,
            euler_class_degree=n,
            euler_in_kernel=False,
            euler_square_identity=f"e^2 = p{n // 2}",
        )
    return FlatKernelDescription(
        rank=n,
        kernel_generators=gens,
        euler_class_degree=None,
        euler_in_kernel=False,
        euler_square_identity=None,
    )
