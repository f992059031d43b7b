"""Batch verification: every acceptance check, keyed by source location.

Each item reports pass/fail plus an explanatory detail string.  A
``note`` status is a pass that carries a documented divergence (the
honest recomputation disagrees with a published table value in a way
that does not affect any verdict).  The suite is deterministic: fixed
iteration orders and a fixed RNG seed for the randomized property
section.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .charclass import (
    chern_polynomial,
    complexification_vanishing,
    flat_kernel,
    multisets_equal,
    reps_equal_by_chern,
)
from .classify import (
    OUT_OF_TABLE_SAMPLES,
    TABLE_SAMPLES,
    MilnorWoodQuery,
    lookup_type,
    milnor_wood_bound,
    obstructs_flat,
    product_type,
    smillie_ratio,
)
from .config import RunConfig
from .errors import OutOfTable
from .linalg import vadd, vscale
from .obstruction import check_complex_case, check_extension
from .pairs import adjoint_weights, isotropy_weights, make_pair
from .reps import (
    HighestWeightRep,
    dim_of,
    is_dominant,
    freudenthal_multiplicities,
    orbit_size,
    smallest_nontrivial_dim,
    weyl_orbit,
)
from .rootsystem import SimpleType, Weight, algebra_dim, build_root_system

PASS = "pass"
FAIL = "fail"
NOTE = "note"


@dataclass
class VerifyItem:
    key: str
    criterion: int
    status: str
    detail: str

    def to_json_dict(self) -> dict:
        return {
            "key": self.key,
            "criterion": self.criterion,
            "status": self.status,
            "detail": self.detail,
        }


@dataclass
class VerifyReport:
    items: list[VerifyItem] = field(default_factory=list)

    def ok(self) -> bool:
        return all(item.status != FAIL for item in self.items)

    def add(self, key: str, criterion: int, condition: bool, detail: str, note: bool = False):
        status = (NOTE if note else PASS) if condition else FAIL
        self.items.append(VerifyItem(key, criterion, status, detail))

    def to_json_dict(self) -> dict:
        return {
            "ok": self.ok(),
            "counts": {
                PASS: sum(1 for i in self.items if i.status == PASS),
                NOTE: sum(1 for i in self.items if i.status == NOTE),
                FAIL: sum(1 for i in self.items if i.status == FAIL),
            },
            "items": [i.to_json_dict() for i in self.items],
        }


# The dimension / smallest-representation table rows, instantiated over the
# verification parameter ranges.
def _table_rows() -> list[tuple[str, SimpleType, int, int, bool]]:
    rows: list[tuple[str, SimpleType, int, int, bool]] = []
    for n in range(2, 9):
        rows.append((f"sl_{n}", SimpleType("A", n - 1), n * n - 1, n, False))
    for n in range(2, 6):
        rows.append((f"sp_{2 * n}", SimpleType("C", n), n * (2 * n + 1), 2 * n, False))
    for n in range(5, 11):
        st = SimpleType("B", n // 2) if n % 2 else SimpleType("D", n // 2)
        honest = 4 if n in (5, 6) else n
        rows.append((f"so_{n}", st, n * (n - 1) // 2, honest, n in (5, 6)))
    rows.append(("g2", SimpleType("G", 2), 14, 7, False))
    rows.append(("f4", SimpleType("F", 4), 52, 26, False))
    rows.append(("e6", SimpleType("E", 6), 78, 27, False))
    rows.append(("e7", SimpleType("E", 7), 133, 56, False))
    rows.append(("e8", SimpleType("E", 8), 248, 248, False))
    return rows


def _check_table(report: VerifyReport, config: RunConfig) -> None:
    for label, st, dim_expected, d_expected, diverges in _table_rows():
        rs = build_root_system(st)
        dim = algebra_dim(rs)
        d, _ = smallest_nontrivial_dim(rs)
        ok = dim == dim_expected and d == d_expected
        detail = f"dim {dim} (expected {dim_expected}), smallest nontrivial {d} (expected {d_expected})"
        if diverges:
            detail += f"; tabulated value is {int(label[3:])} - honest minimum reported instead"
        report.add(f"table:{label}", 1, ok, detail, note=diverges)


def _check_noextend_sl_so(report: VerifyReport, config: RunConfig) -> None:
    for n in range(2, 10):
        r = check_extension(f"sl-so:{n}", config)
        dim_p = (n - 1) * (n + 2) // 2
        sym_dim = n * (n + 1) // 2
        checks = [r.verdict == "NO_EXTENSION", r.dim_p == dim_p]
        exacts = [(f, e) for f, e in r.candidates if e.kind == "exact"]
        bounds = [(f, e) for f, e in r.candidates if e.kind == "lower_bound"]
        checks.append(len(exacts) == 1 and exacts[0][1].value == sym_dim)
        if n % 2 == 0:
            checks.append(not bounds)
            detail = f"{r.verdict}: exact {sym_dim} != dim p {dim_p}"
        else:
            expected_bound = n * (n - 1) + n * (n - 1) * (n - 2) // 2
            checks.append(len(bounds) == 1 and bounds[0][1].value == expected_bound)
            checks.append(expected_bound > dim_p)
            detail = (
                f"{r.verdict}: c=0 exact {sym_dim} != {dim_p}; "
                f"c>=1 bound {expected_bound} > {dim_p}"
            )
        report.add(f"noextendSO:{n}", 2, all(checks), detail)


def _check_noextend_sl_sp(report: VerifyReport, config: RunConfig) -> None:
    for n in range(2, 6):
        r = check_extension(f"sl-sp:{n}", config)
        dim_p = (n - 1) * (2 * n + 1)
        honest = n * (2 * n - 1)
        claimed = 2 * n * (2 * n - 1)
        lift = [(f, e) for f, e in r.candidates if e.paper_claimed_value is not None]
        checks = [
            r.verdict == "NO_EXTENSION",
            r.dim_p == dim_p,
            len(lift) == 1,
            lift[0][1].value == honest,
            lift[0][1].paper_claimed_value == claimed,
            all(e.eliminates() for _, e in r.candidates),
        ]
        extra = len(r.candidates) - 1
        detail = (
            f"{r.verdict}: exact {honest} != dim p {dim_p} "
            f"(published value {claimed} recorded alongside)"
        )
        if extra:
            detail += f"; {extra} additional lattice candidate(s) eliminated"
        report.add(f"noextendSP:{n}", 3, all(checks), detail, note=True)


def _check_gaps(report: VerifyReport, config: RunConfig) -> None:
    for n in range(2, 10):
        r = check_extension(f"so-so:{n}", config)
        gap = r.gap
        claimed_ok = gap["claimed_smallest_dim"] == n + 1 and gap["dim_p"] == n
        if n >= 6:
            ok = claimed_ok and r.verdict == "NO_EXTENSION" and gap["smallest_nontrivial_dim"] == n + 1
            detail = f"{r.verdict}: dim p {n} < smallest nontrivial {n + 1}"
            report.add(f"gap:so-so:{n}", 4, ok, detail)
        else:
            honest = gap["smallest_nontrivial_dim"]
            ok = (
                claimed_ok
                and gap["diverges_from_table"]
                and r.verdict == "INCONCLUSIVE"
                and honest < n + 1
            )
            detail = (
                f"{r.verdict}: tabulated gap {n} < {n + 1} recorded, but the honest smallest "
                f"nontrivial dimension of so_{n + 1} is {honest} <= dim p; divergence noted"
            )
            report.add(f"gap:so-so:{n}", 4, ok, detail, note=True)
    r = check_extension("e6-f4", config)
    ok = (
        r.verdict == "NO_EXTENSION"
        and r.gap["dim_p"] == 26
        and r.gap["smallest_nontrivial_dim"] == 27
    )
    report.add("gap:e6-f4", 4, ok, f"{r.verdict}: 26 < 27")


def _complex_rows() -> list[tuple[str, SimpleType, bool]]:
    rows: list[tuple[str, SimpleType, bool]] = []
    for n in range(2, 9):
        rows.append((f"sl_{n}", SimpleType("A", n - 1), False))
    for n in range(2, 6):
        rows.append((f"sp_{2 * n}", SimpleType("C", n), False))
    for n in range(5, 11):
        st = SimpleType("B", n // 2) if n % 2 else SimpleType("D", n // 2)
        rows.append((f"so_{n}", st, n in (5, 6)))
    rows.append(("g2", SimpleType("G", 2), False))
    rows.append(("f4", SimpleType("F", 4), False))
    rows.append(("e6", SimpleType("E", 6), False))
    rows.append(("e7", SimpleType("E", 7), False))
    rows.append(("e8", SimpleType("E", 8), False))
    return rows


def _check_complex(report: VerifyReport, config: RunConfig) -> None:
    for label, st, diverges in _complex_rows():
        r = check_complex_case(st, config)
        g = r.gap
        ok = (
            r.verdict == "NO_EXTENSION"
            and g["d_squared"] == g["smallest_nontrivial_dim"] ** 2
            and g["d_squared"] > g["dim_g"]
            and g["diverges_from_table"] == diverges
        )
        detail = f"{r.verdict}: d^2 = {g['d_squared']} > dim g = {g['dim_g']}"
        if diverges:
            detail += (
                f" (honest d = {g['smallest_nontrivial_dim']}, tabulated "
                f"{g['claimed_smallest_dim']}; inequality still strict)"
            )
        report.add(f"complex:{label}", 5, ok, detail, note=diverges)


def _dominant_weights_up_to(rs, cap: int):
    """All dominant integral weights with dimension <= cap, by monotone search."""
    out = []

    def rec(prefix: list[int], idx: int):
        trial = prefix + [0] * (rs.rank - idx)
        w = rs.weight(trial, basis="fundamental")
        if dim_of(rs, w) > cap:
            return
        if idx == rs.rank:
            out.append(w)
            return
        c = 0
        while True:
            cand = prefix + [c]
            wc = rs.weight(cand + [0] * (rs.rank - idx - 1), basis="fundamental")
            if dim_of(rs, wc) > cap:
                break
            rec(cand, idx + 1)
            c += 1

    rec([], 0)
    return out


def _check_oracles(report: VerifyReport, config: RunConfig, dim_cap: int = 500) -> None:
    for st in [SimpleType("A", 1), SimpleType("A", 2), SimpleType("A", 3), SimpleType("B", 2), SimpleType("G", 2)]:
        rs = build_root_system(st)
        reps = _dominant_weights_up_to(rs, dim_cap)
        checked_orbits = 0
        ok = True
        for lam in reps:
            rep = HighestWeightRep(rs, lam)
            expected = dim_of(rs, lam)
            ms = freudenthal_multiplicities(rep, freudenthal_cap=config.freudenthal_cap)
            if ms.total() != expected:
                ok = False
                break
            for w in ms.entries:
                if not is_dominant(rs, w):
                    continue  # orbit invariants are checked once per orbit
                if orbit_size(rs, w) != len(weyl_orbit(rs, w, orbit_cap=config.orbit_cap)):
                    ok = False
                    break
                checked_orbits += 1
            if not ok:
                break
        report.add(
            f"oracle:{st}",
            6,
            ok,
            f"{len(reps)} representations (dim <= {dim_cap}): multiplicity totals match the "
            f"dimension formula; {checked_orbits} orbit sizes match enumeration",
        )


def _check_isotropy(report: VerifyReport, config: RunConfig) -> None:
    for kind in ("sl-so", "sl-sp"):
        for n in range(2, 7):
            pair = make_pair(f"{kind}:{n}")
            ws = isotropy_weights(pair)
            total_ok = ws.total() == pair.dim_p
            neg_ok = complexification_vanishing(ws)
            sum_vec = None
            for w, m in ws.sorted_items():
                term = vscale(Fraction(m), w.coords)
                sum_vec = term if sum_vec is None else vadd(sum_vec, term)
            zero_ok = all(x == 0 for x in sum_vec)
            report.add(
                f"isotropy:{kind}:{n}",
                7,
                total_ok and neg_ok and zero_ok,
                f"count {ws.total()} = dim p {pair.dim_p}; negation-closed; sums to zero",
            )
    for name in ("A1", "A2", "A3", "G2"):
        st = SimpleType(name[0], int(name[1]))
        pair = make_pair(f"complex:{name}")
        ws = isotropy_weights(pair)
        rs = pair.g
        fr = freudenthal_multiplicities(
            HighestWeightRep(rs, rs.highest_root()), freudenthal_cap=config.freudenthal_cap
        )
        ok = ws == fr and ws.total() == pair.dim_p
        report.add(
            f"isotropy:complex:{name}",
            7,
            ok,
            f"adjoint multiset of {ws.total()} weights matches the multiplicity recursion",
        )


def _random_multiset(rng: random.Random, gens: int, count: int):
    return [tuple(rng.randint(-5, 5) for _ in range(gens)) for _ in range(count)]


def _check_chern_properties(report: VerifyReport, trials: int = 1000) -> None:
    rng = random.Random(20240817)
    odd_ok = True
    equiv_ok = True
    for _ in range(trials):
        gens = rng.randint(1, 3)
        count = rng.randint(1, 4)
        half = _random_multiset(rng, gens, count)
        symmetric = half + [tuple(-x for x in w) for w in half]
        if not complexification_vanishing(symmetric):
            odd_ok = False
            break
        w1 = _random_multiset(rng, gens, rng.randint(1, 8))
        permuted = list(w1)
        rng.shuffle(permuted)
        if not reps_equal_by_chern(w1, permuted):
            equiv_ok = False
            break
        w2 = _random_multiset(rng, gens, len(w1))
        equal_classes = reps_equal_by_chern(w1, w2)  # raises on any disagreement
        if equal_classes != multisets_equal(w1, w2):
            equiv_ok = False
            break
    report.add(
        "chern:odd-vanishing",
        8,
        odd_ok,
        f"{trials} negation-closed multisets: all odd graded pieces vanish",
    )
    report.add(
        "chern:uniqueness",
        8,
        equiv_ok,
        f"{trials} multiset pairs: class equality coincides with multiset equality",
    )
    kernel_ok = True
    for n in range(1, 9):
        fk = flat_kernel(n)
        gens = [(f"p{i}", 4 * i) for i in range(1, n // 2 + 1)]
        if list(fk.kernel_generators) != gens:
            kernel_ok = False
        if n % 2 == 0 and (fk.euler_in_kernel or fk.euler_square_identity != f"e^2 = p{n // 2}"):
            kernel_ok = False
        if n % 2 == 1 and fk.euler_class_degree is not None:
            kernel_ok = False
    report.add(
        "chern:flat-kernel",
        8,
        kernel_ok,
        "ranks 1..8: kernel generated by p_1..p_{floor(n/2)}; Euler class survives "
        "only for even rank, with e^2 identified with p_{n/2}",
    )


def _check_bounds(report: VerifyReport) -> None:
    g = 2
    q = MilnorWoodQuery(1, 2 - 2 * g)
    bound = milnor_wood_bound(q)
    coeff_ok = milnor_wood_bound(MilnorWoodQuery(1, 1)) == Fraction(1, 2)
    tangent_obstructed = obstructs_flat(q, 2 - 2 * g)
    report.add(
        "bounds:milnor-wood",
        9,
        bound == 1 and coeff_ok and tangent_obstructed,
        f"k=1, eu(TM)={2 - 2 * g}: bound {bound}; coefficient 1/2 exact; "
        "unit tangent bundle obstructed",
    )
    r1 = smillie_ratio(1, math.pi)
    report.add(
        "bounds:smillie-k1",
        9,
        abs(r1 - 0.5) <= 1e-12,
        f"ratio {r1!r} within 1e-12 of 1/2",
    )
    r2 = smillie_ratio(2, 0.268935)
    report.add(
        "bounds:smillie-k2",
        9,
        r2 > 1,
        f"ratio {r2:.6f} > 1: no obstruction from this bound in dimension 4",
    )


def _check_classification(report: VerifyReport) -> None:
    ok = True
    bad = None
    for name, expected in TABLE_SAMPLES:
        try:
            got, _ = lookup_type(name)
        except OutOfTable:
            got = "OutOfTable"
        if got != expected:
            ok, bad = False, (name, got, expected)
            break
    report.add(
        "classify:rows",
        10,
        ok,
        f"{len(TABLE_SAMPLES)} sampled rows round-trip" if ok else f"mismatch: {bad}",
    )
    out_ok = True
    for name in OUT_OF_TABLE_SAMPLES:
        try:
            lookup_type(name)
            out_ok = False
        except OutOfTable:
            pass
    report.add(
        "classify:out-of-table",
        10,
        out_ok,
        f"{len(OUT_OF_TABLE_SAMPLES)} excluded parameter sets rejected",
    )
    prod_ok = product_type(["SL(3,R)", "SU(2,1)"]) == "Type1"
    report.add("classify:product", 10, prod_ok, "SL(3,R) x SU(2,1) -> Type1")


_SECTIONS = {
    1: _check_table,
    2: _check_noextend_sl_so,
    3: _check_noextend_sl_sp,
    4: _check_gaps,
    5: _check_complex,
    6: _check_oracles,
    7: _check_isotropy,
    8: lambda report, config: _check_chern_properties(report),
    9: lambda report, config: _check_bounds(report),
    10: lambda report, config: _check_classification(report),
}


def run_verification(config: RunConfig | None = None, criteria: list[int] | None = None) -> VerifyReport:
    config = config or RunConfig()
    report = VerifyReport()
    for c in sorted(criteria or _SECTIONS.keys()):
        section = _SECTIONS.get(c)
        if section is None:
            raise ValueError(f"unknown criterion {c}")
        section(report, config)
    return report


def run_pairs_batch(specs: list[str], config: RunConfig | None = None) -> list[dict]:
    """check_extension over a list of pair specs, in given order."""
    config = config or RunConfig()
    return [check_extension(spec, config).to_json_dict() for spec in specs]


def expand_pair_range(spec: str) -> list[str]:
    """'sl-so:2..9' -> ['sl-so:2', ..., 'sl-so:9']; plain ids pass through."""
    if ".." in spec:
        head, rng = spec.rsplit(":", 1)
        lo, hi = rng.split("..")
        return [f"{head}:{i}" for i in range(int(lo), int(hi) + 1)]
    return [spec]
