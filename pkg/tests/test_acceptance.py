"""Acceptance criteria, one test each.

Every test prints a single ``criterion N: PASS|FAIL`` line.  Run the file
directly (``python3 tests/test_acceptance.py``) to get only those lines.
"""

import random
import time
from fractions import Fraction

import pytest

from sqzero.boundary import c_of, d_candidates, descend_closure, verify_witness
from sqzero.dims import orbit_dim_formula, orbit_dim_oracle
from sqzero.laurent import Laurent
from sqzero.normal import classify, normalize, verify_normalization
from sqzero.orbital import (
    ClosureComponent,
    closure_chain,
    closure_move,
    codim1_intersection_analysis,
    codim1_pairs,
    enumerate_sdt,
    external_pairs_formula,
    format_sdt,
    lp_of,
    maximal_above,
    parse_sdt,
    sdt_of,
    steinberg_subspace,
    union_patterns,
    w_of,
)
from sqzero.rank import closure_set, covers
from sqzero.dims import half_dim
from sqzero.roots import (
    Torus,
    Unipotent,
    combination,
    conjugate,
    inverse_product,
    iter_generators,
    positive_roots,
    product,
    root_vector,
    table_action,
    x_of,
)
from sqzero.slp import (
    enumerate_slp,
    format_pattern,
    involution_count,
    is_maximal,
    parse,
    total_bridges,
    total_crossings,
)

EXAMPLE = "n=6; (1,2)(-1,-2)(3,-6)(-3,6)(-4,4)"
SDT7 = "n=7; col2=[2,3h,4h,7]"
STEINBERG7 = {
    "e_2-e_1", "e_3-e_1", "e_4-e_1", "e_7-e_1", "e_7-e_5", "e_7-e_6",
    "2e_2", "2e_3", "2e_4", "2e_7",
    "e_3+e_2", "e_4+e_2", "e_7+e_2", "e_4+e_3", "e_7+e_3", "e_7+e_4",
}
CASE_TAGS = [
    "FC", "FPa", "FPb", "FMa", "FMb", "LS", "LC", "LP", "LMa", "LMb",
    "CS", "CCP", "CCM", "CPP", "CMC", "CMPa1", "CMPa2", "CMPb", "CMMa1", "CMMa2", "CMMb",
    "M2I", "M3II", "M3III",
]
EXCLUSION_TAGS = {"FN", "LN"}


# Collected for the terminal summary in conftest, since pytest captures stdout.
REPORT_LINES = []


def report(num, ok, detail, echo=False):
    line = f"criterion {num}: {'PASS' if ok else 'FAIL'} - {detail}"
    REPORT_LINES.append(line)
    if echo:
        print(line, flush=True)
    return line


def criterion_1():
    L = parse(EXAMPLE)
    b, c = total_bridges(L), total_crossings(L)
    best = min(_timed(lambda: (total_bridges(L), total_crossings(L))) for _ in range(50))
    return b == 1 and c == 2 and best < 1e-3, f"b={b} c={c} time={best * 1e6:.0f}us"


def _timed(f):
    t = time.perf_counter()
    f()
    return time.perf_counter() - t


def criterion_2():
    bad, total = [], 0
    for n in range(1, 5):
        for L in enumerate_slp(n):
            total += 1
            if orbit_dim_formula(L) != orbit_dim_oracle(L):
                bad.append(format_pattern(L))
    return not bad, f"{total} patterns, {len(bad)} mismatches"


def _random_borel(n, rng):
    fs = [Torus(i, Fraction(rng.choice([1, 2, 3, -1, -2]), rng.choice([1, 2, 3]))) for i in range(1, n + 1)]
    fs += [Unipotent(r, Fraction(rng.randint(-3, 3), rng.choice([1, 2]))) for r in positive_roots(n)]
    rng.shuffle(fs)
    return fs


def criterion_3(samples_small=10, samples_n4=100):
    rng = random.Random(2024)
    bad, checked = [], 0
    for n in range(1, 5):
        reps = samples_n4 if n == 4 else samples_small
        for L in enumerate_slp(n):
            mats = [x_of(L)]
            for _ in range(reps):
                fs = _random_borel(n, rng)
                mats.append(product(fs, n) @ x_of(L) @ inverse_product(fs, n))
            for X in mats:
                checked += 1
                res = normalize(X)
                if not (classify(X) == L == res.pattern and verify_normalization(X, res)):
                    bad.append(format_pattern(L))
    return not bad, f"{checked} matrices (n<=3 every L x{samples_small}, n=4 every L x{samples_n4}), {len(bad)} failures"


def criterion_4():
    a = Laurent.monomial(1, 1)  # a symbolic coefficient
    bad, checked = 0, 0
    for n in range(1, 5):
        for g in iter_generators(n, a):
            for beta in positive_roots(n):
                checked += 1
                lhs = conjugate([g], root_vector(beta, n), n)
                rhs = combination(table_action(g, beta), n)
                if lhs != rhs:
                    bad += 1
    return bad == 0, f"{checked} generator/root pairs, {bad} mismatches"


def criterion_5():
    bad, total = [], 0
    for n in range(1, 5):
        for L in enumerate_slp(n):
            total += 1
            if descend_closure(L) != closure_set(L):
                bad.append(format_pattern(L))
    return not bad, f"{total} patterns, {len(bad)} mismatches"


def criterion_6():
    first = {}  # tag -> (minimal n, some instance at that n verifies)
    excluded_covers = []
    seen_excl = set()
    for n in range(1, 5):
        for L in enumerate_slp(n):
            cov = covers(L)
            for c in d_candidates(L):
                if c.excluded:
                    seen_excl.add(c.case)
                    if c.pattern in cov:
                        excluded_covers.append((format_pattern(L), c.case))
                    continue
                m, ok = first.setdefault(c.case, (n, False))
                if m == n and not ok and c.witness is not None:
                    first[c.case] = (n, verify_witness(L, c.pattern, c.witness))
    missing = [t for t in CASE_TAGS if not first.get(t, (0, False))[1]]
    ok = not missing and not excluded_covers and EXCLUSION_TAGS <= seen_excl
    mins = ", ".join(f"{t}@{first[t][0]}" for t in CASE_TAGS if t in first)
    detail = f"{len(CASE_TAGS) - len(missing)}/{len(CASE_TAGS)} tags verified at minimal n ({mins})"
    return ok, detail + f"; excluded candidates that are covers: {len(excluded_covers)}"


def criterion_7():
    bad, members = [], 0
    for n in range(1, 5):
        for L in enumerate_slp(n):
            d = orbit_dim_formula(L)
            for Lp in c_of(L):
                members += 1
                if d - orbit_dim_formula(Lp) != 1:
                    bad.append((format_pattern(L), format_pattern(Lp)))
    return not bad, f"{members} boundary members, {len(bad)} with drop != 1"


def criterion_8():
    got = [len(enumerate_slp(n)) for n in range(1, 6)]
    oracle = [involution_count(n) for n in range(1, 6)]
    return got == oracle == [2, 6, 20, 76, 312], f"counts {got}, recurrence {oracle}"


def criterion_9():
    problems = []
    for n in range(1, 6):
        Ts = enumerate_sdt(n)
        Ms = [L for L in enumerate_slp(n) if is_maximal(L)]
        if len(Ts) != len(Ms):
            problems.append(f"n={n} sizes")
        if not all(sdt_of(lp_of(T)) == T for T in Ts) or not all(lp_of(sdt_of(L)) == L for L in Ms):
            problems.append(f"n={n} roundtrip")
    T = parse_sdt(SDT7)
    if w_of(T) != [7, 4, 3, 2, -1, -5, -6]:
        problems.append("word")
    if {str(r) for r in steinberg_subspace(T)} != STEINBERG7:
        problems.append("steinberg")
    if format_pattern(lp_of(T)) != "n=7; (1,2)(-1,-2)(-3,3)(-4,4)(6,7)(-6,-7)":
        problems.append("L_T")
    if sorted(c.label() for c in external_pairs_formula(T)) != ["(-4,4)", "(6,7)"]:
        problems.append("E'")
    if format_sdt(closure_move(T, 4)) != "n=7; col2=[2,3h,7]":
        problems.append("T<4>")
    if format_sdt(closure_move(T, 7)) != "n=7; col2=[2,3h,4h]":
        problems.append("T<7>")
    return not problems, "bijection n<=5 and the n=7 example" + (f"; problems: {problems}" if problems else " reproduced")


def _printed_lines(T):
    V = lambda *labels: ClosureComponent.variety(closure_move(T, *labels))
    B = lambda text: ClosureComponent.of_pattern(parse(text))
    return [
        [V(4), B("n=7; (1,2)(-1,-2)(-3,3)(-4,4)(-7,7)")],
        [V(7), V(3, 4), B("n=7; (1,2)(-1,-2)(-3,3)(-7,7)")],
        [V(4, 7), B("n=7; (1,2)(-1,-2)(-7,7)"), B("n=7; (-2,2)(6,7)(-6,-7)")],
        [V(3, 4, 7), B("n=7; (-2,2)(-7,7)")],
        [B("n=7; (-2,2)")],
    ]


def criterion_10():
    T = parse_sdt(SDT7)
    chain = closure_chain(T)
    notes = []
    ok = True
    for i, (printed, ours) in enumerate(zip(_printed_lines(T), chain), 1):
        k = T.k - i
        same = set(printed) == set(ours)
        union = union_patterns(printed, k) == union_patterns(ours, k)
        if not same:
            ok = False
            extra = sorted(str(c) for c in set(ours) - set(printed))
            notes.append(f"line {i} differs (printed list lacks {extra}; union {'equal' if union else 'smaller'})")
    return ok, "; ".join(notes) if notes else "all five lines match"


def criterion_11():
    pairs, bad_pairs = 0, 0
    for n in range(1, 5):
        for k in range(n + 1):
            for _, _, tops in codim1_pairs(n, k):
                pairs += 1
                if len(tops) != 1:
                    bad_pairs += 1
    classified, bad_cls = 0, 0
    for n in range(1, 5):
        for L in enumerate_slp(n):
            if total_crossings(L) + total_bridges(L) != 1:
                continue
            classified += 1
            a = codim1_intersection_analysis(L)
            if set(a.maxima) != maximal_above(L) or not a.intersection_is_orbit_closure:
                bad_cls += 1
    ok = bad_pairs == 0 and bad_cls == 0
    return ok, f"{pairs} codim-1 pairs ({bad_pairs} bad), {classified} patterns classified ({bad_cls} bad)"


CRITERIA = {i: globals()[f"criterion_{i}"] for i in range(1, 12)}
KNOWN_FAILURES = {10: "the printed list omits a component in its fourth line and differs in its fifth"}


def _params():
    for i in CRITERIA:
        marks = [pytest.mark.xfail(strict=True, reason=KNOWN_FAILURES[i])] if i in KNOWN_FAILURES else []
        yield pytest.param(i, marks=marks, id=f"criterion_{i}")


@pytest.mark.parametrize("num", list(_params()))
def test_criterion(num):
    ok, detail = CRITERIA[num]()
    report(num, ok, detail)
    assert ok, detail


if __name__ == "__main__":
    results = [CRITERIA[i]() for i in CRITERIA]
    for i, (ok, detail) in zip(CRITERIA, results):
        report(i, ok, detail, echo=True)
