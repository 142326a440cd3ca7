import pytest
from hypothesis import given
from hypothesis import strategies as st

from sqzero.dims import half_dim, orbit_dim_formula
from sqzero.errors import DomainError, ParseError, PreconditionError
from sqzero.orbital import (
    H,
    V1,
    V2,
    ClosureComponent,
    TwoColumnSDT,
    closure_chain,
    closure_decomposition,
    closure_move,
    codim1_case,
    codim1_intersection_analysis,
    codim1_pairs,
    dense_orbit_rep,
    enumerate_sdt,
    external_pairs_formula,
    format_sdt,
    lp_of,
    maximal_above,
    move_horizontal,
    move_vertical,
    parse_sdt,
    render_sdt,
    sdt_from_json,
    sdt_of,
    sdt_to_json,
    steinberg_subspace,
    union_patterns,
    variety_closure_intersection,
    w_of,
    word_subspace,
)
from sqzero.rank import closure_set
from sqzero.roots import decompose
from sqzero.slp import enumerate_slp, format_pattern, is_maximal, parse, positive_external_arcs

EX = "n=7; col2=[2,3h,4h,7]"
STEINBERG_EX = {
    "e_2-e_1", "e_3-e_1", "e_4-e_1", "e_7-e_1", "e_7-e_5", "e_7-e_6",
    "2e_2", "2e_3", "2e_4", "2e_7",
    "e_3+e_2", "e_4+e_2", "e_7+e_2", "e_4+e_3", "e_7+e_3", "e_7+e_4",
}
_SDT = {n: enumerate_sdt(n) for n in range(1, 6)}


@st.composite
def tableaux(draw, max_n=5):
    n = draw(st.integers(1, max_n))
    return draw(st.sampled_from(_SDT[n]))


def test_parse_format_example():
    T = parse_sdt(EX)
    assert format_sdt(T) == EX
    assert parse_sdt(EX + ";") == T
    assert T.t2 == [2, 3, 4, 7]
    assert T.labels(H) == [3, 4] and T.labels(V2) == [2, 7]
    assert T.k == 6 and T.h_p == 4
    assert T.shape == (8, 6)


@pytest.mark.parametrize("bad", ["n=2; col2=[3]", "n=2; col2=[1,1]", "n=2; col2=[x]", "col2=[1]"])
def test_parse_errors(bad):
    with pytest.raises(ParseError):
        parse_sdt(bad)


@pytest.mark.parametrize("bad", ["n=2; col2=[1]", "n=3; col2=[1h,2]", "n=2; col2=[2h]"])
def test_non_standard_rejected(bad):
    with pytest.raises(DomainError):
        parse_sdt(bad)


def test_json_roundtrip():
    T = parse_sdt(EX)
    assert sdt_from_json(sdt_to_json(T)) == T


def test_word_examples():
    assert w_of(parse_sdt(EX)) == [7, 4, 3, 2, -1, -5, -6]
    assert w_of(parse_sdt("n=2; col2=[]")) == [-1, -2]
    assert w_of(parse_sdt("n=1; col2=[1h]")) == [1]


def test_steinberg_examples():
    T = parse_sdt(EX)
    assert {str(r) for r in steinberg_subspace(T)} == STEINBERG_EX
    assert steinberg_subspace(parse_sdt("n=3; col2=[]")) == frozenset()
    assert {str(r) for r in steinberg_subspace(parse_sdt("n=1; col2=[1h]"))} == {"2e_1"}


def test_lp_of_examples():
    assert format_pattern(lp_of(parse_sdt(EX))) == "n=7; (1,2)(-1,-2)(-3,3)(-4,4)(6,7)(-6,-7)"
    assert lp_of(parse_sdt("n=1; col2=[1h]")) == parse("n=1; (-1,1)")
    assert lp_of(parse_sdt("n=2; col2=[2]")) == parse("n=2; (1,2)(-1,-2)")


def test_sdt_of_rejects_non_maximal():
    with pytest.raises(PreconditionError):
        sdt_of(parse("n=2; (-2,2)"))


def test_external_pairs_example():
    T = parse_sdt(EX)
    assert sorted(c.label() for c in external_pairs_formula(T)) == ["(-4,4)", "(6,7)"]
    assert external_pairs_formula(T) == positive_external_arcs(lp_of(T))


def test_dense_orbit_rep_example():
    T = parse_sdt(EX)
    roots = {str(r) for r in decompose(dense_orbit_rep(T), 7)}
    assert roots == {"e_2-e_1", "2e_3", "2e_4", "e_7-e_6"}
    assert roots <= STEINBERG_EX
    assert dense_orbit_rep(parse_sdt("n=3; col2=[]")).is_zero()


def test_closure_moves_example():
    T = parse_sdt(EX)
    assert format_sdt(closure_move(T, 4)) == "n=7; col2=[2,3h,7]"
    assert format_sdt(closure_move(T, 7)) == "n=7; col2=[2,3h,4h]"
    assert format_sdt(closure_move(T, 3, 4)) == "n=7; col2=[2,7]"
    assert format_sdt(closure_move(T, 4, 7)) == "n=7; col2=[2,3h]"
    assert format_sdt(closure_move(T, 3, 4, 7)) == "n=7; col2=[2]"
    assert move_horizontal(T) == closure_move(T, 4)
    assert move_vertical(T, 7) == closure_move(T, 7)


def test_closure_move_preconditions():
    T = parse_sdt(EX)
    with pytest.raises(PreconditionError):
        closure_move(T, 2)  # vertical below the top horizontal domino
    with pytest.raises(PreconditionError):
        closure_move(T, 3)  # horizontal but not the top one
    with pytest.raises(PreconditionError):
        move_horizontal(parse_sdt("n=2; col2=[2]"))
    assert format_sdt(move_vertical(parse_sdt("n=2; col2=[2]"), 2)) == "n=2; col2=[]"


def test_intersection_example_drop1():
    ci = variety_closure_intersection(parse_sdt(EX), 1)
    assert [str(c) for c in ci.components] == [
        "V[n=7; col2=[2,3h,7]]",
        "B[n=7; (1,2)(-1,-2)(-3,3)(-4,4)(-7,7)]",
    ]
    assert not ci.irreducible and ci.contains_orbital_variety and not ci.is_orbital_variety


def test_intersection_example_drop2():
    ci = variety_closure_intersection(parse_sdt(EX), 2)
    assert [str(c) for c in ci.components] == [
        "V[n=7; col2=[2,3h,4h]]",
        "V[n=7; col2=[2,7]]",
        "B[n=7; (1,2)(-1,-2)(-3,3)(-7,7)]",
    ]
    assert not ci.is_union_of_orbital_varieties


def test_intersection_precondition():
    with pytest.raises(PreconditionError):
        variety_closure_intersection(parse_sdt("n=2; col2=[1h]"), 2)
    with pytest.raises(DomainError):
        variety_closure_intersection(parse_sdt(EX), 3)


def test_all_horizontal_gives_single_orbital_variety():
    for n in range(1, 6):
        for T in _SDT[n]:
            if T.t2 and all(T.placement(b) == H for b in T.t2):
                ci = variety_closure_intersection(T, 1)
                assert ci.is_orbital_variety and len(ci.components) == 1


def test_decomposition_example():
    T = parse_sdt(EX)
    got = {k: [str(c) for c in closure_decomposition(T, k)] for k in range(5, 0, -1)}
    assert got == {
        5: ["V[n=7; col2=[2,3h,7]]", "B[n=7; (1,2)(-1,-2)(-3,3)(-4,4)(-7,7)]"],
        4: ["V[n=7; col2=[2,7]]", "V[n=7; col2=[2,3h,4h]]"],
        3: ["V[n=7; col2=[2,3h]]", "B[n=7; (-2,2)(6,7)(-6,-7)]"],
        2: ["V[n=7; col2=[7]]", "V[n=7; col2=[2]]"],
        1: ["B[n=7; (-2,2)]"],
    }


def test_chain_example():
    lines = [[str(c) for c in line] for line in closure_chain(parse_sdt(EX))]
    assert lines == [
        ["V[n=7; col2=[2,3h,7]]", "B[n=7; (1,2)(-1,-2)(-3,3)(-4,4)(-7,7)]"],
        ["V[n=7; col2=[2,7]]", "B[n=7; (1,2)(-1,-2)(-3,3)(-7,7)]", "V[n=7; col2=[2,3h,4h]]"],
        ["B[n=7; (-2,2)(6,7)(-6,-7)]", "B[n=7; (1,2)(-1,-2)(-7,7)]", "V[n=7; col2=[2,3h]]"],
        ["V[n=7; col2=[7]]", "B[n=7; (-2,2)(-7,7)]", "V[n=7; col2=[2]]"],
        ["B[n=7; (-7,7)]", "B[n=7; (-2,2)]"],
    ]


def test_chain_lines_cover_the_closure():
    T = parse_sdt(EX)
    L = lp_of(T)
    for i, line in enumerate(closure_chain(T)):
        k = T.k - 1 - i
        target = frozenset(P for P in closure_set(L) if len(P.arcs) == k)
        assert union_patterns(line, k) == target


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_bijection(n):
    Ts = _SDT[n]
    Ms = [L for L in enumerate_slp(n) if is_maximal(L)]
    assert len(Ts) == len(Ms)
    assert all(sdt_of(lp_of(T)) == T for T in Ts)
    assert all(lp_of(sdt_of(L)) == L for L in Ms)


@given(tableaux())
def test_tableau_text_roundtrip(T):
    assert parse_sdt(format_sdt(T)) == T


@given(tableaux())
def test_maximal_dimension(T):
    L = lp_of(T)
    assert is_maximal(L)
    assert orbit_dim_formula(L) == half_dim(T.k, T.n)
    assert len(L.arcs) == T.k


@given(tableaux())
def test_word_decreasing_and_signed_permutation(T):
    w = w_of(T)
    assert sorted(abs(x) for x in w) == list(range(1, T.n + 1))
    assert all(a > b for a, b in zip(w, w[1:]))


@given(tableaux())
def test_steinberg_rules_match_word_action(T):
    assert steinberg_subspace(T) == word_subspace(w_of(T))


@given(tableaux())
def test_dense_rep_in_steinberg(T):
    assert set(decompose(dense_orbit_rep(T), T.n)) <= steinberg_subspace(T)


@given(tableaux())
def test_external_pairs_formula_matches_pattern(T):
    assert external_pairs_formula(T) == positive_external_arcs(lp_of(T))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_drop1_components_are_poset_maxima(n):
    for T in _SDT[n]:
        if T.k < 1:
            continue
        ci = variety_closure_intersection(T, 1)
        true = closure_decomposition(T, T.k - 1)
        assert set(ci.components) == set(true)
        assert ci.irreducible == (len(true) == 1)
        assert ci.contains_orbital_variety == any(c.kind == "variety" for c in true)
        assert ci.is_orbital_variety == (len(true) == 1 and true[0].kind == "variety")


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_drop2_union_is_downset(n):
    for T in _SDT[n]:
        if T.k < 2:
            continue
        ci = variety_closure_intersection(T, 2)
        k = T.k - 2
        target = frozenset(P for P in closure_set(lp_of(T)) if len(P.arcs) == k)
        assert union_patterns(ci.components, k) == target


def test_drop2_union_flag_is_sufficient_only():
    missed = []
    for n in range(1, 6):
        for T in _SDT[n]:
            if T.k < 2:
                continue
            ci = variety_closure_intersection(T, 2)
            all_varieties = all(c.kind == "variety" for c in closure_decomposition(T, T.k - 2))
            if ci.is_union_of_orbital_varieties:
                assert all_varieties
            elif all_varieties:
                missed.append(format_sdt(T))
    assert len(missed) == 12
    assert "n=3; col2=[1h,3]" in missed


def test_component_str():
    T = parse_sdt("n=2; col2=[2]")
    assert str(ClosureComponent.variety(T)) == "V[n=2; col2=[2]]"
    assert str(ClosureComponent.of_pattern(parse("n=2; (-2,2)"))) == "B[n=2; (-2,2)]"
    assert ClosureComponent.of_pattern(lp_of(T)) == ClosureComponent.variety(T)


def test_render_sdt_example():
    assert render_sdt(parse_sdt("n=2; col2=[1h]")).splitlines()[0] == "[1=][=1]"


# codimension-one intersections

def test_codim1_examples():
    a = codim1_intersection_analysis(parse("n=3; (-2,2)(1,3)(-1,-3)"))
    assert a.case == "iii-b"
    assert [format_pattern(x) for x in a.maxima] == [
        "n=3; (-1,1)(2,3)(-2,-3)",
        "n=3; (1,2)(-1,-2)(-3,3)",
    ]
    assert a.intersection_is_orbit_closure
    case, L0, maxima = codim1_case(parse("n=2; (1,-2)(-1,2)"))
    assert case == "ii" and maxima == (parse("n=2; (1,2)(-1,-2)"), parse("n=2; (-1,1)(-2,2)"))
    case, L0, maxima = codim1_case(parse("n=2; (-2,2)"))
    assert case == "i-a" and maxima == (parse("n=2; (-1,1)"),)


def test_codim1_precondition():
    with pytest.raises(PreconditionError):
        codim1_case(parse("n=2; (1,2)(-1,-2)"))


def test_codim1_classifier_exhaustive():
    counts = {}
    for n in range(1, 5):
        for L in enumerate_slp(n):
            if orbit_dim_formula(L) != half_dim(len(L.arcs), n) - 1:
                continue
            a = codim1_intersection_analysis(L)
            counts[a.case] = counts.get(a.case, 0) + 1
            assert set(a.maxima) == maximal_above(L)
            assert a.intersection_is_orbit_closure
    assert counts == {"ii": 13, "i-a": 9, "iii-b": 4, "i-b": 4, "iii-a": 1}


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_codim1_pairs_unique_maximum(n):
    for k in range(n + 1):
        for _, _, tops in codim1_pairs(n, k):
            assert len(tops) == 1


def test_placement_constants():
    T = TwoColumnSDT(2, (V1, V2))
    assert format_sdt(T) == "n=2; col2=[2]"
