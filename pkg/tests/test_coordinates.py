import pytest

from unimon.coordinates import (conductor_inequalities, coordinate_semigroup, coordinate_semigroups,
                                elementary_symmetric, genus_bounds, numerical_semigroup,
                                thick_thin, thin_embedding_formula, thin_lower_bound)
from unimon.enumeration import enumerate_by_genus
from unimon.errors import NotThin, PositionError, WrongAmbient
from unimon.matrix import PatternAmbient
from unimon.mingen import minimal_generators
from unimon.monoid import from_holes, fundamental_monoid

from conftest import vec_monoid


def brute_semigroup(gens, bound=60):
    members = {0}
    for x in range(1, bound):
        if any(x - g in members for g in gens if x >= g):
            members.add(x)
    return members


@pytest.fixture
def fig2():
    return vec_monoid([(1, 1), (1, 2), (1, 3), (2, 1)], 4)


@pytest.fixture
def fig3():
    return vec_monoid([(2, 0), (7, 0), (0, 3), (0, 4)], 6)


def test_numerical_semigroup_2_7(fig3):
    x = coordinate_semigroup(fig3, (1, 2))
    assert x.gaps == (1, 3, 5)
    assert (x.multiplicity, x.edim, x.conductor, x.genus, x.sporadicity) == (2, 2, 6, 3, 3)
    assert x.minimal_generators == (2, 7)
    assert x.frobenius == 5


@pytest.mark.parametrize("gens", [(2, 7), (3, 5), (4, 5, 6, 7), (5, 7, 9), (6, 10, 15)])
def test_summary_against_brute_generation(gens):
    members = brute_semigroup(gens)
    gaps = [x for x in range(60) if x not in members]
    s = numerical_semigroup(gaps)
    assert s.conductor == max(gaps) + 1
    assert s.genus == len(gaps)
    assert s.sporadicity == sum(1 for x in members if x < s.conductor)
    assert set(s.minimal_generators) <= set(gens)
    assert brute_semigroup(s.minimal_generators) == members


def test_natural_numbers_convention():
    s = numerical_semigroup([])
    assert (s.frobenius, s.conductor, s.genus, s.multiplicity, s.edim, s.sporadicity) == \
        (-1, 1, 0, 1, 1, 1)


def test_figure2_axes_have_genus_three(fig2):
    assert [c.genus for c in coordinate_semigroups(fig2)] == [3, 3]
    assert [c.minimal_generators for c in coordinate_semigroups(fig2)] == [(4, 5, 6, 7)] * 2


def test_coordinate_position_must_be_free(fig2):
    with pytest.raises(PositionError):
        coordinate_semigroup(fig2, (2, 3))


def test_thick_thin_flags(fig2, fig3, P3):
    v = thick_thin(fig2)
    assert not v.is_thick and (v.genus_sum, v.genus) == (6, 7)
    assert thick_thin(fig3).is_thin
    M = from_holes(P3, [])
    assert thick_thin(M).is_thick and thick_thin(M).is_thin


def test_genus_bounds(fig2, P3):
    assert genus_bounds(fig2) == (6, 15)
    assert genus_bounds(fundamental_monoid(P3, 4)) == (6, 15)
    assert genus_bounds(from_holes(P3, [])) == (0, 0)


def test_genus_bounds_only_for_first_row():
    with pytest.raises(WrongAmbient):
        genus_bounds(fundamental_monoid(PatternAmbient.full(3), 2))


def test_thin_formulas_figure3(fig3):
    assert thin_embedding_formula(fig3) == 11 == minimal_generators(fig3).e
    assert thin_lower_bound(fig3) == 8


def test_thin_formulas_full_ambient():
    for n in (3, 4, 5):
        M = from_holes(PatternAmbient.first_row(n), [])
        assert thin_embedding_formula(M) == n - 1
        assert thin_lower_bound(M) == n - 1


def test_thin_formula_requires_thin(fig2):
    with pytest.raises(NotThin):
        thin_embedding_formula(fig2)


def test_thin_formula_over_enumeration():
    # compared against the general minimal-generator algorithm; thin monoids are rare
    seen = 0
    for S in enumerate_by_genus(2, 8):
        if thick_thin(S).is_thin:
            seen += 1
            e = minimal_generators(S).e
            assert thin_embedding_formula(S) == e
            assert thin_lower_bound(S) <= e
    assert seen == 3


def test_genus_sandwich_over_enumeration():
    for S in enumerate_by_genus(2, 6):
        lo, hi = genus_bounds(S)
        assert lo <= S.genus <= hi


@pytest.mark.parametrize("gens,expected", [([(1, 0), (1, 1), (1, 2)], [1, 3]),
                                           ([], [3, 3]),
                                           ([(2, 0), (0, 2)], [2, 2])])
def test_conductor_examples(gens, expected):
    S = vec_monoid(gens, 3)
    assert S.generating_number == 3
    info = conductor_inequalities(S)
    assert info["conductors"] == expected
    assert info["product_chain_holds"] and info["sum_chain_holds"]


def test_elementary_symmetric():
    vals = [2, 3, 5]
    assert [elementary_symmetric(j, vals) for j in range(4)] == [1, 10, 31, 30]


def test_thickness_means_holes_on_axes():
    for S in enumerate_by_genus(2, 5):
        on_axes = all(sum(1 for v in h if v) == 1 for h in S.holes)
        assert thick_thin(S).is_thick == on_axes


def test_axis_membership_three_dims():
    S = vec_monoid([(1, 0, 0), (0, 2, 0), (0, 0, 3)], 4, d=3)
    for i, c in enumerate(coordinate_semigroups(S)):
        for v in range(8):
            p = tuple(v if k == i else 0 for k in range(3))
            assert S.is_member_point(p) == (v not in c.gaps)
    assert all(max(h) < 4 for h in S.holes)
