import pytest

from unimon.fixtures import fixture_names, load_fixture, run_fixture

# published values that do not survive recomputation; see the README
KNOWN_DEFECTS = {
    "introfg": {("e", 30), ("unipotent_rhs", 233130)},
    "thick-5-2": {("e", 17), ("unipotent_rhs", 85), ("min_gens", None)},
    "figure4": {("c_T", 32), ("generalized_lhs", 64), ("ratio_rhs", 384)},
}


def test_fixture_inventory():
    names = fixture_names()
    for want in ("introfg", "figure1", "figure2", "figure3", "figure4", "U32-mingens",
                 "thick-5-2", "conductor-1", "conductor-2", "conductor-3"):
        assert want in names


def test_unknown_fixture():
    with pytest.raises(KeyError):
        load_fixture("no-such-fixture")


@pytest.mark.parametrize("name", [n for n in fixture_names() if n not in KNOWN_DEFECTS])
def test_clean_fixture_passes(name):
    res = run_fixture(name)
    assert res.ok, [c.describe() for c in res.failures()]


@pytest.mark.parametrize("name", sorted(KNOWN_DEFECTS))
def test_defective_fixture_fails_only_where_expected(name):
    res = run_fixture(name)
    got = {(c.key, None if c.key == "min_gens" else c.actual) for c in res.failures()}
    assert got == KNOWN_DEFECTS[name]


def test_thick_fixture_extra_generator_is_reducible():
    res = run_fixture("thick-5-2")
    (check,) = [c for c in res.failures() if c.key == "min_gens"]
    assert check.expected - check.actual == {(1, 0, 0, 1)}
    assert check.actual <= check.expected
    S = res.reports[0].monoid
    assert S.is_member_point((1, 0, 0, 0)) and S.is_member_point((0, 0, 0, 1))
