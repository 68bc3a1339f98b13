import random
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from unimon.errors import PositionError, SizeMismatch
from unimon.matrix import (PatternAmbient, UnipotentMatrix, UnitriangularMatrix, elementary,
                           elementary_factorization, inverse, member_of_ambient, multiply,
                           product_of_factors, revlex_positions, validate_pattern)


def M(n, **kw):
    ent = {(int(k[1]), int(k[2])): v for k, v in kw.items()}
    return UnipotentMatrix.from_entries(n, ent)


def test_storage_order_is_reverse_lex():
    assert revlex_positions(4) == ((3, 4), (2, 4), (2, 3), (1, 4), (1, 3), (1, 2))


def test_elementary():
    assert elementary(3, 1, 2, 0).is_identity
    assert elementary(3, 2, 3, 2).nonzero() == {(2, 3): 2}
    assert elementary(4, 1, 4, 7).nonzero() == {(1, 4): 7}
    with pytest.raises(PositionError):
        elementary(3, 2, 2)
    with pytest.raises(PositionError):
        elementary(3, 1, 4)


def test_multiply_cross_terms():
    a, b = elementary(3, 2, 3, 2), elementary(3, 1, 2, 3)
    assert multiply(a, b).nonzero() == {(1, 2): 3, (2, 3): 2}
    assert multiply(b, a).nonzero() == {(1, 2): 3, (2, 3): 2, (1, 3): 6}
    x = M(3, e12=1, e13=4, e23=2)
    assert multiply(UnipotentMatrix.identity(3), x) == x


def test_multiply_size_mismatch():
    with pytest.raises(SizeMismatch):
        multiply(elementary(3, 1, 2), elementary(4, 1, 2))


def test_inverse():
    assert inverse(UnipotentMatrix.identity(3)).is_identity
    assert inverse(elementary(3, 1, 2, 3)).nonzero() == {(1, 2): -3}
    x = M(3, e12=1, e23=1)
    inv = inverse(x)
    assert inv.nonzero() == {(1, 2): -1, (2, 3): -1, (1, 3): 1}
    assert multiply(x, inv).is_identity and multiply(inv, x).is_identity
    assert isinstance(inv, UnitriangularMatrix) and not inv.is_nonnegative


def test_factorization_examples():
    assert all(e == 0 for _, e in elementary_factorization(UnipotentMatrix.identity(4)))
    x = M(3, e12=3, e23=2)
    f = elementary_factorization(x)
    assert f == [((2, 3), 2), ((1, 3), 0), ((1, 2), 3)]
    assert product_of_factors(3, f) == x
    word = [((2, 3), 1), ((1, 3), 1), ((1, 2), 2)]
    assert elementary_factorization(product_of_factors(3, word)) == word


def test_factorization_round_trip_and_uniqueness_exhaustive():
    seen = set()
    for vals in product(range(4), repeat=3):
        x = UnipotentMatrix(3, vals)
        f = elementary_factorization(x)
        assert product_of_factors(3, f) == x
        word = tuple(e for _, e in f)
        prod_ = product_of_factors(3, list(zip(revlex_positions(3), word)))
        seen.add(prod_)
    assert len(seen) == 4 ** 3


@settings(max_examples=200, deadline=None)
@given(st.integers(2, 4).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.integers(0, 9), min_size=n * (n - 1) // 2,
                                             max_size=n * (n - 1) // 2))))
def test_factorization_round_trip_random(nv):
    n, vals = nv
    x = UnipotentMatrix(n, tuple(vals))
    assert product_of_factors(n, elementary_factorization(x)) == x


def test_superadditivity_randomized():
    rng = random.Random(20240611)
    for _ in range(10_000):
        n = rng.randint(2, 6)
        k = n * (n - 1) // 2
        x = UnipotentMatrix(n, tuple(rng.randint(0, 9) for _ in range(k)))
        y = UnipotentMatrix(n, tuple(rng.randint(0, 9) for _ in range(k)))
        z = multiply(x, y)
        assert all(c >= a + b for a, b, c in zip(x.entries, y.entries, z.entries))


def test_unipotent_matrix_rejects_negative():
    with pytest.raises(ValueError):
        UnipotentMatrix(2, (-1,))
    with pytest.raises(SizeMismatch):
        UnipotentMatrix(3, (1, 2))


def test_literal_round_trip():
    x = M(4, e14=7, e12=1)
    assert x.to_literal() == {"n": 4, "entries": [[1, 2, 1], [1, 4, 7]]}
    assert x[1, 1] == 1 and x[2, 1] == 0 and x[1, 4] == 7


def test_validate_pattern():
    assert validate_pattern(PatternAmbient(4, frozenset({(2, 3)})))
    bad = validate_pattern(PatternAmbient(3, frozenset({(1, 3)})))
    assert not bad and bad.witness == (1, 2, 3)
    assert validate_pattern(PatternAmbient(3, frozenset({(1, 2), (1, 3)})))
    assert validate_pattern(PatternAmbient.first_row(5))
    assert validate_pattern(PatternAmbient.full(5))


def test_member_of_ambient():
    amb = PatternAmbient(4, frozenset({(2, 3)}))
    assert member_of_ambient(UnipotentMatrix.identity(4), amb)
    assert not member_of_ambient(elementary(4, 2, 3), amb)
    assert member_of_ambient(elementary(4, 1, 2), amb)
    with pytest.raises(SizeMismatch):
        member_of_ambient(elementary(3, 1, 2), amb)


def _random_in(amb, rng, hi=5):
    return amb.to_matrix(tuple(rng.randint(0, hi) for _ in range(amb.dim)))


@pytest.mark.parametrize("amb", [PatternAmbient(4, frozenset({(2, 3)})),
                                 PatternAmbient.first_row(5),
                                 PatternAmbient(5, frozenset({(1, 2), (1, 3), (2, 3)}))])
def test_closed_patterns_stay_closed(amb):
    assert validate_pattern(amb)
    rng = random.Random(7)
    for _ in range(300):
        x, y = _random_in(amb, rng), _random_in(amb, rng)
        assert member_of_ambient(multiply(x, y), amb)
        inv = inverse(x)
        assert all(inv[p] == 0 for p in amb.zero_positions)


def test_point_algebra_matches_matrices():
    rng = random.Random(3)
    for amb in (PatternAmbient.full(4), PatternAmbient(4, frozenset({(2, 3)}))):
        for _ in range(300):
            a = tuple(rng.randint(0, 4) for _ in range(amb.dim))
            b = tuple(rng.randint(0, 4) for _ in range(amb.dim))
            prod_ = amb.mul(a, b)
            assert amb.to_matrix(prod_) == multiply(amb.to_matrix(a), amb.to_matrix(b))
            assert amb.left_quotient(a, prod_) == b
