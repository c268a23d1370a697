"""Exact rational vectors and symmetric forms."""

from fractions import Fraction
from random import Random

import pytest

from singvol import MalformedInputError, QVector, SingularSystemError, SymForm, rat, rat_str


def test_rat_accepts_ints_fractions_and_strings() -> None:
    assert rat(3) == Fraction(3)
    assert rat(Fraction(2, 6)) == Fraction(1, 3)
    assert rat("3/4") == Fraction(3, 4)
    assert rat("-5") == Fraction(-5)
    assert rat("-7/2") == Fraction(-7, 2)


@pytest.mark.parametrize("bad", [True, False, 1.5, "1/0", "abc", "", None, [1]])
def test_rat_rejects_non_rationals(bad) -> None:
    with pytest.raises(MalformedInputError):
        rat(bad)


def test_rat_str_lowest_terms() -> None:
    assert rat_str(Fraction(8, 3)) == "8/3"
    assert rat_str(Fraction(4, 1)) == "4"
    assert rat_str(Fraction(-2, 4)) == "-1/2"
    assert rat_str(Fraction(0)) == "0"


def test_qvector_arithmetic() -> None:
    u = QVector((Fraction(1), Fraction(-2), Fraction(1, 2)))
    v = QVector.unit(3, 1)
    assert (u + v) == (Fraction(1), Fraction(-1), Fraction(1, 2))
    assert (u - v) == (Fraction(1), Fraction(-3), Fraction(1, 2))
    assert (-u) == (Fraction(-1), Fraction(2), Fraction(-1, 2))
    assert (u * 2) == (Fraction(2), Fraction(-4), Fraction(1))
    assert (Fraction(1, 2) * u) == (Fraction(1, 2), Fraction(-1), Fraction(1, 4))
    assert u.dot(v) == Fraction(-2)
    assert QVector.zero(3).is_zero()
    assert not u.is_zero()
    assert v.is_nonnegative()
    assert not u.leq(v)
    assert u.leq(u + v)


def test_qvector_dimension_mismatch() -> None:
    with pytest.raises(MalformedInputError):
        QVector.zero(2) + QVector.zero(3)
    with pytest.raises(MalformedInputError):
        QVector.zero(2).dot(QVector.zero(3))


def test_form_requires_square_symmetric() -> None:
    with pytest.raises(MalformedInputError):
        SymForm(((1, 2),))
    with pytest.raises(MalformedInputError):
        SymForm(((0, 1), (2, 0)))


def test_form_apply_and_pair() -> None:
    m = SymForm(((-2, 1), (1, -2)))
    x = QVector((Fraction(1), Fraction(1)))
    assert m.apply(x) == (Fraction(-1), Fraction(-1))
    e0 = QVector.unit(2, 0)
    e1 = QVector.unit(2, 1)
    assert m.pair(e0, e1) == Fraction(1)
    assert m.pair(e0, e0) == Fraction(-2)


def test_form_determinant_and_minors() -> None:
    m = SymForm(((-2, 1), (1, -2)))
    assert m.det() == Fraction(3)
    assert m.leading_principal_minors() == (Fraction(-2), Fraction(3))


def test_negative_definite_sign_alternation() -> None:
    assert SymForm(((-1,),)).is_negative_definite()
    assert SymForm(((-2, 1), (1, -2))).is_negative_definite()
    assert SymForm(((-2, 0), (0, -2))).is_negative_definite()
    # rank deficient
    assert not SymForm(((-1, 1), (1, -1))).is_negative_definite()
    # indefinite hyperbolic plane
    assert not SymForm(((0, 1), (1, 0))).is_negative_definite()
    assert not SymForm(((1, 0), (0, -1))).is_negative_definite()


def test_solve_exact() -> None:
    m = SymForm(((-2, 1), (1, -2)))
    rhs = QVector((Fraction(-1), Fraction(-1)))
    assert m.solve(rhs) == (Fraction(1), Fraction(1))


def test_solve_singular_raises() -> None:
    m = SymForm(((-1, 1), (1, -1)))
    with pytest.raises(SingularSystemError):
        m.solve(QVector((Fraction(1), Fraction(0))))


def test_restrict_keeps_determinant_of_full_index_set() -> None:
    m = SymForm(((-2, 1, 0), (1, -2, 1), (0, 1, -2)))
    assert m.restrict((0, 1, 2)).det() == m.det()
    sub = m.restrict((1,))
    assert sub.dim == 1
    assert sub.entry(0, 0) == Fraction(-2)


def _random_neg_definite(rng: Random, n: int) -> SymForm:
    # chain with random diagonals <= -2 stays negative definite
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = Fraction(-rng.randint(2, 6))
        if i + 1 < n:
            rows[i][i + 1] = rows[i + 1][i] = Fraction(1)
    return SymForm(tuple(tuple(r) for r in rows))


def test_pair_is_symmetric_bilinear_seeded() -> None:
    rng = Random(20260819)
    for _ in range(25):
        n = rng.randint(1, 4)
        m = _random_neg_definite(rng, n)
        u = QVector(tuple(Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(n)))
        v = QVector(tuple(Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(n)))
        w = QVector(tuple(Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(n)))
        c = Fraction(rng.randint(-2, 2), rng.randint(1, 2))
        assert m.pair(u, v) == m.pair(v, u)
        assert m.pair(u + w.scale(c), v) == m.pair(u, v) + c * m.pair(w, v)


def test_solve_round_trip_seeded() -> None:
    rng = Random(7)
    for _ in range(25):
        n = rng.randint(1, 4)
        m = _random_neg_definite(rng, n)
        rhs = QVector(tuple(Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(n)))
        assert m.apply(m.solve(rhs)) == rhs


def test_negative_definite_matches_sampled_values() -> None:
    # necessary condition: x.M.x < 0 on every nonzero sample point
    rng = Random(99)
    for _ in range(10):
        n = rng.randint(1, 3)
        m = _random_neg_definite(rng, n)
        assert m.is_negative_definite()
        points = [QVector(tuple(Fraction(c) for c in combo))
                  for combo in _grid(n, (-2, -1, 0, 1, 2))]
        for x in points:
            if not x.is_zero():
                assert m.pair(x, x) < 0


def _grid(n: int, values) -> list[tuple]:
    combos = [()]
    for _ in range(n):
        combos = [c + (v,) for c in combos for v in values]
    return combos
