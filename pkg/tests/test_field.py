import random
from fractions import Fraction as F

import pytest

from ljgalois.errors import UnsupportedExtension
from ljgalois.exactalg.field import (
    FieldElem,
    fe,
    rational_sqrt,
    sqrt_elem,
    squarefree_decompose,
)


def test_canonical_collapse():
    assert fe(1, 2, 1) == fe(3)  # sqrt(1) folds into the rational part
    assert fe(5, 3, 0) == fe(5)
    assert fe(2, 0, 7).d == 0  # zero radical part drops the radicand
    assert fe(0, 1, 8) == fe(0, 2, 2)  # radicand made squarefree
    assert fe(0, 1, 12) == fe(0, 2, 3)


def test_squarefree_decompose():
    assert squarefree_decompose(0) == (1, 0)
    assert squarefree_decompose(1) == (1, 1)
    assert squarefree_decompose(8) == (2, 2)
    assert squarefree_decompose(360) == (6, 10)
    big = 2**6 * 3**3 * 5 * 7**2
    s, f = squarefree_decompose(big)
    assert s * s * f == big and f == 3 * 5


def test_arithmetic_and_closure():
    x = fe(1, 2, 3)  # 1 + 2 sqrt 3
    y = fe(-2, F(1, 2), 3)
    assert x + y == fe(-1, F(5, 2), 3)
    assert x * y == fe(1, F(-7, 2), 3)  # (1)(-2) + (2)(1/2)(3) = 1
    assert (x / y) * y == x
    assert x**3 == x * x * x
    assert fe(4) / fe(2) == fe(2)


def test_incompatible_radicals():
    with pytest.raises(UnsupportedExtension):
        fe(0, 1, 2) + fe(0, 1, 3)
    with pytest.raises(UnsupportedExtension):
        fe(1, 1, 2) * fe(1, 1, 5)
    # rational operands never conflict
    assert fe(3) + fe(0, 1, 7) == fe(3, 1, 7)


def test_sign_and_ordering():
    assert fe(-1, 1, 2).sign() == 1  # sqrt 2 > 1
    assert fe(1, -1, 2).sign() == -1
    assert fe(3, -2, 2).sign() == 1  # 9 > 8
    assert fe(0).sign() == 0
    vals = [fe(0, 1, 2), fe(1), fe(-3), fe(0, -1, 2), fe(F(3, 2))]
    assert sorted(vals) == [fe(-3), fe(0, -1, 2), fe(1), fe(0, 1, 2), fe(F(3, 2))]


def test_rational_sqrt():
    assert rational_sqrt(F(9, 4)) == F(3, 2)
    assert rational_sqrt(F(2)) is None
    assert rational_sqrt(F(-1)) is None
    assert rational_sqrt(F(0)) == 0


def test_sqrt_elem_examples():
    assert sqrt_elem(fe(4)) == fe(2)
    assert sqrt_elem(fe(F(9, 5))) == fe(0, F(3, 5), 5)
    assert sqrt_elem(fe(8)) == fe(0, 2, 2)
    with pytest.raises(UnsupportedExtension):
        sqrt_elem(fe(-4))
    # perfect square inside Q(sqrt 2): (1 + sqrt 2)^2 = 3 + 2 sqrt 2
    assert sqrt_elem(fe(3, 2, 2)) == fe(1, 1, 2)
    with pytest.raises(UnsupportedExtension):
        sqrt_elem(fe(1, 1, 2))  # 1 + sqrt 2 is not a square in Q(sqrt 2)


def _random_elem(rng: random.Random) -> FieldElem:
    return fe(
        F(rng.randint(-8, 8), rng.randint(1, 6)),
        F(rng.randint(-8, 8), rng.randint(1, 6)),
        5,
    )


def test_associativity_and_conjugation_properties():
    rng = random.Random(7)
    for _ in range(200):
        x, y, z = (_random_elem(rng) for _ in range(3))
        assert (x * y) * z == x * (y * z)
        assert (x + y) + z == x + (y + z)
        assert (x * y).conjugate() == x.conjugate() * y.conjugate()
        assert (x + y).conjugate() == x.conjugate() + y.conjugate()
        if not x.is_zero:
            assert x * x.inverse() == fe(1)


def test_float_and_str():
    assert float(fe(F(1, 2))) == 0.5
    assert abs(float(fe(0, 1, 2)) - 2**0.5) < 1e-15
    assert str(fe(F(5, 8))) == "5/8"
    assert str(fe(1, -1, 2)) == "1 - sqrt(2)"
