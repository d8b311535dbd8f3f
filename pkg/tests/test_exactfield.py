from __future__ import annotations

import cmath
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from galoislines.exactfield import (I, ONE, S, ZERO, FieldElement, ParseError, embed_complex,
                                    field_add, field_inv, field_mul, field_neg, field_sqrt,
                                    parse, recognize_algebraic)

small = st.fractions(min_value=-9, max_value=9, max_denominator=8)
elements = st.builds(FieldElement, small, small, small, small)
nonzero = elements.filter(lambda x: not x.is_zero())


# -- worked examples ----------------------------------------------------------

def test_products():
    assert (1 + I) * (1 - I) == 2
    assert S * S == 2
    assert (1 + S) * (1 - S) == -1


def test_inverses():
    assert field_inv(FieldElement(2)) == Fraction(1, 2)
    assert field_inv(I) == -I
    assert field_inv(1 + S) == -1 + S


def test_inverse_of_zero_raises():
    with pytest.raises(ZeroDivisionError):
        field_inv(ZERO)


def test_sqrt_examples():
    assert field_sqrt(FieldElement(2)) == S
    assert field_sqrt(I) == (S + I * S) / 2
    assert field_sqrt(1 + S) is None


def test_sqrt_branch_upper_half_plane():
    for x in (FieldElement(-1), FieldElement(-2), -I, FieldElement(4), 2 * I):
        y = field_sqrt(x)
        assert y * y == x
        arg = cmath.phase(embed_complex(y))
        assert 0 <= arg < cmath.pi


def test_embed_examples():
    assert embed_complex(1 + I) == pytest.approx(1 + 1j)
    assert embed_complex(S / 2) == pytest.approx(0.7071067811865476)
    assert embed_complex((1 + S) / 2) == pytest.approx(1.2071067811865476)


def test_recognize_examples():
    assert recognize_algebraic(1.41421356237) == S
    assert recognize_algebraic(0.5 + 0.5j) == (1 + I) / 2
    assert recognize_algebraic(1.20710678119) == (1 + S) / 2


def test_recognize_absent():
    assert recognize_algebraic(0.1234567891234 + 0.9876543219876j, 16) is None


def test_wp_quarter_value_is_recognized():
    from galoislines.analytic import wp
    assert recognize_algebraic(complex(wp(0.25))) == (1 + S) / 2


def test_helpers_agree_with_operators():
    x, y = 1 + 2 * I, S - I * S / 3
    assert field_add(x, y) == x + y
    assert field_mul(x, y) == x * y
    assert field_neg(x) == -x


def test_coordinates_are_fractions():
    x = FieldElement(Fraction(2, 4), 0, 3, Fraction(-6, 9))
    assert x.coords == (Fraction(1, 2), 0, 3, Fraction(-2, 3))
    assert all(isinstance(c, Fraction) for c in x.coords)


# -- text syntax ----------------------------------------------------------------

def test_render():
    assert str(FieldElement(Fraction(1, 2), -3, Fraction(2, 3), Fraction(-1, 5))) == \
        "1/2 - 3*I + 2/3*S - 1/5*I*S"
    assert str(ZERO) == "0"
    assert str(-2 * I * S) == "-2*I*S"


@pytest.mark.parametrize("text, value", [
    ("0", ZERO), ("-1", -ONE), ("I", I), ("S", S), ("I*S", I * S), ("1/2 + 1/2*S", (1 + S) / 2),
    ("-2*I*S", -2 * I * S), ("4", FieldElement(4)),
])
def test_parse(text, value):
    assert parse(text) == value


def test_parse_error_position():
    with pytest.raises(ParseError) as err:
        parse("1 + 2*Q")
    assert err.value.position == 6


@given(elements)
def test_render_parse_round_trip(x):
    assert parse(str(x)) == x


# -- properties -------------------------------------------------------------------

@given(elements, elements, elements)
def test_ring_axioms(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + y == y + x and x * y == y * x


@given(nonzero)
def test_inverse_property(x):
    assert x * field_inv(x) == ONE


@given(elements, elements)
def test_embedding_is_multiplicative(x, y):
    assert abs(embed_complex(x * y) - embed_complex(x) * embed_complex(y)) < 1e-12 * max(
        1.0, abs(embed_complex(x * y)))


@given(elements)
def test_sqrt_of_square(x):
    y = field_sqrt(x * x)
    assert y is not None and y * y == x * x


@given(elements)
def test_recognize_round_trip(x):
    assert recognize_algebraic(complex(embed_complex(x, 30)), 8) == x


def test_thousand_seeded_elements():
    rng = random.Random(1)

    def draw():
        return FieldElement(*(Fraction(rng.randint(-20, 20), rng.randint(1, 12)) for _ in range(4)))

    xs = [draw() for _ in range(1000)]
    for x, y, z in zip(xs, xs[1:] + xs[:1], xs[2:] + xs[:2]):
        assert (x * y) * z == x * (y * z)
        if not x.is_zero():
            assert x * field_inv(x) == ONE
        assert abs(embed_complex(x * y) - embed_complex(x) * embed_complex(y)) < 1e-12 * max(
            1.0, abs(embed_complex(x * y)))
