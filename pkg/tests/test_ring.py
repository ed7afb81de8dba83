from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from naring.magma import build, l_loop, z_groupoid
from naring.ring import (
    CoefficientDomain, INTEGERS, RATIONALS, mod_domain, ring,
    parse_element, envelope,
)


def klein_with_one():
    return build(["1", "a0", "a1", "a2"],
                 [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]],
                 identity="1")


def naive_product(r, x, y):
    # independent oracle: dict-based convolution over the Cayley table
    acc = {}
    t = r.magma.table
    for i, a in enumerate(x.coeffs):
        for j, b in enumerate(y.coeffs):
            k = t[i][j]
            acc[k] = acc.get(k, 0) + a * b
    coeffs = [acc.get(i, 0) for i in range(r.magma.order)]
    return r.element(coeffs)


class TestDomains:
    def test_validation(self):
        with pytest.raises(ValueError):
            CoefficientDomain("mod")
        with pytest.raises(ValueError):
            CoefficientDomain("mod", 1)
        with pytest.raises(ValueError):
            CoefficientDomain("integer", 5)
        with pytest.raises(ValueError):
            CoefficientDomain("field")

    def test_reduce(self):
        assert mod_domain(5).reduce(-1) == 4
        assert INTEGERS.reduce(7) == 7
        assert RATIONALS.reduce("1/2") == Fraction(1, 2)

    def test_repr(self):
        assert repr(mod_domain(3)) == "Z_3"
        assert repr(INTEGERS) == "Z"
        assert repr(RATIONALS) == "Q"


class TestElements:
    def test_encode_decode_bijection(self):
        r = ring(l_loop(5, 3), 3)
        seen = set()
        for code in range(r.cardinality):
            x = r.decode(code)
            assert x.encode() == code
            seen.add(x.coeffs)
        assert len(seen) == r.cardinality

    def test_cardinality(self):
        assert ring(l_loop(5, 3), 2).cardinality == 64
        assert ring(l_loop(5, 3), INTEGERS).cardinality is None

    @settings(deadline=None, max_examples=60)
    @given(st.integers(0, 63), st.integers(0, 63))
    def test_product_matches_oracle(self, a, b):
        r = ring(l_loop(5, 3), 2)
        x, y = r.decode(a), r.decode(b)
        assert x * y == naive_product(r, x, y)

    @settings(deadline=None, max_examples=40)
    @given(st.integers(0, 728), st.integers(0, 728))
    def test_product_matches_oracle_mod3(self, a, b):
        r = ring(z_groupoid(6, 3, 0, "Zstarstarstar"), 3)
        x, y = r.decode(a), r.decode(b)
        assert x * y == naive_product(r, x, y)

    @settings(deadline=None, max_examples=40)
    @given(st.integers(0, 63), st.integers(0, 63), st.integers(0, 63))
    def test_distributivity(self, a, b, c):
        r = ring(l_loop(5, 3), 2)
        x, y, z = r.decode(a), r.decode(b), r.decode(c)
        assert x * (y + z) == x * y + x * z
        assert (x + y) * z == x * z + y * z

    @settings(deadline=None, max_examples=40)
    @given(st.integers(0, 242), st.integers(0, 242))
    def test_augmentation_is_multiplicative(self, a, b):
        r = ring(l_loop(5, 2), 3)
        x, y = r.decode(a), r.decode(b)
        assert (x * y).augmentation() == \
            (x.augmentation() * y.augmentation()) % 3
        assert (x + y).augmentation() == \
            (x.augmentation() + y.augmentation()) % 3

    def test_circle_definition(self):
        r = ring(l_loop(5, 3), 5)
        x, y = r.decode(123), r.decode(456)
        assert x.circle(y) == x + y - x * y

    def test_one_and_zero(self):
        r = ring(l_loop(5, 3), 7)
        x = r.decode(1000)
        assert r.one() * x == x and x * r.one() == x
        assert (x + r.zero()) == x
        assert x - x == r.zero()

    def test_power_left(self):
        r = ring(l_loop(5, 2), 3)
        x = r.decode(17)
        assert x.power_left(1) == x
        assert x.power_left(3) == (x * x) * x
        with pytest.raises(ValueError):
            x.power_left(0)

    def test_cross_ring_rejected(self):
        r1 = ring(l_loop(5, 3), 2)
        r2 = ring(l_loop(5, 2), 2)
        with pytest.raises(ValueError):
            r1.decode(3) + r2.decode(3)

    def test_no_unit_without_identity(self):
        r = ring(z_groupoid(4, 2, 3, "Zstar"), 2)
        with pytest.raises(ValueError):
            r.one()

    def test_text(self):
        r = ring(l_loop(5, 3), 5)
        assert parse_element(r, "3+3*g1").text() == "3 + 3*g1"
        assert r.zero().text() == "0"


class TestParse:
    def test_roundtrip(self):
        r = ring(l_loop(5, 3), 5)
        for text in ("1+g1+g2+g3+g4+g5", "3+3*g1", "2*g2+4*g5", "0*g1"):
            x = parse_element(r, text)
            assert parse_element(r, x.text()) == x

    def test_negative_and_rational(self):
        r = ring(l_loop(5, 3), RATIONALS)
        x = parse_element(r, "1/2 + 1/2*g1 - g2")
        assert x.coeffs[0] == Fraction(1, 2)
        assert x.coeffs[2] == -1

    def test_unknown_label(self):
        r = ring(l_loop(5, 3), 2)
        with pytest.raises(ValueError):
            parse_element(r, "q7")

    def test_bare_constant_needs_identity(self):
        r = ring(z_groupoid(4, 2, 3, "Zstar"), 2)
        with pytest.raises(ValueError):
            parse_element(r, "3")


class TestEnvelope:
    def test_klein_envelope_is_order_8_loop(self):
        env = envelope(ring(klein_with_one(), 2))
        assert env.order == 8
        assert env.is_loop()
        assert env.is_commutative()
        assert all(env.table[x][x] == env.identity for x in range(8))

    def test_order_6_envelope_is_not_latin(self):
        r = ring(l_loop(5, 3), 2)
        env = envelope(r)
        assert env.order == 32
        assert not env.is_latin()
        # the frozen duplicate: (1+g1+g2)(1+g1+g3) = (1+g1+g2)*g4
        x = parse_element(r, "1+g1+g2")
        assert x * parse_element(r, "1+g1+g3") == x * parse_element(r, "g4")

    def test_base_restricted_envelope(self):
        r = ring(l_loop(5, 3), 2)
        env = envelope(r, base=["e", "1"])
        assert env.order == 2

    def test_requires_identity_and_finite(self):
        with pytest.raises(ValueError):
            envelope(ring(z_groupoid(4, 2, 3, "Zstar"), 2))
        with pytest.raises(ValueError):
            envelope(ring(l_loop(5, 3), INTEGERS))
