import json
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from naring.magma import (
    Magma, build, from_json, from_text, l_loop, jordan_loop, z_groupoid,
    classify, holds_identity, smarandache_magma_check, commutator, associator,
    is_subloop, is_subgroup, close_submagma, divide,
)


def valid_ms(n):
    return [m for m in range(2, n)
            if gcd(m, n) == 1 and gcd(m - 1, n) == 1]


# frozen table of l_loop(5,3), derived once by evaluating
# i*j = (3j - 2i) mod 5 by hand over the positions
L53_TABLE = [
    [0, 1, 2, 3, 4, 5],
    [1, 0, 4, 2, 5, 3],
    [2, 4, 0, 5, 3, 1],
    [3, 2, 5, 0, 1, 4],
    [4, 5, 3, 1, 0, 2],
    [5, 3, 1, 4, 2, 0],
]


class TestConstruction:
    def test_build_rejects_bad_table(self):
        with pytest.raises(ValueError):
            build(["a", "b"], [[0, 1]])
        with pytest.raises(ValueError):
            build(["a", "a"], [[0, 1], [1, 0]])
        with pytest.raises(ValueError):
            build(["a", "b"], [[0, 2], [1, 0]])

    def test_build_rejects_false_identity(self):
        with pytest.raises(ValueError):
            build(["a", "b"], [[1, 1], [1, 1]], identity="a")

    def test_label_and_index_roundtrip(self):
        m = l_loop(5, 3)
        for i in range(m.order):
            assert m.index(m.label(i)) == i
        with pytest.raises(ValueError):
            m.index("nope")

    def test_text_roundtrip(self):
        m = l_loop(7, 3)
        again = from_text(m.to_text())
        assert again.table == m.table
        assert again.identity == m.identity

    def test_json_roundtrip(self):
        m = l_loop(5, 2)
        again = from_json(json.dumps(m.to_json()))
        assert again.table == m.table
        assert again.identity == m.identity

    def test_from_text_detects_identity(self):
        m = from_text("e x\ne x\nx e\n")
        assert m.identity == 0

    def test_from_text_row_count_mismatch(self):
        with pytest.raises(ValueError):
            from_text("a b\na b\n")


class TestLLoop:
    def test_frozen_table(self):
        assert [list(r) for r in l_loop(5, 3).table] == L53_TABLE

    def test_validation(self):
        for n, m in ((4, 3), (3, 2), (5, 1), (5, 5), (9, 3), (9, 4), (15, 6)):
            with pytest.raises(ValueError):
                l_loop(n, m)

    def test_formula_against_oracle(self):
        # independent oracle: recompute every cell from the defining formula
        for n, m in ((7, 3), (9, 2), (15, 2)):
            loop = l_loop(n, m)
            for i in range(1, n + 1):
                for j in range(1, n + 1):
                    if i == j:
                        assert loop.table[i][j] == 0
                    else:
                        t = (m * j - (m - 1) * i) % n
                        assert loop.table[i][j] == (n if t == 0 else t)

    @settings(deadline=None, max_examples=30)
    @given(st.sampled_from([(n, m) for n in (5, 7, 9, 15, 19, 25)
                            for m in valid_ms(n)]))
    def test_always_a_loop(self, nm):
        loop = l_loop(*nm)
        assert loop.is_loop()
        # every non-identity element has order 2
        assert all(loop.table[i][i] == 0 for i in range(loop.order))

    def test_commutative_iff_2m_is_1_mod_n(self):
        for n in (5, 7, 9, 15):
            for m in valid_ms(n):
                assert l_loop(n, m).is_commutative() == ((2 * m - 1) % n == 0)

    def test_division(self):
        loop = l_loop(5, 3)
        for a in range(loop.order):
            for b in range(loop.order):
                assert loop.table[a][loop.left_divide(a, b)] == b
                assert loop.table[loop.right_divide(a, b)][a] == b
        assert divide(loop, 1, 2, "left") == loop.left_divide(1, 2)


class TestJordanLoop:
    def test_equals_l_loop(self):
        for p in (5, 7, 11):
            assert jordan_loop(p).table == l_loop(p, (p + 1) // 2).table

    def test_labels(self):
        assert jordan_loop(5).labels == ("e", "g1", "g2", "g3", "g4", "g5")

    def test_rejects_composite(self):
        for p in (4, 9, 15):
            with pytest.raises(ValueError):
                jordan_loop(p)

    def test_commutative_loop(self):
        j = jordan_loop(7)
        assert j.is_loop() and j.is_commutative()


class TestZGroupoid:
    def test_table_formula(self):
        g = z_groupoid(5, 2, 3)
        for a in range(5):
            for b in range(5):
                assert g.table[a][b] == (2 * a + 3 * b) % 5

    def test_variant_constraints(self):
        with pytest.raises(ValueError):
            z_groupoid(6, 2, 4, "Z")        # gcd(t,u) != 1
        with pytest.raises(ValueError):
            z_groupoid(5, 2, 2, "Zstar")    # t = u
        with pytest.raises(ValueError):
            z_groupoid(5, 0, 3, "Zstar")    # zero t
        z_groupoid(6, 3, 0, "Zstarstarstar")  # zero u allowed here
        with pytest.raises(ValueError):
            z_groupoid(5, 2, 3, "bogus")

    def test_usually_not_associative(self):
        assert z_groupoid(5, 2, 3).first_nonassoc() is not None


class TestPredicates:
    def test_latin_and_loop(self):
        assert l_loop(5, 2).is_latin()
        g = z_groupoid(4, 2, 3, "Zstar")
        assert not g.is_latin()

    def test_associative_oracle(self):
        # brute-force oracle over all triples
        for m in (l_loop(5, 3), z_groupoid(5, 2, 3)):
            brute = all(m.op(m.op(a, b), c) == m.op(a, m.op(b, c))
                        for a in range(m.order)
                        for b in range(m.order)
                        for c in range(m.order))
            assert m.is_associative() == brute

    def test_commutator_associator(self):
        loop = l_loop(5, 2)
        x, y, z = 1, 2, 3
        # (xy) = (yx) * c
        c = commutator(loop, x, y)
        assert loop.op(loop.op(y, x), c) == loop.op(x, y)
        a = associator(loop, x, y, z)
        assert loop.op(loop.op(x, loop.op(y, z)), a) == \
            loop.op(loop.op(x, y), z)

    def test_wip_holds_on_l73(self):
        rep = holds_identity(l_loop(7, 3), "wip")
        assert rep.holds is True and rep.exhaustive

    def test_identity_oracle_right_alt(self):
        # oracle: literal (xy)y = x(yy) scan
        for m in (l_loop(5, 2), l_loop(7, 3), z_groupoid(6, 2, 5, "Zstar")):
            brute = all(m.op(m.op(x, y), y) == m.op(x, m.op(y, y))
                        for x in range(m.order) for y in range(m.order))
            assert holds_identity(m, "right_alt").holds == brute

    def test_unknown_identity(self):
        with pytest.raises(ValueError):
            holds_identity(l_loop(5, 2), "frobnicate")


class TestClassify:
    def test_loop_classification(self):
        c = classify(l_loop(5, 3))
        assert c.is_loop and not c.is_group and not c.is_semigroup
        assert c.is_commutative

    def test_group_classification(self):
        klein = build(["1", "a", "b", "c"],
                      [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]],
                      identity="1")
        c = classify(klein)
        assert c.is_group and c.is_semigroup and c.is_loop

    def test_json_shape(self):
        doc = classify(l_loop(5, 2)).to_json()
        for key in ("is_semigroup", "is_loop", "is_group", "is_commutative",
                    "satisfied_identities"):
            assert key in doc


class TestSubstructures:
    def test_close_submagma(self):
        loop = l_loop(5, 3)
        sub = close_submagma(loop, {0, 1})
        assert 0 in sub and 1 in sub
        assert all(loop.op(a, b) in sub for a in sub for b in sub)

    def test_subloop_subgroup(self):
        loop = l_loop(5, 3)
        pair = {0, 1}
        assert is_subloop(loop, pair)
        assert is_subgroup(loop, pair)
        assert not is_subgroup(loop, {0, 1, 2})


class TestSmarandache:
    def test_s_loop_has_subgroup_witness(self):
        rep = smarandache_magma_check(l_loop(5, 3), "s_loop")
        assert rep.holds is True
        assert rep.witness is not None

    def test_s_groupoid(self):
        rep = smarandache_magma_check(z_groupoid(6, 4, 5, "Zstar"), "s_groupoid")
        assert rep.holds in (True, False)

    def test_unknown_notion(self):
        with pytest.raises(ValueError):
            smarandache_magma_check(l_loop(5, 2), "s_bogus")
