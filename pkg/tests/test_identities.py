import pytest

from naring.magma import build, l_loop, jordan_loop, z_groupoid
from naring.ring import ring, parse_element
from naring.identities import (
    ring_identity, smarandache_ring_identity, check_property,
)


def klein_with_one():
    return build(["1", "a0", "a1", "a2"],
                 [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]],
                 identity="1")


def brute_commutative(r):
    return all((x * y) == (y * x)
               for x in r.all_elements() for y in r.all_elements())


class TestRingIdentity:
    def test_commutative_against_oracle(self):
        for r in (ring(klein_with_one(), 2), ring(l_loop(5, 2), 2)):
            assert ring_identity(r, "commutative").holds == \
                brute_commutative(r)

    def test_counterexample_verifies(self):
        r = ring(l_loop(5, 2), 2)
        rep = ring_identity(r, "commutative")
        assert rep.holds is False
        x = parse_element(r, rep.counterexample["x"])
        y = parse_element(r, rep.counterexample["y"])
        assert x * y != y * x

    def test_jordan_ring_true(self):
        for p in (5, 7):
            rep = ring_identity(ring(jordan_loop(p), 2), "jordan_ring")
            assert rep.holds is True and rep.exhaustive

    def test_jordan_counterexample_verifies(self):
        r = ring(l_loop(5, 2), 2)
        rep = ring_identity(r, "jordan_ring")
        assert rep.holds is False
        cex = rep.counterexample
        if cex and "x" in cex and "y" in cex:
            x = parse_element(r, cex["x"])
            y = parse_element(r, cex["y"])
            x2 = x * x
            assert x2 * (x * y) != x * (x2 * y) or x * y != y * x

    def test_lie_ring_false_with_square_witness(self):
        rep = ring_identity(ring(l_loop(5, 3), 2), "lie_ring")
        assert rep.holds is False
        assert rep.counterexample is not None

    def test_lie_congruence_cross_check(self):
        g = z_groupoid(6, 3, 0, "Zstarstarstar")
        rep = ring_identity(ring(g, 3), "lie_ring")
        cong = rep.params.get("congruence_test")
        assert cong is not None and cong.get("consistent") is True

    def test_moufang_ring_on_group_algebra(self):
        # associative commutative rings satisfy the Moufang identity
        rep = ring_identity(ring(klein_with_one(), 2), "moufang_ring")
        assert rep.holds is True

    def test_alternative_reports_failed_side(self):
        rep = ring_identity(ring(l_loop(5, 2), 2), "alternative")
        if rep.holds is False:
            assert rep.params.get("failed_side") in (
                "right_alternative", "left_alternative")

    def test_unknown_identity(self):
        with pytest.raises(ValueError):
            ring_identity(ring(klein_with_one(), 2), "bogus")


class TestSmarandacheIdentities:
    def test_s_lie_with_witness(self):
        r = ring(z_groupoid(6, 3, 0, "Zstarstarstar"), 3)
        w = [r.zero().encode(),
             r.element([2, 0, 0, 1, 0, 0]).encode(),
             r.element([1, 0, 0, 2, 0, 0]).encode()]
        rep = smarandache_ring_identity(r, "s_lie", {"witness": w})
        assert rep.holds is True
        # replay the witness: x^2 = 0 and the Jacobi sum vanish on W
        elems = [r.decode(c) for c in w]
        for x in elems:
            assert (x * x).is_zero()
        for x in elems:
            for y in elems:
                for z in elems:
                    assert ((x * y) * z + (y * z) * x
                            + (z * x) * y).is_zero()

    def test_s_lie_rejects_bad_witness(self):
        r = ring(z_groupoid(6, 3, 0, "Zstarstarstar"), 3)
        # not additively closed mod 3, so not a subring
        rep = smarandache_ring_identity(
            r, "s_lie", {"witness": [0, r.basis(1).encode()]})
        assert rep.holds is False
        assert "not a subring" in rep.detail
        # additively closed but the square is nonzero
        w = [r.zero().encode(), r.basis(1).encode(),
             r.basis(1).scale(2).encode(), r.basis(3).encode(),
             r.basis(3).scale(2).encode(),
             (r.basis(1) + r.basis(3)).encode(),
             (r.basis(1) + r.basis(3).scale(2)).encode(),
             (r.basis(1).scale(2) + r.basis(3)).encode(),
             (r.basis(1).scale(2) + r.basis(3).scale(2)).encode()]
        rep2 = smarandache_ring_identity(r, "s_lie", {"witness": w})
        assert rep2.holds is False

    def test_sna_commutative(self):
        rep = smarandache_ring_identity(ring(l_loop(5, 3), 2),
                                        "sna_commutative")
        assert rep.holds in (True, False, "unknown-at-bound")

    def test_unknown_identity(self):
        with pytest.raises(ValueError):
            smarandache_ring_identity(ring(klein_with_one(), 2), "bogus")


class TestCheckProperty:
    def test_zero_square_whole_ring_vs_s_refined(self):
        # the whole-ring law fails (1^2 = 1) but the augmentation kernel
        # carries the law, so the S-refined check succeeds
        for r in (ring(klein_with_one(), 2), ring(l_loop(5, 3), 2)):
            rep = check_property(r, "zero_square")
            assert rep.holds is False
            x = parse_element(r, rep.counterexample["x"])
            assert not (x * x).is_zero()
            assert check_property(r, "s_zero_square").holds is True

    def test_gamma_n_false_with_square_zero_witness(self):
        r = ring(klein_with_one(), 2)
        for n in (2, 3, 17, 64):
            rep = check_property(r, "gamma_n", {"n": n})
            assert rep.holds is False
            alpha = parse_element(r, rep.counterexample["alpha"])
            assert not alpha.is_zero() and (alpha * alpha).is_zero()

    def test_p_ring_oracle(self):
        # Z2 Boolean check on an associative commutative group algebra
        r = ring(klein_with_one(), 2)
        rep = check_property(r, "p_ring", {"p": 2})
        brute = all(x.power_left(2) == x for x in r.all_elements()
                    if not x.is_zero())
        assert (rep.holds is True) == brute

    def test_strongly_implies_weak_right_commutative(self):
        rings = [ring(klein_with_one(), 2), ring(l_loop(5, 3), 2),
                 ring(z_groupoid(5, 2, 3), 2)]
        for r in rings:
            strong = ring_identity(r, "strongly_right_commutative")
            weak = ring_identity(r, "right_commutative")
            if strong.holds is True:
                assert weak.holds is True

    def test_unknown_property(self):
        with pytest.raises(ValueError):
            check_property(ring(klein_with_one(), 2), "bogus")
