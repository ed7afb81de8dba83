"""End-to-end acceptance gate: eighteen numbered criteria, one test each.

Run with `pytest -v tests/test_acceptance.py` to get one pass/fail line per
criterion.  Expected values marked [PAPER] are transcribed printed tables
and equations; [DERIVED] values were frozen from independent exhaustive
scans; [TRIVIAL] facts are asserted directly.
"""

import time
from math import gcd

import numpy as np
import pytest

from naring.cli import main as cli_main
from naring.corpus import run_corpus
from naring.elements import (
    RingScan, find_special, is_smarandache_element, quasi_regular_scan,
)
from naring.identities import check_property, ring_identity, \
    smarandache_ring_identity
from naring.magma import (
    build, holds_identity, jordan_loop, l_loop, smarandache_magma_check,
    z_groupoid,
)
from naring.ring import envelope, parse_element, ring
from naring.substruct import (
    SubsetSet, enumerate_ideals, generate_ideal, ideal_lattice,
    ideal_relation, lattice_identity,
)


def valid_ms(n):
    return [m for m in range(2, n)
            if gcd(m, n) == 1 and gcd(m - 1, n) == 1]


# [PAPER] printed order-6 table (Example 2.1.3 layout)
PRINTED_5_3 = [
    "e 1 2 3 4 5", "1 e 4 2 5 3", "2 4 e 5 3 1",
    "3 2 5 e 1 4", "4 5 3 1 e 2", "5 3 1 4 2 e",
]

# [PAPER] printed order-8 table (Example 2.1.2 layout)
PRINTED_7_3 = [
    "e 1 2 3 4 5 6 7", "1 e 4 7 3 6 2 5", "2 6 e 5 1 4 7 3",
    "3 4 7 e 6 2 5 1", "4 2 5 1 e 7 3 6", "5 7 3 6 2 e 1 4",
    "6 5 1 4 7 3 e 2", "7 3 6 2 5 1 4 e",
]


def loop_2_2_3():
    # [PAPER] the order-6 loop of the quasi-regularity worked example
    table = [[0, 1, 2, 3, 4, 5], [1, 0, 4, 2, 5, 3], [2, 4, 0, 5, 3, 1],
             [3, 2, 5, 0, 1, 4], [4, 5, 3, 1, 0, 2], [5, 3, 1, 4, 2, 0]]
    return build(["e", "g1", "g2", "g3", "g4", "g5"], table, "e")


def loop_2_4_1():
    # [PAPER] order-5 loop used for the |L*| = 16 envelope count
    rows = ["1 a b c d", "a d c 1 b", "b 1 d a c", "c b 1 d a", "d c a b 1"]
    return build(["1", "a", "b", "c", "d"], [r.split() for r in rows], "1")


def loop_2_4_2():
    # [PAPER] order-8 loop with the printed orthogonal ideal pair
    rows = ["1 a b c d e f g", "a 1 c e g b d f", "b g 1 d f a c e",
            "c f a 1 e g b d", "d e g b 1 f a c", "e d f a c 1 g b",
            "f c e g b d 1 a", "g b d f a c e 1"]
    return build(["1", "a", "b", "c", "d", "e", "f", "g"],
                 [r.split() for r in rows], "1")


def loop_2_4_5():
    # [PAPER] order-5 loop with the modular/supermodular 4-ideal lattice
    table = [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 1, 0, 3],
             [3, 2, 4, 1, 0], [4, 3, 0, 2, 1]]
    return build(["1", "a", "b", "c", "d"], table, "1")


def loop_2_4_6():
    # [PAPER] order-7 loop with the strongly modular 4-ideal lattice
    rows = ["1 a b c d e f", "a f c b e 1 d", "b d f 1 a c e",
            "c e d a f b 1", "d 1 e f c a b", "e c 1 d b f a",
            "f b a e 1 d c"]
    return build(["1", "a", "b", "c", "d", "e", "f"],
                 [r.split() for r in rows], "1")


def klein_with_one():
    # [TRIVIAL] the Klein four group with unit, order-4 member of the
    # commutative square-one family
    return build(["1", "a0", "a1", "a2"],
                 [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]],
                 identity="1")


def groupoid_3_4_2():
    # [PAPER] order-4 groupoid for the |G*| = 27 envelope count
    rows = ["e a0 a1 a2", "a0 e a2 a1", "a1 a2 e a0", "a2 a1 a0 e"]
    return build(["e", "a0", "a1", "a2"], [r.split() for r in rows], "e")


def full_sum(r):
    return r.element([1] * r.magma.order)


def test_criterion_01_cayley_fidelity(capsys):
    t0 = time.perf_counter()
    for args, printed in ((["5", "3"], PRINTED_5_3),
                          (["7", "3"], PRINTED_7_3)):
        assert cli_main(["gen", "loop", "--n", args[0], "--m", args[1]]) == 0
        out = capsys.readouterr().out
        rows = [ln.split() for ln in out.strip().splitlines()
                if ln.strip()][1:]     # drop the label header
        assert rows == [p.split() for p in printed]
    assert time.perf_counter() - t0 < 1.0


def test_criterion_02_s_loop_theorem():
    t0 = time.perf_counter()
    checked = 0
    for n in (5, 7, 9, 15, 19, 25):
        for m in valid_ms(n):
            rep = smarandache_magma_check(l_loop(n, m), "s_loop")
            assert rep.holds is True, (n, m)
            checked += 1
    assert checked > 0
    assert time.perf_counter() - t0 < 5.0


def test_criterion_03_fn_counts():
    t0 = time.perf_counter()
    # strict non-commutativity: every off-diagonal pair disagrees
    def strict(loop):
        t, k = loop.table, loop.order
        return all(t[i][j] != t[j][i]
                   for i in range(1, k) for j in range(1, k) if i != j)
    counts = {n: sum(1 for m in valid_ms(n) if strict(l_loop(n, m)))
              for n in (5, 7, 15)}
    assert counts == {5: 2, 7: 4, 15: 0}
    assert time.perf_counter() - t0 < 1.0


def test_criterion_04_wip():
    rep = holds_identity(l_loop(7, 3), "wip")
    assert rep.holds is True and rep.exhaustive


def test_criterion_05_s_idempotents():
    r = ring(l_loop(5, 3), 5)
    alpha = parse_element(r, "1+g1+g2+g3+g4+g5")
    beta = parse_element(r, "3+3*g1")
    x = alpha.scale(4)
    y = parse_element(r, "2+2*g1")
    # the four printed equations, replayed exactly
    assert alpha * alpha == alpha
    assert x * x == alpha and (alpha * x == x or x * alpha == x)
    assert beta * beta == beta
    assert y * y == beta and (beta * y == y or y * beta == y)
    for el in (alpha, beta):
        assert is_smarandache_element(r, el, "s_idempotent").holds is True


def test_criterion_06_s_pseudo_zero_divisors():
    r = ring(l_loop(5, 3), 2)
    for i in range(1, 6):
        el = parse_element(r, f"1+g{i}")
        pseudo = is_smarandache_element(r, el, "s_pseudo_zero_divisor")
        strict = is_smarandache_element(r, el, "s_zero_divisor")
        assert pseudo.holds is True, i
        assert pseudo.exhaustive
        assert strict.holds is False, i


def test_criterion_07_quasi_regular_split():
    t0 = time.perf_counter()
    loop = loop_2_2_3()
    assert quasi_regular_scan(ring(loop, 2))["all_W_rqr"] is True
    assert quasi_regular_scan(ring(loop, 3))["all_W_rqr"] is False
    assert time.perf_counter() - t0 < 10.0


def test_criterion_08_coefficient_sum_law():
    t0 = time.perf_counter()
    r = ring(l_loop(5, 2), 3)
    out = quasi_regular_scan(r)
    aug = RingScan(r).augmentations()
    assert out["rqr_set"], "scan found no right quasi-regular elements"
    for x in out["rqr_set"]:
        assert int(aug[x]) != 1
    assert time.perf_counter() - t0 < 30.0


def test_criterion_09_ideal_lattices():
    t0 = time.perf_counter()
    r5 = ring(loop_2_4_5(), 2)
    ideals5 = enumerate_ideals(r5)
    lat5 = ideal_lattice(r5)
    assert len(ideals5) == 4
    assert lattice_identity(lat5, "modular").holds is True
    assert lattice_identity(lat5, "supermodular").holds is True
    r6 = ring(loop_2_4_6(), 2)
    ideals6 = enumerate_ideals(r6)
    lat6 = ideal_lattice(r6)
    assert len(ideals6) == 4
    assert lattice_identity(lat6, "strongly_modular").holds is True
    assert time.perf_counter() - t0 < 30.0


def test_criterion_10_orthogonal_ideals():
    r = ring(loop_2_4_2(), 2)
    s = full_sum(r)
    i_set = generate_ideal(r, [s])
    scan = RingScan(r)
    j = frozenset(int(c) for c in np.nonzero(scan.augmentations() == 0)[0])
    assert SubsetSet(r, j).is_ideal()
    assert ideal_relation(r, "orthogonal", {"I": i_set, "J": j}).holds is True
    assert ideal_relation(r, "self_orthogonal", {"I": i_set}).holds is True
    # p | n grid (p = 2 and p = 5 both divide the order-10 loop size)
    r9 = ring(l_loop(9, 2), 2)
    s9 = full_sum(r9)
    i9 = generate_ideal(r9, [s9])
    scan9 = RingScan(r9)
    j9 = frozenset(int(c) for c in np.nonzero(scan9.augmentations() == 0)[0])
    assert ideal_relation(r9, "orthogonal", {"I": i9, "J": j9}).holds is True
    r95 = ring(l_loop(9, 2), 5)
    s95 = full_sum(r95)
    assert (s95 * s95).is_zero()
    for i in range(1, 10):
        d = r95.basis(0) - r95.basis(i)
        assert (s95 * d).is_zero() and (d * s95).is_zero()


def test_criterion_11_envelopes():
    r1 = ring(loop_2_4_1(), 2)
    env1 = envelope(r1)
    assert env1.order == 16
    alpha = parse_element(r1, "1+a+b+c+d")
    assert alpha * alpha == alpha
    env2 = envelope(ring(groupoid_3_4_2(), 3))
    assert env2.order == 27
    # commutative square-one family over Z2: order 2n -> envelope 2^(2n-1)
    for n, magma in ((2, klein_with_one()), (3, l_loop(5, 3))):
        assert magma.is_commutative()
        assert all(magma.table[x][x] == magma.identity
                   for x in range(magma.order))
        env = envelope(ring(magma, 2))
        assert env.order == 2 ** (2 * n - 1)
        assert env.is_commutative()
        assert env.identity is not None
        assert all(env.table[x][x] == env.identity for x in range(env.order))
        if n == 2:
            assert env.is_loop()
        else:
            # documented discrepancy: the order-6 envelope is not a Latin
            # square; the frozen duplicate is (1+g1+g2)(1+g1+g3) =
            # (1+g1+g2)*g4, and an exhaustive search over all six
            # commutative exponent-2 loops of order 6 finds no loop envelope
            assert not env.is_loop()
            r = ring(magma, 2)
            x = parse_element(r, "1+g1+g2")
            assert x * parse_element(r, "1+g1+g3") == \
                x * parse_element(r, "g4")


def test_criterion_12_never_lie():
    loops = [l_loop(5, 2), l_loop(5, 3), l_loop(5, 4), l_loop(7, 3)]
    for loop in loops:
        for k in (2, 3, 4, 5, 12):
            r = ring(loop, k)
            if r.cardinality <= 1 << 20:
                rep = ring_identity(r, "lie_ring")
                assert rep.holds is False, (loop.name, k)
                assert rep.counterexample is not None
            else:
                # beyond the scan cap the basis witness settles it:
                # g1 * g1 = e != 0, so the square-zero law already fails
                g1 = r.basis(1)
                assert not (g1 * g1).is_zero()
    # groupoid-ring samples with the congruence cross-check
    samples = [(2, z_groupoid(5, 2, 3, "Zstarstarstar")),
               (3, z_groupoid(6, 3, 0, "Zstarstarstar")),
               (3, z_groupoid(5, 4, 1, "Zstarstarstar"))]
    for k, g in samples:
        rep = ring_identity(ring(g, k), "lie_ring")
        assert rep.holds is False
        cong = rep.params.get("congruence_test")
        assert cong is not None and cong.get("consistent") is True
        # replay the congruences independently over the modulus
        t, u, n = cong["t"], cong["u"], cong["n"]
        assert cong["t_plus_u_zero"] == ((t + u) % n == 0)
        assert cong["quadratic_zero"] == ((t * t + u * t + u) % n == 0)


def test_criterion_13_s_lie():
    r = ring(z_groupoid(6, 3, 0, "Zstarstarstar"), 3)
    w_elems = [r.zero(), r.element([2, 0, 0, 1, 0, 0]),
               r.element([1, 0, 0, 2, 0, 0])]
    codes = [x.encode() for x in w_elems]
    rep = smarandache_ring_identity(r, "s_lie", {"witness": codes})
    assert rep.holds is True
    for x in w_elems:
        assert (x * x).is_zero()
    for x in w_elems:
        for y in w_elems:
            for z in w_elems:
                assert ((x * y) * z + (y * z) * x + (z * x) * y).is_zero()


def test_criterion_14_jordan():
    t0 = time.perf_counter()
    for p in (5, 7):
        assert jordan_loop(p).table == l_loop(p, (p + 1) // 2).table
        rep = ring_identity(ring(jordan_loop(p), 2), "jordan_ring")
        assert rep.holds is True and rep.exhaustive
    assert time.perf_counter() - t0 < 60.0


def test_criterion_15_groupoid_ring_split():
    for magma in (klein_with_one(), l_loop(5, 3)):
        r = ring(magma, 2)
        scan = RingScan(r)
        sq = scan.squares()
        aug = scan.augmentations()
        one = scan.one_code()
        assert bool((sq[aug == 0] == 0).all())
        assert bool((sq[aug == 1] == one).all())


def test_criterion_16_gamma_n_refutation():
    for magma in (klein_with_one(), l_loop(5, 3)):
        r = ring(magma, 2)
        for n in range(2, 65):
            rep = check_property(r, "gamma_n", {"n": n})
            assert rep.holds is False, (magma.name, n)
            alpha = parse_element(r, rep.counterexample["alpha"])
            assert not alpha.is_zero()
            assert (alpha * alpha).is_zero()


def test_criterion_17_discrepancy_handling():
    results = run_corpus("thm-2.2.7")
    assert len(results) == 1
    res = results[0]
    assert res.status == "refuted_as_stated"
    assert res.display_status == "discrepancy-documented"
    assert res.status != "confirmed"
    idems = res.details["two_support_idempotents"]
    assert any(t.startswith("3 + 2*g") for t in idems)
    assert any(t.startswith("3 + 3*g") for t in idems)


def test_criterion_18_property_implications():
    # S-refined element classes imply their base classes, checked
    # exhaustively on corpus-scale rings
    pairs = [
        ("s_idempotent", "idempotent"),
        ("s_zero_divisor", "zero_divisor"),
        ("s_pseudo_zero_divisor", "zero_divisor"),
        ("s_weak_zero_divisor", "zero_divisor"),
        ("s_quasi_regular", "right_qr"),
        ("s_nilpotent", "nilpotent"),
        ("s_semi_nilpotent", "semi_nilpotent"),
        ("s_unit", "left_unit"),
    ]
    rings = [ring(l_loop(5, 3), 2), ring(klein_with_one(), 2),
             ring(klein_with_one(), 3)]
    violations = []
    for r in rings:
        base_sets = {}
        for s_class, base in pairs:
            if base not in base_sets:
                base_sets[base] = {
                    parse_element(r, w.subject).encode()
                    for w in find_special(r, base)}
            for code in range(r.cardinality):
                if code == 0:
                    continue
                rep = is_smarandache_element(r, code, s_class)
                if rep.holds is True and code not in base_sets[base]:
                    violations.append((repr(r), s_class, code))
    assert violations == []
    # strongly-X implies X for the strength-paired whole-ring properties
    ring_pairs = [("strongly_right_commutative", "right_commutative")]
    for r in rings + [ring(l_loop(5, 2), 2)]:
        for strong, weak in ring_pairs:
            if ring_identity(r, strong).holds is True:
                assert ring_identity(r, weak).holds is True
    # and for the paired lattice identities
    for magma in (loop_2_4_5(), loop_2_4_6()):
        lat = ideal_lattice(ring(magma, 2))
        if lattice_identity(lat, "strongly_modular").holds is True:
            assert lattice_identity(lat, "modular").holds is True
