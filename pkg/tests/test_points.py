import itertools
import random

import pytest

import weylbench as wb
from weylbench import comrings, galg, points as pts
from weylbench.abgroups import cyclic_group
from weylbench.comrings import base_field_ring, dual_numbers, product_ring
from weylbench.errors import InputError, OrderViolationError

from conftest import (cubic_grading, para_hurwitz_grading, trivial_grading,
                      truncated_power_grading, zero_mult_grading)


def swap_point(gr, R):
    return pts.point_matrix(gr.algebra, R,
                            [[R.zero(), R.one], [R.one, R.zero()]])


def test_automorphism_membership(Q, F3):
    g26 = para_hurwitz_grading(F3)
    R3 = base_field_ring(F3)
    assert pts.automorphism_membership(swap_point(g26, R3))
    assert pts.automorphism_membership(pts.identity_point(g26.algebra, R3))
    g34 = cubic_grading(Q)
    Rq = base_field_ring(Q)
    # u -> 2u would need 2^3 = 1
    bad = pts.point_matrix(g34.algebra, Rq, [
        [Rq.one, Rq.zero(), Rq.zero()],
        [Rq.zero(), Rq.from_int(2), Rq.zero()],
        [Rq.zero(), Rq.zero(), Rq.from_int(4)]])
    assert not pts.automorphism_membership(bad)


def test_stab_and_diag_membership(Q, F3):
    g24 = zero_mult_grading(Q)
    Rq = base_field_ring(Q)
    d57 = pts.point_matrix(g24.algebra, Rq,
                           [[Rq.from_int(5), Rq.zero()], [Rq.zero(), Rq.from_int(7)]])
    assert pts.stab_membership(g24, d57)
    res = pts.diag_membership(g24, d57)
    assert res.member
    assert res.scalars[(2,)] == Rq.from_int(5)
    assert res.scalars[(3,)] == Rq.from_int(7)
    sw = swap_point(g24, Rq)
    assert not pts.stab_membership(g24, sw)
    assert not pts.diag_membership(g24, sw).member
    with pytest.raises(InputError):
        pts.stab_membership(g24, pts.point_matrix(g24.algebra, Rq,
                                                  [[Rq.zero()] * 2] * 2))


def test_tau_from_character(Q, F3, F7):
    g34_7 = galg.grading_over(cubic_grading(Q), F7)
    R7 = base_field_ring(F7)
    tau = pts.tau_from_character(g34_7, R7, [(2,)])
    assert tau.entries == (((1,), (0,), (0,)), ((0,), (2,), (0,)), ((0,), (0,), (4,)))
    assert pts.automorphism_membership(tau)
    assert pts.stab_membership(g34_7, tau)
    with pytest.raises(OrderViolationError):
        pts.tau_from_character(g34_7, R7, [(3,)])  # 3^3 = 6 != 1 mod 7
    # dual numbers in characteristic 3: 1 + eps has order 3
    g26 = para_hurwitz_grading(F3)
    D = dual_numbers(F3, 2)
    tau = pts.tau_from_character(g26, D, [(F3.one(), F3.one())])
    assert pts.diag_membership(g26, tau).member


def test_block_permutations_connected(F3):
    g26 = para_hurwitz_grading(F3)
    R3 = base_field_ring(F3)
    res = pts.block_permutations(g26, swap_point(g26, R3))
    assert res.ok and len(res.certificates) == 1
    e, sigma = res.certificates[0]
    assert sigma == {(1,): (2,), (2,): (1,)}


def test_block_permutations_per_idempotent(Q):
    # product ring with different permutations in the two blocks
    g24 = zero_mult_grading(Q)
    Rq = base_field_ring(Q)
    R = product_ring(Rq, Rq)
    one1 = (Q.one(), Q.zero())
    one2 = (Q.zero(), Q.one())
    zero = R.zero()
    phi = pts.point_matrix(g24.algebra, R, [[one1, one2], [one2, one1]])
    res = pts.block_permutations(g24, phi)
    assert res.ok and len(res.certificates) == 2
    perms = {tuple(sorted(sig.items())) for _, sig in res.certificates}
    ident = ((((2,), (2,)), ((3,), (3,))))
    swapped = ((((2,), (3,)), ((3,), (2,))))
    assert perms == {tuple(ident), tuple(swapped)}
    # non-monomial automorphism fails with a witness
    tri = pts.point_matrix(g24.algebra, Rq,
                           [[Rq.one, Rq.one], [Rq.zero(), Rq.one]])
    res = pts.block_permutations(g24, tri)
    assert not res.ok and res.witness is not None


def test_cent_norm_on_swap_examples(Q, F3):
    g24 = zero_mult_grading(Q)
    Rq = base_field_ring(Q)
    sw = swap_point(g24, Rq)
    assert pts.autgamma_membership(g24, sw)
    res = pts.norm_membership_generic(g24, sw)
    assert res.member
    shift = res.shifts[0][1]
    assert shift == {(2,): (3,), (3,): (2,)}
    assert not pts.cent_membership_generic(g24, sw)

    g26 = para_hurwitz_grading(F3)
    R3 = base_field_ring(F3)
    sw26 = swap_point(g26, R3)
    assert not pts.cent_membership_generic(g26, sw26)
    res = pts.norm_membership_generic(g26, sw26)
    assert res.member
    assert res.shifts[0][1] == {(1,): (2,), (2,): (1,)}


def test_dgroup_norm_membership(Q, F3):
    g24 = zero_mult_grading(Q)
    Rq = base_field_ring(Q)
    res = pts.dgroup_norm_membership(g24, swap_point(g24, Rq))
    assert res.status == "nonmember"
    assert res.relation == (3, 0)
    assert res.forced == {(2,): (3,), (3,): (2,)}
    g26 = para_hurwitz_grading(F3)
    R3 = base_field_ring(F3)
    res = pts.dgroup_norm_membership(g26, swap_point(g26, R3))
    assert res.status == "member"
    assert res.forced == {(1,): (2,), (2,): (1,)}
    # any diagonal character point is a member
    d = pts.diag_points(g24, base_field_ring(wb.prime_field(3)))
    g24f3 = zero_mult_grading(wb.prime_field(3))
    for p in pts.diag_points(g24f3, base_field_ring(wb.prime_field(3))):
        assert pts.dgroup_norm_membership(g24f3, p).status == "member"


def test_diag_points_counts(Q, F3, F7):
    F3r = base_field_ring(F3)
    g26 = para_hurwitz_grading(F3)
    assert len(pts.diag_points(g26, F3r)) == 1
    assert len(pts.diag_points(g26, dual_numbers(F3, 2))) == 3
    assert len(pts.diag_points(zero_mult_grading(F3), F3r)) == 4
    g34 = cubic_grading(Q)
    assert len(pts.diag_points(g34, base_field_ring(Q))) == 1
    g34_7 = galg.grading_over(g34, F7)
    assert len(pts.diag_points(g34_7, base_field_ring(F7))) == 3


def test_enumerate_points_counts(F3):
    g26 = para_hurwitz_grading(F3)
    F3r = base_field_ring(F3)
    assert len(pts.enumerate_points(g26, F3r, "aut")) == 2
    assert len(pts.enumerate_points(g26, dual_numbers(F3, 2), "aut")) == 6
    g24 = zero_mult_grading(F3)
    assert len(pts.enumerate_points(g24, F3r, "autgamma")) == 8
    assert len(pts.enumerate_points(g24, F3r, "stab")) == 4


def test_enumerated_point_sets_are_groups(F3):
    g26 = para_hurwitz_grading(F3)
    R = dual_numbers(F3, 2)
    for which in ("aut", "stab", "autgamma"):
        plist = pts.enumerate_points(g26, R, which)
        entries = {p.entries for p in plist}
        for a in plist:
            Minv = pts.ring_mat_inv(R, [list(r) for r in a.entries])
            assert tuple(tuple(r) for r in Minv) in entries
            for b in plist:
                prod = pts.ring_mat_mul(R, [list(r) for r in a.entries],
                                        [list(r) for r in b.entries])
                assert tuple(tuple(r) for r in prod) in entries


def test_cross_assertions_over_ring_battery(F3):
    # every automorphism point over small rings: cent==stab, norm==autgamma
    # (the membership functions raise MathIdentityError on any disagreement)
    g26 = para_hurwitz_grading(F3)
    for R in (base_field_ring(F3), dual_numbers(F3, 2),
              product_ring(base_field_ring(F3), base_field_ring(F3))):
        for p in pts.enumerate_points(g26, R, "aut"):
            pts.cent_membership_generic(g26, p)
            pts.norm_membership_generic(g26, p)


def test_smooth_case_normalizer_equality(F5):
    # over F5 the diagonal scheme of the zero-multiplication grading is a
    # torus; scheme-normalizer points must equal the naive group normalizer
    gr = zero_mult_grading(F5)
    R = base_field_ring(F5)
    aut = pts.enumerate_points(gr, R, "aut")
    assert len(aut) == 480
    generic = [p for p in aut if pts.norm_membership_generic(gr, p).member]
    dpts = pts.diag_points(gr, R)
    assert len(dpts) == 16
    naive = pts.pointwise_normalizer(aut, dpts)
    assert len(generic) == len(naive) == 32
    assert {p.entries for p in generic} == {p.entries for p in naive}


def test_generic_psi_entries(Q, F3):
    g24 = zero_mult_grading(Q)
    R = base_field_ring(Q)
    Psi = pts.generic_psi(g24, R)
    GA = comrings.GroupAlgebra(R, g24.group)
    assert Psi[0][0] == GA.monomial(R.one, (2,))
    assert Psi[1][1] == GA.monomial(R.one, (3,))
    assert GA.is_zero(Psi[0][1])
    triv = trivial_grading(F3)
    R3 = base_field_ring(F3)
    Psi = pts.generic_psi(triv, R3)
    GA3 = comrings.GroupAlgebra(R3, triv.group)
    assert Psi[0][0] == GA3.monomial(R3.one, ())


def test_cent_holds_on_diagonal_over_rationals(Q):
    g24 = zero_mult_grading(Q)
    Rq = base_field_ring(Q)
    d57 = pts.point_matrix(g24.algebra, Rq,
                           [[Rq.from_int(5), Rq.zero()], [Rq.zero(), Rq.from_int(7)]])
    assert pts.cent_membership_generic(g24, d57)
    assert pts.norm_membership_generic(g24, d57).member


def test_diag_points_not_enumerable_over_rationals(Q):
    # free universal group over the rationals has infinitely many characters
    from weylbench.errors import NotEnumerableError
    g24 = zero_mult_grading(Q)
    with pytest.raises(NotEnumerableError):
        pts.diag_points(g24, base_field_ring(Q))


def test_integer_graded_algebra_full_stack(F3):
    gr = truncated_power_grading(F3)
    assert gr.support == ((0,), (1,), (2,))
    R = base_field_ring(F3)
    aut = pts.enumerate_points(gr, R, "aut")
    assert len(aut) == 6          # unit fixed, x -> a x + b x^2 with a != 0
    autg = pts.enumerate_points(gr, R, "autgamma")
    stab = pts.enumerate_points(gr, R, "stab")
    assert len(autg) == len(stab) == 2   # only monomial maps preserve degrees
    for p in aut:
        pts.cent_membership_generic(gr, p)    # RG with an infinite G
        pts.norm_membership_generic(gr, p)
    from weylbench import galg
    assert galg.universal_group(gr).group.group_str() == "Z^1"


def test_mixed_blockwise_membership(Q):
    # over Q x Q: monomial in one block, non-monomial in the other
    g24 = zero_mult_grading(Q)
    Rq = base_field_ring(Q)
    R = product_ring(Rq, Rq)
    e1 = (Q.one(), Q.zero())
    e2 = (Q.zero(), Q.one())
    one = R.one
    zero = R.zero()
    # block 1: swap; block 2: upper triangular (not monomial)
    phi = pts.point_matrix(g24.algebra, R,
                           [[e2, one], [e1, e2]])
    assert pts.automorphism_membership(phi)
    assert not pts.autgamma_membership(g24, phi)
    res = pts.norm_membership_generic(g24, phi)   # cross-asserted inside
    assert not res.member


def test_diag_count_for_free_universal_group_over_finite_field(F3):
    # universal group Z^1: the diagonal points biject with the units
    gr = truncated_power_grading(F3)
    dp = pts.diag_points(gr, base_field_ring(F3))
    assert len(dp) == 2


def test_cross_assertions_with_nilpotents_and_blocks(F3):
    # one block with nilpotents, one reduced block: the blockwise normalizer
    # test and the per-idempotent permutation certificates must still agree
    g26 = para_hurwitz_grading(F3)
    R = product_ring(dual_numbers(F3, 2), base_field_ring(F3))
    assert len(R.idempotents()) == 2
    plist = pts.enumerate_points(g26, R, "aut")
    assert len(plist) == 12   # 6 points over the dual block times 2 over F3
    for p in plist:
        pts.cent_membership_generic(g26, p)
        res = pts.norm_membership_generic(g26, p)
        if res.member:
            assert len(res.shifts) == 2
