import pytest

import weylbench as wb
from weylbench import abgroups, comrings


def c6():
    return abgroups.cyclic_group(6)


def c3():
    return abgroups.cyclic_group(3)


def zero_mult_grading(F):
    """2-dim algebra with all products zero over F, graded by Z/6 with
    degrees 2 and 3."""
    z = (F.zero(), F.zero())
    A = wb.build_algebra(F, 2, [[z, z], [z, z]], ["u", "v"], label="zeromult")
    return wb.build_grading(A, c6(), [(2,), (3,)], label="G_zeromult")


def para_hurwitz_grading(F):
    """e1*e1 = e2, e2*e2 = e1, mixed products zero, graded by Z/3."""
    z = (F.zero(), F.zero())
    e1 = (F.one(), F.zero())
    e2 = (F.zero(), F.one())
    A = wb.build_algebra(F, 2, [[e2, z], [z, e1]], ["e1", "e2"], label="parahurwitz")
    return wb.build_grading(A, c3(), [(1,), (2,)], label="G_parahurwitz")


def cubic_grading(F):
    """1, u, u^2 with u^3 = 2, graded by Z/3 with degrees 0, 1, 2."""
    one = (F.one(), F.zero(), F.zero())
    u = (F.zero(), F.one(), F.zero())
    uu = (F.zero(), F.zero(), F.one())
    two = (F.from_int(2), F.zero(), F.zero())
    twou = (F.zero(), F.from_int(2), F.zero())
    A = wb.build_algebra(F, 3, [[one, u, uu], [u, uu, two], [uu, two, twou]],
                         ["one", "u", "uu"], label="cubicroot")
    return wb.build_grading(A, c3(), [(0,), (1,), (2,)], label="G_cubicroot")


def trivial_grading(F):
    """The para-Hurwitz table graded by the trivial group (one component)."""
    z = (F.zero(), F.zero())
    e1 = (F.one(), F.zero())
    e2 = (F.zero(), F.one())
    A = wb.build_algebra(F, 2, [[e2, z], [z, e1]], ["e1", "e2"], label="trivgrade")
    T = abgroups.trivial_group()
    return wb.build_grading(A, T, [(), ()], label="G_triv")




def truncated_power_grading(F):
    """F[x]/(x^3) with 1, x, x^2 graded by the integers in degrees 0, 1, 2."""
    one = (F.one(), F.zero(), F.zero())
    x = (F.zero(), F.one(), F.zero())
    xx = (F.zero(), F.zero(), F.one())
    z = (F.zero(),) * 3
    table = [[one, x, xx], [x, xx, z], [xx, z, z]]
    A = wb.build_algebra(F, 3, table, ["one", "x", "xx"], label="truncpow")
    Z = abgroups.FGAbelianGroup((), 1)
    return wb.build_grading(A, Z, [(0,), (1,), (2,)], label="G_truncpow")


@pytest.fixture(scope="session")
def Q():
    return wb.rationals()


@pytest.fixture(scope="session")
def F2():
    return wb.prime_field(2)


@pytest.fixture(scope="session")
def F3():
    return wb.prime_field(3)


@pytest.fixture(scope="session")
def F5():
    return wb.prime_field(5)


@pytest.fixture(scope="session")
def F7():
    return wb.prime_field(7)


@pytest.fixture(scope="session")
def F9(F3):
    return wb.extension_field(F3, [F3.one(), F3.zero(), F3.one()])


@pytest.fixture(scope="session")
def F4(F2):
    return wb.extension_field(F2, [F2.one(), F2.one(), F2.one()])


def battery_rings(F, c2_group=None, c3_group=None):
    """The standard test-ring list over a base field."""
    base = comrings.base_field_ring(F)
    rings = [
        base,
        comrings.dual_numbers(F, 2),
        comrings.dual_numbers(F, 3),
        comrings.product_ring(base, base),
        comrings.group_algebra_finite(F, c2_group or abgroups.cyclic_group(2)),
        comrings.group_algebra_finite(F, c3_group or abgroups.cyclic_group(3)),
    ]
    return rings
