import pytest

from dyckchi.dyck import balanced_blocks, reverse, zeta, zeta_inverse
from dyckchi.partition import (
    adjacent_sort_swaps,
    alpha_inv,
    alpha_quinv,
    arm_leg_coleg,
    boxes,
    conjugate,
    corner_count,
    distinct_value_pairs,
    dominates,
    inv_pairs,
    mult_inversion_sum,
    parse_partition,
    partitions,
    path_balanced,
    path_inv,
    path_quinv,
    quinv_pairs,
    reading_order,
    up_pairs,
)

PARTITION_COUNTS = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


def upto(n, start=1):
    return [lam for m in range(start, n + 1) for lam in partitions(m)]


def conjugate_by_counting(lam):
    return tuple(c for c in (sum(1 for p in lam if p >= j) for j in range(1, 50)) if c)


@pytest.mark.parametrize("n", range(11))
def test_partition_counts(n):
    ps = list(partitions(n))
    assert len(ps) == PARTITION_COUNTS[n]
    assert ps == sorted(ps, reverse=True)


def test_parse_partition():
    assert parse_partition("3,2") == (3, 2)
    assert parse_partition("") == ()
    for bad in ("2,3", "3,0", "a", "3,-1"):
        with pytest.raises(ValueError):
            parse_partition(bad)


def test_conjugate():
    assert conjugate((3, 2)) == (2, 2, 1)
    assert conjugate((5,)) == (1,) * 5
    assert conjugate(()) == ()
    for lam in upto(10):
        assert conjugate(conjugate(lam)) == lam
        assert conjugate(lam) == conjugate_by_counting(lam)


def test_arm_leg_coleg():
    assert arm_leg_coleg((3, 2), (1, 1)) == (2, 1, 0)
    assert arm_leg_coleg((3, 2), (2, 2)) == (0, 0, 1)
    for i in range(1, 5):
        assert arm_leg_coleg((4,), (1, i)) == (4 - i, 0, 0)
    assert sum(arm_leg_coleg((3, 2), b)[0] for b in boxes((3, 2))) == 4
    with pytest.raises(ValueError):
        arm_leg_coleg((3, 2), (2, 3))


def test_reading_orders_32():
    inv = reading_order((3, 2), "inv")
    quinv = reading_order((3, 2), "quinv")
    # reading row 1 is the part 2, reading row 2 is the part 3
    assert [inv[(1, c)] for c in (1, 2)] == [1, 2]
    assert [inv[(2, c)] for c in (1, 2, 3)] == [3, 4, 5]
    assert [quinv[(1, c)] for c in (1, 2)] == [2, 1]
    assert [quinv[(2, c)] for c in (1, 2, 3)] == [5, 4, 3]


def test_attack_pairs_32():
    assert inv_pairs((3, 2)) == {(1, 2), (2, 3), (3, 4), (3, 5), (4, 5)}
    assert quinv_pairs((3, 2)) == {(1, 2), (1, 3), (2, 3), (2, 4), (3, 4), (3, 5), (4, 5)}
    assert inv_pairs((4,)) == {(i, j) for i in range(1, 5) for j in range(i + 1, 5)}


def test_paths_32():
    assert path_inv((3, 2)).to_bits() == "1101011000"
    assert path_quinv((3, 2)).to_bits() == "1110101000"
    assert path_balanced((3, 2)).to_bits() == "1011001100"


def test_single_row_paths():
    for n in range(1, 6):
        assert path_inv((n,)).steps == path_quinv((n,)).steps == "N" * n + "E" * n
        assert path_balanced((n,)).steps == "NE" * n


@pytest.mark.parametrize("lam", upto(8))
def test_area_and_corner_relations(lam):
    pinv, pquinv = path_inv(lam), path_quinv(lam)
    assert pinv.semilength == pquinv.semilength == sum(lam)
    assert pinv.area_cells == inv_pairs(lam)
    assert pquinv.area_cells == quinv_pairs(lam)
    assert pinv.corners == up_pairs(lam, "inv")
    assert pquinv.corners == up_pairs(lam, "quinv")
    assert len(pinv.corners) == len(pquinv.corners) == corner_count(lam)


@pytest.mark.parametrize("lam", upto(8))
def test_zeta_relations(lam):
    pi = path_balanced(lam)
    assert reverse(zeta(pi)) == path_inv(lam)
    assert reverse(zeta(reverse(pi))) == path_quinv(lam)
    assert reverse(zeta(reverse(zeta_inverse(reverse(path_inv(lam)))))) == path_quinv(lam)
    assert balanced_blocks(pi) == tuple(sorted(conjugate(lam)))


def test_alpha_examples():
    assert (alpha_inv((3, 2)), alpha_quinv((3, 2))) == (1, 3)
    for n in range(1, 7):
        assert alpha_inv((n,)) == alpha_quinv((n,)) == 0
        assert alpha_inv((1,) * n) == alpha_quinv((1,) * n) == 0


def test_mult_inversion_sum_examples():
    assert mult_inversion_sum((2, 2, 1)) == 2
    assert mult_inversion_sum((3, 3, 3)) == 0
    assert mult_inversion_sum((3, 2, 1)) == 3


@pytest.mark.parametrize("lam", upto(10))
def test_alpha_difference(lam):
    conj = conjugate(lam)
    diff = alpha_quinv(lam) - alpha_inv(lam)
    assert diff == mult_inversion_sum(conj) == distinct_value_pairs(conj)
    assert len(adjacent_sort_swaps(conj)) == diff


def test_corner_count_examples():
    assert corner_count((3, 2)) == 2
    assert corner_count((4,)) == 0
    assert corner_count((1,) * 5) == 4


def test_dominance():
    assert dominates((3, 1), (2, 2))
    assert not dominates((2, 2), (3, 1))
    assert not dominates((3, 1, 1, 1), (2, 2, 2))
    assert not dominates((2, 2, 2), (3, 1, 1, 1))
