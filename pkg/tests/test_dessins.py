from fractions import Fraction
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from abelbelyi.dessins import (
    DessinClass,
    aut_order,
    compositions_count,
    count_box,
    count_box_primitive,
    count_hex,
    count_hex_primitive,
    count_shape,
    enumerate_box,
    enumerate_hex,
    is_power,
    is_primitive,
    power_orders,
    total_abel_belyi,
    total_abel_belyi_oracle,
)
from abelbelyi.numtheory import dedekind_psi, divisors, euler_phi


def parts(classes):
    return {c.parts for c in classes}


def rot_set(*tuples):
    return {DessinClass.of(t).parts for t in tuples}


def test_enumerate_hex_examples():
    assert parts(enumerate_hex(6)) == rot_set((4, 1, 1), (3, 2, 1), (3, 1, 2), (2, 2, 2))
    assert parts(enumerate_hex(3)) == {(1, 1, 1)}
    assert parts(enumerate_hex(4)) == rot_set((2, 1, 1))


def test_enumerate_box_examples():
    assert parts(enumerate_box(6)) == rot_set((2, 2, 1, 1), (3, 1, 1, 1), (2, 1, 2, 1))
    assert parts(enumerate_box(4)) == {(1, 1, 1, 1)}
    assert parts(enumerate_box(5)) == rot_set((2, 1, 1, 1))


def test_enumeration_domain():
    with pytest.raises(ValueError):
        enumerate_hex(2)
    with pytest.raises(ValueError):
        enumerate_box(3)


def test_enumeration_deterministic_and_unique():
    a = enumerate_box(12)
    assert a == enumerate_box(12)
    assert len(set(a)) == len(a)
    assert a == sorted(a)


def test_canonical_form():
    with pytest.raises(ValueError):
        DessinClass((2, 1, 1))
    assert DessinClass.of((1, 2, 1)).parts == (1, 1, 2)
    assert str(DessinClass.of((1, 2, 1, 2))) == "B<1,2,1,2>"


def test_aut_orders():
    assert aut_order(DessinClass.of((2, 2, 2))) == 3
    assert aut_order(DessinClass.of((2, 1, 2, 1))) == 2
    assert aut_order(DessinClass.of((4, 1, 1))) == 1
    assert aut_order(DessinClass.of((1, 1, 1, 1))) == 4


def test_power_examples():
    assert is_power(DessinClass.of((2, 2, 2)), 2)
    assert is_power(DessinClass.of((3, 1, 1, 1)), 2)
    assert is_power(DessinClass.of((2, 1, 2, 1)), 3)
    assert is_primitive(DessinClass.of((2, 2, 1, 1)))
    assert power_orders(DessinClass.of((3, 1, 1, 1))) == [2]
    with pytest.raises(ValueError):
        is_power(DessinClass.of((1, 1, 1)), 1)


def test_box_power_criterion_is_rotation_invariant():
    for n in range(4, 16):
        for c in enumerate_box(n):
            for m in range(2, n + 1):
                t = c.parts
                rots = [t[i:] + t[:i] for i in range(4)]
                verdicts = {(r[0] + r[1]) % m == 0 and (r[0] - r[2]) % m == 0 and (r[0] + r[3]) % m == 0 for r in rots}
                assert verdicts == {is_power(c, m)}


def test_power_forces_divisibility():
    # an m-th power exists only for m | n, so testing divisors is enough
    for n in range(4, 25):
        for c in enumerate_hex(n) + enumerate_box(n):
            for m in range(2, 2 * n):
                if is_power(c, m):
                    assert n % m == 0


def test_counts_n6():
    assert count_hex(6) == Fraction(10, 3)
    assert count_box(6) == Fraction(5, 2)
    assert count_hex_primitive(6) == 3
    assert count_box_primitive(6) == 1
    assert count_shape(6, "box", primitive=True) == 1


@pytest.mark.parametrize("n", range(3, 61))
def test_burnside_consistency(n):
    assert sum(Fraction(3, aut_order(c)) for c in enumerate_hex(n)) == comb(n - 1, 2) == compositions_count(n, 3)
    if n >= 4:
        assert sum(Fraction(4, aut_order(c)) for c in enumerate_box(n)) == comb(n - 1, 3)


@pytest.mark.parametrize("n", range(4, 41))
def test_closed_forms_and_stratification(n):
    assert count_hex(n) == Fraction((n - 1) * (n - 2), 6)
    assert count_box(n) == Fraction((n - 1) * (n - 2) * (n - 3), 24)
    phi, psi = euler_phi(n), dedekind_psi(n)
    assert count_hex_primitive(n) == Fraction(phi * psi, 6) - Fraction(phi, 2)
    assert count_box_primitive(n) == Fraction((n - 6) * phi * psi, 24) + Fraction(phi, 2)
    assert sum(count_hex_primitive(d) for d in divisors(n) if d > 2) == count_hex(n)


def test_primitive_classes_have_trivial_aut():
    for n in range(4, 30):
        for c in enumerate_hex(n) + enumerate_box(n):
            if is_primitive(c):
                assert aut_order(c) == 1


def test_total_examples():
    assert total_abel_belyi(3) == Fraction(2, 3)
    assert total_abel_belyi(4) == Fraction(3, 2)
    assert total_abel_belyi_oracle(5) == Fraction(24, 5)


@pytest.mark.parametrize("n", range(1, 8))
def test_total_oracle(n):
    assert total_abel_belyi_oracle(n) == total_abel_belyi(n)


def test_oracle_refuses_large_n():
    with pytest.raises(ValueError):
        total_abel_belyi_oracle(9)


@given(st.lists(st.integers(1, 9), min_size=3, max_size=4), st.integers(0, 3))
def test_class_of_any_rotation(ps, k):
    t = tuple(ps)
    k %= len(t)
    assert DessinClass.of(t) == DessinClass.of(t[k:] + t[:k])
