import hypothesis.strategies as st
from hypothesis import given, settings
import pytest

from dualpart.cyclotomic import integer, zero, zeta_pow
from dualpart.errors import GuardExceeded, InputError
from dualpart.group import (
    Code,
    GroupIso,
    GroupSpec,
    all_subgroups,
    dual_code,
    elements,
    fourier_transform,
    generate,
    pairing,
    pairing_exponent,
    poisson_check,
)

Z6 = GroupSpec((6,))
Z2x3 = GroupSpec((2, 3))


def test_basic_attributes():
    assert Z6.size == 6 and Z6.exponent == 6
    assert Z2x3.size == 6 and Z2x3.exponent == 6
    assert GroupSpec((4, 6)).exponent == 12
    trivial = GroupSpec(())
    assert trivial.size == 1 and trivial.exponent == 1 and trivial.zero == ()
    assert elements(trivial) == ((),)


def test_carriers_are_not_normalized():
    # same abstract group, different carriers
    assert Z6 != Z2x3
    assert len(elements(Z6)) == len(elements(Z2x3)) == 6


def test_invalid_orders():
    with pytest.raises(InputError):
        GroupSpec((1,))
    with pytest.raises(InputError):
        GroupSpec((0, 3))


def test_rank_unrank_round_trip():
    g = GroupSpec((3, 4))
    for i, el in enumerate(elements(g)):
        assert g.rank(el) == i
        assert g.unrank(i) == el


def test_element_guard():
    with pytest.raises(GuardExceeded):
        elements(GroupSpec((70, 70)))
    # explicit override lifts it
    assert len(elements(GroupSpec((70, 70)), max_size=4900)) == 4900


def test_pairing_spot_values():
    assert pairing_exponent(Z6, (3,), (5,)) == 3
    assert pairing(Z6, (3,), (5,)) == zeta_pow(6, 15)
    assert pairing_exponent(Z2x3, (1, 1), (1, 2)) == 1
    # (E/2)*1*1 + (E/3)*1*2 = 3 + 4 = 7 = 1 mod 6
    assert pairing(Z2x3, (1, 1), (1, 2)) == zeta_pow(6, 1)


def test_pairing_is_symmetric_and_bilinear():
    g = GroupSpec((4,))
    for chi in elements(g):
        for x in elements(g):
            assert pairing_exponent(g, chi, x) == pairing_exponent(g, x, chi)
            for y in elements(g):
                lhs = pairing_exponent(g, chi, g.add(x, y))
                rhs = (pairing_exponent(g, chi, x) + pairing_exponent(g, chi, y)) % 4
                assert lhs == rhs


def test_orthogonality_medium_carriers():
    for g in (GroupSpec((36,)), GroupSpec((6, 6)), GroupSpec((2, 18))):
        e = g.exponent
        for chi in elements(g)[:8]:
            total = zero(e)
            for x in elements(g):
                total = total + pairing(g, chi, x)
            assert total == integer(e, g.size if chi == g.zero else 0)


def test_generate_and_code():
    c = generate(Z6, [(3,)])
    assert c.elements == ((0,), (3,))
    assert c.size == 2
    c2 = Code.from_elements(Z6, [(0,), (2,), (4,)])
    assert c2.size == 3
    with pytest.raises(InputError):
        Code.from_elements(Z6, [(2,), (4,)])  # no zero
    with pytest.raises(InputError):
        Code.from_elements(Z6, [(0,), (2,)])  # not closed


def test_dual_code_z6():
    c = generate(Z6, [(3,)])
    perp = dual_code(Z6, c)
    assert perp.elements == ((0,), (2,), (4,))


def test_dual_code_sizes_multiply():
    for g in (Z6, GroupSpec((2, 4)), GroupSpec((3, 3)), GroupSpec((2, 2, 2))):
        for c in all_subgroups(g):
            perp = dual_code(g, c)
            assert c.size * perp.size == g.size
            assert dual_code(g, perp).elements == c.elements


def test_subgroup_counts():
    assert len(all_subgroups(GroupSpec((4,)))) == 3
    assert len(all_subgroups(GroupSpec((2, 2)))) == 5
    assert len(all_subgroups(GroupSpec((12,)))) == 6
    assert len(all_subgroups(GroupSpec((2, 2, 2)))) == 16
    assert len(all_subgroups(GroupSpec((3, 3)))) == 6


def test_subgroup_guard():
    with pytest.raises(GuardExceeded):
        all_subgroups(GroupSpec((100,)))
    assert len(all_subgroups(GroupSpec((100,)), max_size=100)) == 9


def test_fourier_transform_of_point_mass():
    g = GroupSpec((4,))
    f = {x: integer(4, 1 if x == (1,) else 0) for x in elements(g)}
    fhat = fourier_transform(g, f)
    for chi in elements(g):
        assert fhat[chi] == pairing(g, chi, (1,))


@given(st.sampled_from([(4,), (6,), (2, 3), (2, 2), (8,)]), st.integers(0, 10 ** 6))
@settings(max_examples=40, deadline=None)
def test_poisson_summation(orders, seed):
    import random

    g = GroupSpec(orders)
    rng = random.Random(seed)
    f = {x: integer(g.exponent, rng.randint(-5, 5)) for x in elements(g)}
    for c in all_subgroups(g):
        assert poisson_check(g, c, f)


def test_iso_validation():
    good = GroupIso.from_mapping(Z2x3, {x: x for x in elements(Z2x3)})
    assert good((1, 2)) == (1, 2)
    swap = {(0, 0): (0, 0), (1, 0): (0, 1), (0, 1): (1, 1), (1, 1): (1, 0)}
    g22 = GroupSpec((2, 2))
    iso = GroupIso.from_mapping(g22, swap)
    assert iso.inverse()((0, 1)) == (1, 0)
    bad = dict(swap)
    bad[(1, 1)] = (0, 0)  # not injective
    with pytest.raises(InputError):
        GroupIso.from_mapping(g22, bad)
    # bijective but not additive: swap 2 and 3 in Z_4
    not_additive = {(0,): (0,), (1,): (1,), (2,): (3,), (3,): (2,)}
    with pytest.raises(InputError):
        GroupIso.from_mapping(GroupSpec((4,)), not_additive)
