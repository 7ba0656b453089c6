"""Distribution transforms against directly enumerated dual codes.

The conventions under test: the transform matrix for a character-side
partition Q and its dual P has one row per P block and one column per Q
block; a code counted under P transforms to its dual counted under Q.
"""

import pytest

from dualpart.enumerator import (
    LinearEnumerator,
    linear_enumerator,
    macwilliams_transform,
    product_enumerator,
    product_transform,
    symmetrized_enumerator,
    symmetrized_transform,
)
from dualpart.errors import GuardExceeded, InputError, VerificationFailure
from dualpart.group import Code, GroupSpec, all_subgroups, dual_code, elements, generate
from dualpart.partition import Partition, dual_partition, krawtchouk

Z6 = GroupSpec((6,))


def part(g, *groups):
    return Partition.from_blocks(g, [[(x,) if isinstance(x, int) else x for x in b]
                                     for b in groups])


def test_linear_enumerator_counts():
    p = part(Z6, [0], [1, 2, 4, 5], [3])
    c = generate(Z6, [(3,)])
    assert linear_enumerator(c, p).counts == (1, 0, 1)
    assert linear_enumerator(c, p).total == 2


def test_worked_macwilliams_chain():
    """Order 6, code {0,3}: the full frozen transform chain."""
    q = part(Z6, [0], [1, 2, 4, 5], [3])
    p = dual_partition(q)
    assert p == part(Z6, [0], [1, 3, 5], [2, 4])
    k = krawtchouk(q, p)
    assert k.integer_entries() == ((1, 4, 1), (1, 0, -1), (1, -2, 1))
    c = generate(Z6, [(3,)])
    a = linear_enumerator(c, p)
    assert a.counts == (1, 1, 0)
    b = macwilliams_transform(a, k, c.size)
    assert b.counts == (1, 2, 0)
    perp = dual_code(Z6, c)
    assert linear_enumerator(perp, q) == b


def test_repetition_code_binary():
    g = GroupSpec((2,))
    p = part(g, [0], [1])
    k = krawtchouk(dual_partition(p), p)
    assert k.integer_entries() == ((1, 1), (1, -1))
    big = GroupSpec((2, 2, 2))
    c = generate(big, [(1, 1, 1)])
    counts = product_enumerator(c, [p] * 3)
    assert counts.counts == {(0, 0, 0): 1, (1, 1, 1): 1}
    out = product_transform(counts, [k] * 3, c.size)
    perp = dual_code(big, c)  # even-weight code
    assert out.counts == product_enumerator(perp, [dual_partition(p)] * 3).counts
    sym = symmetrized_transform(symmetrized_enumerator(c, p, 3), k, c.size)
    assert sym.counts == {(3, 0): 1, (1, 2): 3}
    assert sym.counts == symmetrized_enumerator(perp, dual_partition(p), 3).counts


def test_transform_whole_group_and_trivial_code():
    q = part(Z6, [0], [1, 2, 4, 5], [3])
    p = dual_partition(q)
    k = krawtchouk(q, p)
    whole = Code.from_elements(Z6, list(elements(Z6)), validate=False)
    b = macwilliams_transform(linear_enumerator(whole, p), k, whole.size)
    assert b.counts == (1, 0, 0)
    trivial = generate(Z6, [])
    b2 = macwilliams_transform(linear_enumerator(trivial, p), k, trivial.size)
    assert b2.counts == (1, 4, 1)


def test_non_integer_result_rejected():
    # wrong code size makes the division fail
    q = part(Z6, [0], [1, 2, 4, 5], [3])
    p = dual_partition(q)
    k = krawtchouk(q, p)
    a = linear_enumerator(generate(Z6, [(3,)]), p)
    with pytest.raises(VerificationFailure):
        macwilliams_transform(a, k, 4)


def test_row_count_mismatch_rejected():
    q = part(Z6, [0], [1, 2, 4, 5], [3])
    p = dual_partition(q)
    k = krawtchouk(q, p)
    with pytest.raises(InputError):
        macwilliams_transform(LinearEnumerator((1, 1)), k, 2)


def test_oracle_sweep_all_subgroups_z3_squared():
    g = GroupSpec((3,))
    base = part(g, [0], [1, 2])
    dual_base = dual_partition(base)
    k = krawtchouk(dual_base, base)
    big = GroupSpec((3, 3))
    for c in all_subgroups(big):
        perp = dual_code(big, c)
        out = product_transform(product_enumerator(c, [base] * 2), [k] * 2, c.size)
        assert out.counts == product_enumerator(perp, [dual_base] * 2).counts
        sym = symmetrized_transform(symmetrized_enumerator(c, base, 2), k, c.size)
        assert sym.counts == symmetrized_enumerator(perp, dual_base, 2).counts


def test_expansion_guard():
    g = GroupSpec((2,))
    p = part(g, [0], [1])
    k = krawtchouk(dual_partition(p), p)
    copies = 30
    big = GroupSpec((2,) * copies)
    c = generate(big, [tuple([1] * copies)])
    counts = product_enumerator(c, [p] * copies)
    with pytest.raises(GuardExceeded):
        product_transform(counts, [k] * copies, c.size)
    with pytest.raises(GuardExceeded):
        symmetrized_transform(symmetrized_enumerator(c, p, copies), k, c.size)
