import random

import hypothesis.strategies as st
from hypothesis import given, settings
import pytest

from dualpart.errors import InputError, VerificationFailure
from dualpart.group import GroupIso, GroupSpec
from dualpart.partition import (
    Partition,
    all_partitions,
    bidual,
    dual_partition,
    dual_under_iso,
    is_reflexive,
    join,
    kk_product_check,
    krawtchouk,
    meet,
    mismatch_witness,
    negate,
    random_partition,
    random_reflexive_partition,
    refines,
    signature,
)

Z6 = GroupSpec((6,))


def blocks6(*groups):
    return [[(x,) for x in b] for b in groups]


def part6(*groups):
    return Partition.from_blocks(Z6, blocks6(*groups))


def test_from_blocks_validation():
    with pytest.raises(InputError):
        Partition.from_blocks(Z6, blocks6([0], [1, 2]))  # missing elements
    with pytest.raises(InputError):
        Partition.from_blocks(Z6, blocks6([0, 1], [1, 2, 3, 4, 5]))  # overlap
    with pytest.raises(InputError):
        Partition.from_blocks(Z6, blocks6([0, 1, 2, 3, 4, 5], []))  # empty block


def test_canonical_block_order():
    p = part6([3, 1, 5], [4, 2], [0])
    assert p.blocks[0] == ((0,),)
    assert p.blocks[1] == ((1,), (3,), (5,))
    assert p.blocks[2] == ((2,), (4,))
    assert p.block_index_of((4,)) == 2


def test_worked_example_dual():
    """Order 6 example: 0|135|24 dualizes to 0|1245|3 and is reflexive."""
    p = part6([0], [1, 3, 5], [2, 4])
    d = dual_partition(p)
    assert d == part6([0], [1, 2, 4, 5], [3])
    assert is_reflexive(p)
    assert bidual(p) == p
    k = krawtchouk(p, d)
    assert k.integer_entries() == ((1, 3, 2), (1, 0, -1), (1, -3, 2))


def test_worked_example_non_reflexive():
    """Order 6 example: 0|12|345 has a five-block dual and singleton bidual."""
    p = part6([0], [1, 2], [3, 4, 5])
    d = dual_partition(p)
    assert d == part6([0], [1], [2, 4], [3], [5])
    assert bidual(p) == Partition.singletons(Z6)
    assert not is_reflexive(p)


def test_signature_values():
    p = part6([0], [1, 3, 5], [2, 4])
    from dualpart.cyclotomic import integer
    assert signature(p, (0,)) == (integer(6, 1), integer(6, 3), integer(6, 2))
    assert signature(p, (1,)) == signature(p, (5,))
    assert signature(p, (1,)) != signature(p, (3,))


def test_lee_partition_z4_reflexive():
    g = GroupSpec((4,))
    p = Partition.from_blocks(g, [[(0,)], [(1,), (3,)], [(2,)]])
    assert is_reflexive(p)
    assert dual_partition(p) == p


def test_krawtchouk_rejects_nonconstant_character_blocks():
    p = part6([0], [1, 3, 5], [2, 4])
    coarse = part6([0, 1], [2, 3, 4, 5])
    with pytest.raises(VerificationFailure):
        krawtchouk(p, coarse)


def test_krawtchouk_cross_carrier_rejected():
    p = part6([0], [1, 2, 3, 4, 5])
    q = Partition.one_block(GroupSpec((2, 3)))
    with pytest.raises(InputError):
        krawtchouk(p, q)


def test_meet_join_counterexamples():
    """Self-dual pairs whose meet and join escape the self-dual family."""
    g8 = GroupSpec((8,))

    def p8(*groups):
        return Partition.from_blocks(g8, [[(x,) for x in b] for b in groups])

    p = p8([0], [1, 7], [2, 6], [3, 5], [4])
    q = p8([0], [1, 3], [2, 6], [4], [5, 7])
    assert dual_partition(p) == p and dual_partition(q) == q
    m = meet(p, q)
    assert m == p8([0], [1], [2, 6], [3], [4], [5], [7])
    assert dual_partition(m) == Partition.singletons(g8)

    g5 = GroupSpec((5,))

    def p5(*groups):
        return Partition.from_blocks(g5, [[(x,) for x in b] for b in groups])

    a = p5([0], [1, 2], [3, 4])
    b = p5([0], [1, 2, 3], [4])
    assert dual_partition(a) == Partition.singletons(g5)
    assert dual_partition(b) == Partition.singletons(g5)
    j = join(a, b)
    assert j == p5([0], [1, 2, 3, 4])
    assert dual_partition(j) == j


def test_refines_and_lattice_basics():
    fine = part6([0], [1], [2], [3], [4], [5])
    mid = part6([0], [1, 3, 5], [2, 4])
    assert refines(fine, mid)
    assert not refines(mid, fine)
    assert meet(mid, mid) == mid
    assert join(mid, mid) == mid
    assert refines(meet(mid, fine), mid)
    assert refines(mid, join(mid, fine))


def test_mismatch_witness():
    a = part6([0], [1, 3, 5], [2, 4])
    b = part6([0], [1, 2, 4, 5], [3])
    assert mismatch_witness(a, a) is None
    w = mismatch_witness(a, b)
    assert w is not None
    x, y = w
    assert (a.block_index_of(x) == a.block_index_of(y)) != (
        b.block_index_of(x) == b.block_index_of(y)
    )


def test_negate():
    p = part6([0], [1, 2], [3, 4, 5])
    n = negate(p)
    assert n == part6([0], [4, 5], [1, 2, 3])
    d = dual_partition(p)
    assert negate(d) == d


def test_f4_twist():
    """The dual depends on which identification of the character group is used."""
    g = GroupSpec((2, 2))
    # carrier spellings: 0=(0,0), 1=(1,0), a=(0,1), a2=(1,1)
    trace_table = GroupIso.from_mapping(
        g, {(0, 0): (0, 0), (1, 0): (0, 1), (0, 1): (1, 1), (1, 1): (1, 0)}
    )
    plain_table = GroupIso.identity(g)
    p = Partition.from_blocks(g, [[(0, 0)], [(1, 0)], [(0, 1), (1, 1)]])
    d_trace = dual_under_iso(p, trace_table)
    d_plain = dual_under_iso(p, plain_table)
    assert d_trace == p
    assert d_plain == Partition.from_blocks(
        g, [[(0, 0)], [(1, 0), (1, 1)], [(0, 1)]]
    )
    assert d_plain != p
    # second duals agree regardless of the identification
    assert dual_under_iso(d_trace, trace_table) == dual_under_iso(d_plain, plain_table)
    assert dual_under_iso(d_trace, trace_table) == p


def test_kk_product_structure():
    p = part6([0], [1, 3, 5], [2, 4])
    verdicts = kk_product_check(p)
    assert all(all(row) for row in verdicts)
    q = part6([0], [1, 2], [3, 4, 5])
    assert all(all(row) for row in kk_product_check(q))


def test_all_partitions_bell_counts():
    assert len(list(all_partitions(GroupSpec((2,))))) == 2
    assert len(list(all_partitions(GroupSpec((3,))))) == 5
    assert len(list(all_partitions(GroupSpec((4,))))) == 15
    assert len(list(all_partitions(GroupSpec((5,))))) == 52


def test_random_partition_properties():
    rng = random.Random(0)
    g = GroupSpec((2, 4))
    for _ in range(50):
        p = random_partition(g, rng)
        assert sum(len(b) for b in p.blocks) == g.size
        z = random_partition(g, rng, zero_block=True)
        assert z.blocks[0] == (g.zero,)


def test_random_reflexive_partition():
    rng = random.Random(1)
    for orders in [(6,), (8,), (2, 2, 2), (12,)]:
        g = GroupSpec(orders)
        for _ in range(10):
            p = random_reflexive_partition(g, rng)
            assert is_reflexive(p)


def test_one_block_and_singletons():
    p = Partition.one_block(Z6)
    assert p.num_blocks == 1
    d = dual_partition(p)
    assert d == part6([0], [1, 2, 3, 4, 5])
    s = Partition.singletons(Z6)
    assert dual_partition(s) == s  # full character separation
    assert is_reflexive(s)


small_groups = st.sampled_from([(4,), (5,), (6,), (2, 3), (2, 2), (8,), (3, 3)])


@given(small_groups, st.integers(0, 10 ** 9))
@settings(max_examples=150, deadline=None)
def test_duality_properties_random(orders, seed):
    g = GroupSpec(orders)
    p = random_partition(g, random.Random(seed))
    d = dual_partition(p)
    dd = dual_partition(d)
    assert d.num_blocks >= p.num_blocks
    assert refines(dd, p)
    assert (d.num_blocks == p.num_blocks) == (dd == p)
    assert d.blocks[0] == (g.zero,)
    assert negate(d) == d


@given(small_groups, st.integers(0, 10 ** 9))
@settings(max_examples=60, deadline=None)
def test_join_duality_random(orders, seed):
    g = GroupSpec(orders)
    rng = random.Random(seed)
    a = random_reflexive_partition(g, rng)
    b = random_reflexive_partition(g, rng)
    assert is_reflexive(join(a, b))
    assert dual_partition(join(a, b)) == join(dual_partition(a), dual_partition(b))


@given(small_groups, st.integers(0, 10 ** 9))
@settings(max_examples=60, deadline=None)
def test_kk_pattern_random(orders, seed):
    g = GroupSpec(orders)
    p = random_partition(g, random.Random(seed))
    assert all(all(row) for row in kk_product_check(p))
