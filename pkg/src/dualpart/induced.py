"""Partitions induced on product carriers: coordinatewise and symmetrized.

A list of partitions, one per factor, induces a product partition on the
concatenated carrier whose blocks are cartesian products of factor blocks.
Symmetrizing a single base partition over n coordinates instead groups tuples
by their composition vector, the per-block coordinate counts. Dualization
commutes with both constructions whenever every factor has the zero element
as a singleton block; the check functions verify that extensionally and
return a witness pair of characters when it fails.
"""

from __future__ import annotations

import itertools
from typing import Sequence

from .errors import GuardExceeded, InputError
from .group import ELEMENT_GUARD, Element, GroupSpec
from .partition import Partition, dual_partition, mismatch_witness


def product_group(groups: Sequence[GroupSpec]) -> GroupSpec:
    """Carrier of the direct product, as concatenated cyclic factors."""
    return GroupSpec(tuple(n for g in groups for n in g.orders))


def power_group(group: GroupSpec, copies: int) -> GroupSpec:
    if copies < 1:
        raise InputError("need at least one copy")
    return GroupSpec(group.orders * copies)


def split_element(groups: Sequence[GroupSpec], flat: Element) -> tuple[Element, ...]:
    """Cut a product-carrier tuple back into per-factor coordinates."""
    out = []
    pos = 0
    for g in groups:
        k = len(g.orders)
        out.append(flat[pos : pos + k])
        pos += k
    if pos != len(flat):
        raise InputError("element length does not match the factor list")
    return tuple(out)


def flatten_element(coords: Sequence[Element]) -> Element:
    return tuple(x for c in coords for x in c)


def product_partition(parts: Sequence[Partition],
                      max_size: int = ELEMENT_GUARD) -> Partition:
    """Partition of the product carrier into products of factor blocks."""
    if not parts:
        raise InputError("need at least one factor partition")
    big = product_group([p.group for p in parts])
    if big.size > max_size:
        raise GuardExceeded(
            f"product carrier has {big.size} elements, above the guard of {max_size}"
        )
    blocks = []
    for combo in itertools.product(*(p.blocks for p in parts)):
        blocks.append([flatten_element(tup) for tup in itertools.product(*combo)])
    return Partition.from_blocks(big, blocks)


def composition_vector(base: Partition, coords: Sequence[Element]) -> tuple[int, ...]:
    """How many coordinates fall in each block of the base partition."""
    counts = [0] * base.num_blocks
    for c in coords:
        counts[base.block_index_of(c)] += 1
    return tuple(counts)


def symmetrized_partition(base: Partition, copies: int,
                          max_size: int = ELEMENT_GUARD) -> Partition:
    """Partition of the power carrier by composition vector over base blocks."""
    big = power_group(base.group, copies)
    if big.size > max_size:
        raise GuardExceeded(
            f"power carrier has {big.size} elements, above the guard of {max_size}"
        )
    factors = [base.group] * copies

    def key(flat: Element) -> tuple[int, ...]:
        return composition_vector(base, split_element(factors, flat))

    return Partition.from_weight(big, key, max_size)


def check_product_duality(parts: Sequence[Partition],
                          max_size: int = ELEMENT_GUARD):
    """Witness that dualization commutes with the product construction.

    Returns None when the dual of the product equals the product of the duals,
    else a pair of characters that one side separates and the other does not.
    Expected to be None whenever each factor has {0} as a block.
    """
    left = dual_partition(product_partition(parts, max_size), max_size)
    right = product_partition([dual_partition(p, max_size) for p in parts], max_size)
    return mismatch_witness(left, right)


def check_symmetrized_duality(base: Partition, copies: int,
                              max_size: int = ELEMENT_GUARD):
    """Witness that dualization commutes with symmetrization; None when it does."""
    left = dual_partition(symmetrized_partition(base, copies, max_size), max_size)
    right = symmetrized_partition(dual_partition(base, max_size), copies, max_size)
    return mismatch_witness(left, right)
