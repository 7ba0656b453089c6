"""Partitions of a group carrier and their duals under the character pairing.

The dual of a partition groups characters by the exact vector of their block
sums: two characters fall in the same dual block precisely when every block
of the original partition sums to the same cyclotomic integer under both.
Reflexivity tests, generalized Krawtchouk matrices, the refinement lattice,
and dualization twisted through an explicit isomorphism all build on that
signature sweep.

Block data is canonical: each block is sorted, blocks are ordered by their
least member, elements are reduced residue tuples. Partitions on the same
carrier therefore compare by plain equality.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Sequence

from .cyclotomic import CycInt, euler_phi, integer, zeta_coeff_table
from .errors import GuardExceeded, InputError, VerificationFailure
from .group import ELEMENT_GUARD, Element, GroupIso, GroupSpec, elements

Signature = tuple[CycInt, ...]
"""Per-character vector of block sums; one entry per block of the partition."""

Block = tuple[Element, ...]


@dataclass(frozen=True)
class Partition:
    """A set partition of the carrier of a finite abelian group."""

    group: GroupSpec
    blocks: tuple[Block, ...]
    block_of: tuple[int, ...] = field(compare=False, repr=False)
    # block_of is derived: block index per element rank, for O(1) lookup

    @classmethod
    def from_blocks(cls, group: GroupSpec, blocks: Iterable[Iterable[Element]]) -> "Partition":
        """Validate and canonicalize explicit blocks (disjoint, covering, nonempty)."""
        norm: list[Block] = []
        for b in blocks:
            members = [group.validate(g) for g in b]
            if not members:
                raise InputError("blocks must be nonempty")
            if len(set(members)) != len(members):
                raise InputError("duplicate element inside a block")
            norm.append(tuple(sorted(members)))
        norm.sort(key=lambda b: b[0])
        flat = [g for b in norm for g in b]
        if len(set(flat)) != len(flat):
            raise InputError("blocks overlap")
        if len(flat) != group.size:
            raise InputError("blocks do not cover the carrier")
        block_of = [0] * group.size
        for i, b in enumerate(norm):
            for g in b:
                block_of[group.rank(g)] = i
        return cls(group, tuple(norm), tuple(block_of))

    @classmethod
    def from_weight(cls, group: GroupSpec, weight: Callable[[Element], object],
                    max_size: int = ELEMENT_GUARD) -> "Partition":
        """Partition into the fibers of a weight-like labelling function."""
        fibers: dict[object, list[Element]] = {}
        for g in elements(group, max_size):
            fibers.setdefault(weight(g), []).append(g)
        return cls.from_blocks(group, fibers.values())

    @classmethod
    def singletons(cls, group: GroupSpec, max_size: int = ELEMENT_GUARD) -> "Partition":
        return cls.from_blocks(group, ([g] for g in elements(group, max_size)))

    @classmethod
    def one_block(cls, group: GroupSpec, max_size: int = ELEMENT_GUARD) -> "Partition":
        return cls.from_blocks(group, [elements(group, max_size)])

    @property
    def num_blocks(self) -> int:
        return len(self.blocks)

    def block_index_of(self, g: Element) -> int:
        return self.block_of[self.group.rank(self.group.validate(g))]


# ---------------------------------------------------------------------------
# the signature sweep


def _signature_rows(
    part: Partition, chis: Sequence[Element] | None = None,
    max_size: int = ELEMENT_GUARD,
) -> dict[Element, tuple[tuple[int, ...], ...]]:
    """Raw block-sum coefficient vectors, one row per requested character.

    Componentwise accumulation of canonical root-power vectors stays canonical
    because reduction modulo the cyclotomic polynomial is Z-linear, so the rows
    are directly hashable and comparable.
    """
    grp = part.group
    e = grp.exponent
    ztab = zeta_coeff_table(e)
    phi = euler_phi(e)
    orders = grp.orders
    weights = [e // n for n in orders]
    targets = elements(grp, max_size) if chis is None else [grp.validate(c) for c in chis]
    out: dict[Element, tuple[tuple[int, ...], ...]] = {}
    for chi in targets:
        contrib = [
            tuple((weights[i] * chi[i] * v) % e for v in range(orders[i]))
            for i in range(len(orders))
        ]
        sig: list[tuple[int, ...]] = []
        for members in part.blocks:
            acc = [0] * phi
            for g in members:
                s = 0
                for i, gi in enumerate(g):
                    s += contrib[i][gi]
                row = ztab[s % e]
                for j in range(phi):
                    acc[j] += row[j]
            sig.append(tuple(acc))
        out[chi] = tuple(sig)
    return out


def signature(part: Partition, chi: Element) -> Signature:
    """Vector of block sums of the character chi, one exact value per block."""
    row = _signature_rows(part, [chi])[part.group.validate(chi)]
    e = part.group.exponent
    return tuple(CycInt(e, c) for c in row)


def dual_partition(part: Partition, max_size: int = ELEMENT_GUARD) -> Partition:
    """Partition of the character carrier by equality of block-sum vectors."""
    rows = _signature_rows(part, max_size=max_size)
    buckets: dict[tuple, list[Element]] = {}
    for chi, sig in rows.items():
        buckets.setdefault(sig, []).append(chi)
    return Partition.from_blocks(part.group, buckets.values())


def bidual(part: Partition, max_size: int = ELEMENT_GUARD) -> Partition:
    """Dual of the dual, read back on the original carrier.

    The pairing is symmetric, so no pullback bookkeeping is needed: the
    second dual lands on the same residue-tuple carrier.
    """
    return dual_partition(dual_partition(part, max_size), max_size)


def is_reflexive(part: Partition, max_size: int = ELEMENT_GUARD) -> bool:
    """True when the bidual equals the partition itself.

    Equivalent, and implemented as, the block-count test: the partition is
    reflexive exactly when its dual has the same number of blocks.
    """
    return dual_partition(part, max_size).num_blocks == part.num_blocks


# ---------------------------------------------------------------------------
# Krawtchouk matrices


@dataclass(frozen=True)
class KrawtchoukMatrix:
    """Block-sum matrix of a primal/character partition pair.

    Rows follow the character-side blocks, columns the primal blocks; the
    entry at (l, m) is the sum of <chi, g> over g in primal block m, for any
    chi in character block l (constancy over the block is verified at
    construction).
    """

    entries: tuple[tuple[CycInt, ...], ...]
    row_blocks: tuple[Block, ...]
    col_blocks: tuple[Block, ...]

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.entries), len(self.col_blocks))

    def integer_entries(self) -> tuple[tuple[int, ...], ...]:
        """All entries as plain integers; fails if any entry is irrational."""
        out = []
        for row in self.entries:
            vals = [x.as_rational_integer() for x in row]
            if any(v is None for v in vals):
                raise VerificationFailure("matrix has an irrational entry")
            out.append(tuple(vals))  # type: ignore[arg-type]
        return tuple(out)

    def approx(self) -> list[list[complex]]:
        return [[x.approx_complex() for x in row] for row in self.entries]


def krawtchouk(
    part: Partition,
    char_part: Partition,
    verify_limit: int = 256,
    max_size: int = ELEMENT_GUARD,
) -> KrawtchoukMatrix:
    """Krawtchouk matrix of a partition and a compatible character partition.

    ``char_part`` must refine the dual of ``part`` so that block sums are
    constant on each of its blocks. Constancy is verified outright: for every
    character when the carrier has at most ``verify_limit`` elements, else for
    three sampled representatives per block.
    """
    if part.group != char_part.group:
        raise InputError("both partitions must live on the same carrier")
    grp = part.group
    e = grp.exponent
    if grp.size <= verify_limit:
        rows = _signature_rows(part, max_size=max_size)
        reps = []
        for block in char_part.blocks:
            first = rows[block[0]]
            for chi in block[1:]:
                if rows[chi] != first:
                    raise VerificationFailure(
                        "block sums are not constant on a character block; "
                        "the character partition does not refine the dual"
                    )
            reps.append(first)
    else:
        rng = random.Random(0)
        sample_of: list[tuple[Element, ...]] = []
        for block in char_part.blocks:
            picks = {block[0]}
            picks.update(rng.sample(block, min(3, len(block))))
            sample_of.append(tuple(sorted(picks)))
        wanted = sorted({c for picks in sample_of for c in picks})
        rows = _signature_rows(part, wanted, max_size=max_size)
        reps = []
        for picks in sample_of:
            first = rows[picks[0]]
            for chi in picks[1:]:
                if rows[chi] != first:
                    raise VerificationFailure(
                        "block sums differ between sampled representatives"
                    )
            reps.append(first)
    entries = tuple(tuple(CycInt(e, c) for c in rep) for rep in reps)
    return KrawtchoukMatrix(entries, char_part.blocks, part.blocks)


# ---------------------------------------------------------------------------
# the refinement lattice


def refines(finer: Partition, coarser: Partition) -> bool:
    """True when every block of the first partition sits inside a block of the second."""
    if finer.group != coarser.group:
        raise InputError("partitions on different carriers are not comparable")
    for block in finer.blocks:
        target = coarser.block_of[coarser.group.rank(block[0])]
        if any(coarser.block_of[coarser.group.rank(g)] != target for g in block[1:]):
            return False
    return True


def meet(a: Partition, b: Partition) -> Partition:
    """Coarsest common refinement: blockwise intersections."""
    if a.group != b.group:
        raise InputError("partitions on different carriers have no meet")
    grp = a.group
    fibers: dict[tuple[int, int], list[Element]] = {}
    for g in elements(grp):
        key = (a.block_of[grp.rank(g)], b.block_of[grp.rank(g)])
        fibers.setdefault(key, []).append(g)
    return Partition.from_blocks(grp, fibers.values())


def join(a: Partition, b: Partition) -> Partition:
    """Finest common coarsening, by union-find over overlapping blocks."""
    if a.group != b.group:
        raise InputError("partitions on different carriers have no join")
    grp = a.group
    parent = list(range(grp.size))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> None:
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[ry] = rx

    for part in (a, b):
        for block in part.blocks:
            first = grp.rank(block[0])
            for g in block[1:]:
                union(first, grp.rank(g))
    groups: dict[int, list[Element]] = {}
    for g in elements(grp):
        groups.setdefault(find(grp.rank(g)), []).append(g)
    return Partition.from_blocks(grp, groups.values())


def negate(part: Partition) -> Partition:
    """Image of the partition under elementwise negation."""
    grp = part.group
    return Partition.from_blocks(grp, ([grp.neg(g) for g in b] for b in part.blocks))


def mismatch_witness(a: Partition, b: Partition) -> tuple[Element, Element] | None:
    """None if the partitions are equal, else a pair split by exactly one of them."""
    if a.group != b.group:
        raise InputError("partitions on different carriers cannot be compared")
    if a == b:
        return None
    grp = a.group
    for g in elements(grp):
        in_a = set(a.blocks[a.block_of[grp.rank(g)]])
        in_b = set(b.blocks[b.block_of[grp.rank(g)]])
        if in_a != in_b:
            return (g, min(in_a.symmetric_difference(in_b)))
    raise AssertionError("unequal partitions must disagree somewhere")


# ---------------------------------------------------------------------------
# twisted dualization


def dual_under_iso(part: Partition, iso: GroupIso) -> Partition:
    """Dual partition pulled back to the primal carrier through an isomorphism.

    The isomorphism encodes a choice of identification between the carrier and
    its characters; different choices can give genuinely different duals, while
    the bidual is independent of the choice.
    """
    if iso.group != part.group:
        raise InputError("isomorphism must act on the partition's carrier")
    dual = dual_partition(part)
    inv = iso.inverse()
    return Partition.from_blocks(part.group, ([inv(ch) for ch in b] for b in dual.blocks))


# ---------------------------------------------------------------------------
# structure of the double-dual matrix product


def kk_product_check(part: Partition, max_size: int = ELEMENT_GUARD) -> tuple[tuple[bool, ...], ...]:
    """Verify the product of the two Krawtchouk matrices entry by entry.

    With K the matrix of (partition, dual) and K' the matrix of (dual, bidual),
    each (r, m) entry of K'K must equal the carrier size when the negated r-th
    bidual block is contained in the m-th primal block, and zero otherwise.
    For a reflexive partition this makes K'K the carrier size times a
    permutation matrix pairing each block with its negation. Returns the
    boolean matrix of entrywise verdicts.
    """
    grp = part.group
    size = grp.size
    e = grp.exponent
    dual = dual_partition(part, max_size)
    ddual = dual_partition(dual, max_size)
    k = krawtchouk(part, dual, max_size=max_size)
    k2 = krawtchouk(dual, ddual, max_size=max_size)
    out: list[tuple[bool, ...]] = []
    for r, ddual_block in enumerate(ddual.blocks):
        neg_block = {grp.neg(g) for g in ddual_block}
        row: list[bool] = []
        for m, prim_block in enumerate(part.blocks):
            acc = integer(e, 0)
            for l in range(dual.num_blocks):
                acc = acc + k2.entries[r][l] * k.entries[l][m]
            expected = size if neg_block <= set(prim_block) else 0
            row.append(acc == integer(e, expected))
        out.append(tuple(row))
    return tuple(out)


# ---------------------------------------------------------------------------
# sampling and exhaustive enumeration (oracle support)


def random_partition(
    group: GroupSpec, rng: random.Random, zero_block: bool = False,
    max_size: int = ELEMENT_GUARD,
) -> Partition:
    """A uniform-ish random partition: random urn assignment, empties dropped."""
    els = list(elements(group, max_size))
    zero = group.zero
    if zero_block:
        els.remove(zero)
    blocks: dict[int, list[Element]] = {}
    if els:
        k = rng.randint(1, len(els))
        for g in els:
            blocks.setdefault(rng.randrange(k), []).append(g)
    out = list(blocks.values())
    if zero_block:
        out.append([zero])
    return Partition.from_blocks(group, out)


def random_reflexive_partition(group: GroupSpec, rng: random.Random,
                               max_size: int = ELEMENT_GUARD) -> Partition:
    """A random reflexive partition, obtained by closing a random one under bidual."""
    for _ in range(64):
        cand = bidual(random_partition(group, rng, max_size=max_size), max_size)
        if is_reflexive(cand, max_size):
            return cand
    return Partition.singletons(group, max_size)


def all_partitions(group: GroupSpec, max_size: int = 12) -> Iterator[Partition]:
    """Every set partition of the carrier; feasible only for tiny groups."""
    if group.size > max_size:
        raise GuardExceeded(
            f"exhaustive partition enumeration guarded at carrier size {max_size}"
        )
    els = list(elements(group))

    def rec(items: list[Element]) -> Iterator[list[list[Element]]]:
        if not items:
            yield []
            return
        head, rest = items[0], items[1:]
        for sub in rec(rest):
            yield [[head]] + sub
            for i in range(len(sub)):
                yield sub[:i] + [[head] + sub[i]] + sub[i + 1 :]

    for raw in rec(els):
        yield Partition.from_blocks(group, raw)
