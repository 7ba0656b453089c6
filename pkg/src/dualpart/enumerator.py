"""Weight enumerators of additive codes and their exact linear transforms.

Three granularities: a plain count vector over the blocks of one partition,
a sparse joint distribution over per-coordinate block indices for product
partitions, and a sparse distribution over composition vectors for
symmetrized partitions. Each has a transform that recovers the dual code's
distribution from the primal one, dividing by the code size and insisting on
exact integer results; a non-integer or irrational entry raises, since it can
only come from a wrong pairing of partitions.

Orientation conventions, fixed once:

- linear: with Q a partition of the character carrier and P its dual on the
  primal side, the matrix is krawtchouk(Q, P), rows indexed by P-blocks, so
  the dual distribution is counts(P) . matrix / |C|.
- product and symmetrized: each factor uses krawtchouk(dual(P_i), P_i), rows
  indexed by P_i-blocks m and columns by dual-blocks l, so each primal
  indeterminate expands as sum_l K[m][l] * (dual indeterminate l). The factor
  partitions must be reflexive for the dual side to be a partition pair again.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .cyclotomic import CycInt, zero
from .errors import GuardExceeded, InputError, VerificationFailure
from .group import Code
from .induced import composition_vector, product_group, split_element
from .partition import KrawtchoukMatrix, Partition

EXPANSION_GUARD = 24


@dataclass(frozen=True)
class LinearEnumerator:
    """Count of code elements per block of one partition."""

    counts: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.counts)


@dataclass
class ProductEnumerator:
    """Sparse joint count over per-coordinate block index tuples."""

    counts: dict[tuple[int, ...], int]

    @property
    def total(self) -> int:
        return sum(self.counts.values())


@dataclass
class SymmetrizedEnumerator:
    """Sparse count over composition vectors of the base partition."""

    counts: dict[tuple[int, ...], int]

    @property
    def total(self) -> int:
        return sum(self.counts.values())


def linear_enumerator(code: Code, part: Partition) -> LinearEnumerator:
    if code.group != part.group:
        raise InputError("code and partition must share a carrier")
    counts = [0] * part.num_blocks
    for g in code.elements:
        counts[part.block_of[part.group.rank(g)]] += 1
    return LinearEnumerator(tuple(counts))


def _exact_count(value: CycInt, divisor: int) -> int:
    n = value.as_rational_integer()
    if n is None:
        raise VerificationFailure("transform produced an irrational value")
    q, r = divmod(n, divisor)
    if r != 0:
        raise VerificationFailure("transform result is not divisible by the code size")
    if q < 0:
        raise VerificationFailure("transform produced a negative count")
    return q


def macwilliams_transform(
    enum: LinearEnumerator, matrix: KrawtchoukMatrix, code_size: int
) -> LinearEnumerator:
    """Dual distribution counts(P) . matrix / code_size, exactly.

    ``matrix`` must be krawtchouk(Q, P) for the character-side partition Q
    whose dual P indexed ``enum``; its rows then line up with the counts.
    """
    rows, cols = matrix.shape
    if rows != len(enum.counts):
        raise InputError(
            f"matrix has {rows} rows but the enumerator has {len(enum.counts)} counts"
        )
    if code_size <= 0:
        raise InputError("code size must be positive")
    order = matrix.entries[0][0].order
    out = []
    for l in range(cols):
        acc = zero(order)
        for m, a in enumerate(enum.counts):
            if a:
                acc = acc + a * matrix.entries[m][l]
        out.append(_exact_count(acc, code_size))
    return LinearEnumerator(tuple(out))


# ---------------------------------------------------------------------------
# product partitions


def product_enumerator(code: Code, parts: Sequence[Partition]) -> ProductEnumerator:
    """Joint distribution of per-coordinate block indices over the code."""
    factors = [p.group for p in parts]
    if code.group != product_group(factors):
        raise InputError("code carrier must be the product of the factor carriers")
    counts: dict[tuple[int, ...], int] = {}
    for word in code.elements:
        coords = split_element(factors, word)
        key = tuple(p.block_index_of(c) for p, c in zip(parts, coords))
        counts[key] = counts.get(key, 0) + 1
    return ProductEnumerator(counts)


def _expansion_guard(copies: int, widest: int, max_expansion: int) -> None:
    if copies * widest > max_expansion:
        raise GuardExceeded(
            f"transform expansion {copies} x {widest} exceeds the guard "
            f"of {max_expansion}"
        )


def product_transform(
    enum: ProductEnumerator,
    matrices: Sequence[KrawtchoukMatrix],
    code_size: int,
    max_expansion: int = EXPANSION_GUARD,
) -> ProductEnumerator:
    """Dual joint distribution from factorwise Krawtchouk expansion.

    Each matrix must be krawtchouk(dual(P_i), P_i) for the i-th factor, so
    that row m expands the primal indeterminate for block m over the dual
    blocks.
    """
    if code_size <= 0:
        raise InputError("code size must be positive")
    if not matrices:
        raise InputError("need one matrix per coordinate")
    widest = max(max(k.shape) for k in matrices)
    _expansion_guard(len(matrices), widest, max_expansion)
    order = matrices[0].entries[0][0].order
    out: dict[tuple[int, ...], CycInt] = {}
    for key, cnt in enum.counts.items():
        if len(key) != len(matrices):
            raise InputError("enumerator key length does not match the matrices")
        partial: dict[tuple[int, ...], CycInt] = {(): CycInt(order, (cnt,))}
        for i, m in enumerate(key):
            row = matrices[i].entries[m]
            nxt: dict[tuple[int, ...], CycInt] = {}
            for prefix, coef in partial.items():
                for l, entry in enumerate(row):
                    if entry.is_zero:
                        continue
                    nk = prefix + (l,)
                    term = coef * entry
                    nxt[nk] = nxt[nk] + term if nk in nxt else term
            partial = nxt
        for nk, coef in partial.items():
            out[nk] = out[nk] + coef if nk in out else coef
    counts = {}
    for nk in sorted(out):
        c = _exact_count(out[nk], code_size)
        if c:
            counts[nk] = c
    return ProductEnumerator(counts)


# ---------------------------------------------------------------------------
# symmetrized partitions


def symmetrized_enumerator(code: Code, base: Partition, copies: int) -> SymmetrizedEnumerator:
    """Distribution of composition vectors over the code."""
    factors = [base.group] * copies
    if code.group != product_group(factors):
        raise InputError("code carrier must be the matching power of the base carrier")
    counts: dict[tuple[int, ...], int] = {}
    for word in code.elements:
        key = composition_vector(base, split_element(factors, word))
        counts[key] = counts.get(key, 0) + 1
    return SymmetrizedEnumerator(counts)


def _sparse_mul(
    a: dict[tuple[int, ...], CycInt], b: dict[tuple[int, ...], CycInt]
) -> dict[tuple[int, ...], CycInt]:
    out: dict[tuple[int, ...], CycInt] = {}
    for ka, va in a.items():
        for kb, vb in b.items():
            k = tuple(x + y for x, y in zip(ka, kb))
            term = va * vb
            out[k] = out[k] + term if k in out else term
    return out


def symmetrized_transform(
    enum: SymmetrizedEnumerator,
    matrix: KrawtchoukMatrix,
    code_size: int,
    max_expansion: int = EXPANSION_GUARD,
) -> SymmetrizedEnumerator:
    """Dual composition distribution via powers of the row linear forms.

    ``matrix`` must be krawtchouk(dual(P), P) of a reflexive base partition;
    a composition key (s_0, ..., s_{M-1}) expands as the product over m of the
    s_m-th power of row m read as a linear form in the dual indeterminates.
    """
    if code_size <= 0:
        raise InputError("code size must be positive")
    rows, cols = matrix.shape
    order = matrix.entries[0][0].order
    out: dict[tuple[int, ...], CycInt] = {}
    for key, cnt in enum.counts.items():
        if len(key) != rows:
            raise InputError("composition length does not match the matrix rows")
        _expansion_guard(sum(key), max(rows, cols), max_expansion)
        poly: dict[tuple[int, ...], CycInt] = {(0,) * cols: CycInt(order, (cnt,))}
        for m, power in enumerate(key):
            if power == 0:
                continue
            linear = {}
            for l, entry in enumerate(matrix.entries[m]):
                if not entry.is_zero:
                    unit = tuple(1 if i == l else 0 for i in range(cols))
                    linear[unit] = entry
            for _ in range(power):
                poly = _sparse_mul(poly, linear)
        for k, coef in poly.items():
            out[k] = out[k] + coef if k in out else coef
    counts = {}
    for k in sorted(out):
        c = _exact_count(out[k], code_size)
        if c:
            counts[k] = c
    return SymmetrizedEnumerator(counts)
