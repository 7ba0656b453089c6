"""Finite abelian groups presented as explicit products of cyclic groups.

Elements are reduced residue tuples, ordered lexicographically. The character
group is realized on the same carrier: the tuple c pairs with the element g
through the exponent sum((E // n_i) * c_i * g_i) mod E of a primitive E-th
root of unity, where E is the group exponent. The pairing is symmetric, so
double duals land back on the original carrier with no extra bookkeeping.
This is one concrete identification of the group with its characters; biduals
do not depend on it, single duals may, and twisted identifications are
expressed with GroupIso.

The factor list is kept verbatim: carriers with the same abstract group but
different factorizations (say orders (6,) and (2, 3)) are distinct here.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache, reduce
from typing import Callable, Iterable, Mapping

from .cyclotomic import CycInt, zero, zeta_pow
from .errors import GuardExceeded, InputError

Element = tuple[int, ...]

ELEMENT_GUARD = 4096
SUBGROUP_GUARD = 64


@dataclass(frozen=True)
class GroupSpec:
    """A finite abelian group given by the orders of its cyclic factors."""

    orders: tuple[int, ...]

    def __post_init__(self) -> None:
        orders = tuple(int(n) for n in self.orders)
        if any(n < 2 for n in orders):
            raise InputError("every cyclic order must be at least 2")
        object.__setattr__(self, "orders", orders)

    @property
    def size(self) -> int:
        return math.prod(self.orders)

    @property
    def exponent(self) -> int:
        return math.lcm(*self.orders) if self.orders else 1

    @property
    def zero(self) -> Element:
        return (0,) * len(self.orders)

    def validate(self, g: Iterable[int]) -> Element:
        t = tuple(int(x) for x in g)
        if len(t) != len(self.orders):
            raise InputError(f"element {t} has wrong length for orders {self.orders}")
        if any(not 0 <= x < n for x, n in zip(t, self.orders)):
            raise InputError(f"element {t} out of range for orders {self.orders}")
        return t

    def add(self, a: Element, b: Element) -> Element:
        return tuple((x + y) % n for x, y, n in zip(a, b, self.orders))

    def neg(self, a: Element) -> Element:
        return tuple((-x) % n for x, n in zip(a, self.orders))

    def rank(self, g: Element) -> int:
        """Row-major position of g in the lexicographic element order."""
        i = 0
        for x, n in zip(g, self.orders):
            i = i * n + x
        return i

    def unrank(self, i: int) -> Element:
        out = []
        for n in reversed(self.orders):
            out.append(i % n)
            i //= n
        return tuple(reversed(out))


@lru_cache(maxsize=None)
def _elements(group: GroupSpec) -> tuple[Element, ...]:
    return tuple(itertools.product(*(range(n) for n in group.orders)))


def elements(group: GroupSpec, max_size: int = ELEMENT_GUARD) -> tuple[Element, ...]:
    """All elements in lexicographic order, guarded by carrier size."""
    if group.size > max_size:
        raise GuardExceeded(
            f"carrier has {group.size} elements, above the guard of {max_size}"
        )
    return _elements(group)


def pairing_exponent(group: GroupSpec, chi: Element, g: Element) -> int:
    """Exponent e with <chi, g> equal to the e-th power of the E-th root."""
    e = group.exponent
    if len(chi) != len(g) or len(g) != len(group.orders):
        raise InputError("character and element must match the factor count")
    return sum((e // n) * c * x for n, c, x in zip(group.orders, chi, g)) % e


def pairing(group: GroupSpec, chi: Element, g: Element) -> CycInt:
    """Character value <chi, g> as an exact cyclotomic integer."""
    return zeta_pow(group.exponent, pairing_exponent(group, chi, g))


# ---------------------------------------------------------------------------
# additive codes (subgroups of the carrier)


def _close(group: GroupSpec, base: set[Element], x: Element) -> set[Element]:
    # base must already be a subgroup; returns the subgroup generated with x
    out = set(base)
    cur = x
    while cur not in base:
        out.update(group.add(h, cur) for h in base)
        cur = group.add(cur, x)
    return out


@dataclass(frozen=True)
class Code:
    """An additive code: a subgroup of the carrier, with its full element list."""

    group: GroupSpec
    generators: tuple[Element, ...]
    elements: tuple[Element, ...]

    @property
    def size(self) -> int:
        return len(self.elements)

    @classmethod
    def from_elements(
        cls, group: GroupSpec, members: Iterable[Element], validate: bool = True
    ) -> "Code":
        elems = tuple(sorted({group.validate(g) for g in members}))
        if not elems or group.zero not in elems:
            raise InputError("a code must contain the zero element")
        if validate:
            eset = set(elems)
            for a in elems:
                for b in elems:
                    if group.add(a, b) not in eset:
                        raise InputError(f"not closed under addition: {a} + {b}")
        gens = _greedy_generators(group, elems)
        return cls(group, gens, elems)


def _greedy_generators(group: GroupSpec, elems: tuple[Element, ...]) -> tuple[Element, ...]:
    gens: list[Element] = []
    span: set[Element] = {group.zero}
    for g in elems:
        if g not in span:
            gens.append(g)
            span = _close(group, span, g)
    return tuple(gens)


def generate(group: GroupSpec, gens: Iterable[Element]) -> Code:
    """Additive closure of the given generators."""
    gen_list = [group.validate(g) for g in gens]
    acc: set[Element] = {group.zero}
    frontier = [group.zero]
    while frontier:
        nxt = []
        for a in frontier:
            for b in gen_list:
                c = group.add(a, b)
                if c not in acc:
                    acc.add(c)
                    nxt.append(c)
        frontier = nxt
    return Code(group, tuple(gen_list), tuple(sorted(acc)))


def dual_code(group: GroupSpec, code: Code, max_size: int = ELEMENT_GUARD) -> Code:
    """Annihilator of the code under the pairing, on the same carrier.

    Bilinearity lets the membership test run against the generators only.
    """
    gens = code.generators
    members = [
        a
        for a in elements(group, max_size)
        if all(pairing_exponent(group, a, h) == 0 for h in gens)
    ]
    return Code.from_elements(group, members, validate=False)


def all_subgroups(group: GroupSpec, max_size: int = SUBGROUP_GUARD) -> tuple[Code, ...]:
    """Every subgroup of the carrier, each exactly once, smallest first."""
    if group.size > max_size:
        raise GuardExceeded(
            f"subgroup enumeration guarded at carrier size {max_size}, "
            f"got {group.size}"
        )
    els = elements(group)
    trivial = (group.zero,)
    seen: set[tuple[Element, ...]] = {trivial}
    queue: list[tuple[Element, ...]] = [trivial]
    while queue:
        sub = queue.pop()
        base = set(sub)
        for x in els:
            if x in base:
                continue
            bigger = tuple(sorted(_close(group, base, x)))
            if bigger not in seen:
                seen.add(bigger)
                queue.append(bigger)
    ordered = sorted(seen, key=lambda t: (len(t), t))
    return tuple(Code.from_elements(group, t, validate=False) for t in ordered)


# ---------------------------------------------------------------------------
# Fourier analysis with exact coefficients


def fourier_transform(
    group: GroupSpec,
    f: Mapping[Element, CycInt | int],
    max_size: int = ELEMENT_GUARD,
) -> dict[Element, CycInt]:
    """Character sums chi -> sum_g <chi, g> f(g), exactly."""
    e = group.exponent
    els = elements(group, max_size)
    out: dict[Element, CycInt] = {}
    for chi in els:
        acc = zero(e)
        for g in els:
            acc = acc + zeta_pow(e, pairing_exponent(group, chi, g)) * f[g]
        out[chi] = acc
    return out


def poisson_check(
    group: GroupSpec,
    code: Code,
    f: Mapping[Element, CycInt | int],
    max_size: int = ELEMENT_GUARD,
) -> bool:
    """Summation identity relating f over a code to its transform over the dual."""
    e = group.exponent
    transformed = fourier_transform(group, f, max_size)
    perp = dual_code(group, code, max_size)
    lhs = reduce(lambda a, chi: a + transformed[chi], perp.elements, zero(e))
    rhs = reduce(lambda a, h: a + f[h], code.elements, zero(e)) * perp.size
    return lhs == rhs


# ---------------------------------------------------------------------------
# explicit isomorphisms of the carrier


@dataclass(frozen=True)
class GroupIso:
    """An additive bijection of the carrier, tabulated element by element."""

    group: GroupSpec
    images: tuple[Element, ...]  # indexed by element rank

    @classmethod
    def from_mapping(
        cls,
        group: GroupSpec,
        mapping: Mapping[Element, Element] | Callable[[Element], Element],
        check_limit: int = 256,
    ) -> "GroupIso":
        els = elements(group)
        if callable(mapping) and not isinstance(mapping, Mapping):
            table = {g: group.validate(mapping(g)) for g in els}
        else:
            table = {group.validate(k): group.validate(v) for k, v in mapping.items()}
        if set(table) != set(els):
            raise InputError("mapping must be defined on the whole carrier")
        if len(set(table.values())) != len(els):
            raise InputError("mapping is not a bijection")
        if group.size <= check_limit:
            for a in els:
                for b in els:
                    if table[group.add(a, b)] != group.add(table[a], table[b]):
                        raise InputError(f"mapping is not additive at {a}, {b}")
        return cls(group, tuple(table[g] for g in els))

    @classmethod
    def identity(cls, group: GroupSpec) -> "GroupIso":
        return cls(group, elements(group))

    def __call__(self, g: Element) -> Element:
        return self.images[self.group.rank(self.group.validate(g))]

    def inverse(self) -> "GroupIso":
        els = elements(self.group)
        inv: list[Element | None] = [None] * len(els)
        for g, img in zip(els, self.images):
            inv[self.group.rank(img)] = g
        return GroupIso(self.group, tuple(inv))  # type: ignore[arg-type]
