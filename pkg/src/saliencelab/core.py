"""Ground sets, menus, choice functions, isomorphism codes, and enumeration.

Items are addressed by index ``0..n-1`` and a menu is a nonempty subset of
those indices packed into an ``int`` bit mask.  A choice function is a dense
table indexed by menu mask, which makes every checker in the package an O(1)
lookup per menu.  Singleton menus are never part of the stored data model
(``c({x}) = x`` is forced) but the in-memory table carries them so callers
can evaluate ``c`` on any menu without special cases.
"""

from __future__ import annotations

import itertools
import random
import string
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .errors import (
    DuplicateMenu,
    GroundTooLarge,
    MissingMenu,
    NonMemberChoice,
)

Menu = int
CanonicalCode = bytes

MAX_ITEMS = 24
MAX_EXHAUSTIVE = 4
MAX_SAMPLING = 6
MAX_CANONICAL = 8


def members(mask: Menu) -> tuple[int, ...]:
    """Indices contained in a menu mask, ascending."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def mask_of(items: Iterable[int]) -> Menu:
    m = 0
    for i in items:
        m |= 1 << i
    return m


@lru_cache(maxsize=None)
def menus(n: int) -> tuple[Menu, ...]:
    """All menus of size >= 2 on ``n`` items, sorted by (size, mask).

    This order is the canonical traversal order for the whole package:
    enumeration digits, switch scans, and witness selection all follow it.
    """
    ms = [m for m in range(1, 1 << n) if m.bit_count() >= 2]
    ms.sort(key=lambda m: (m.bit_count(), m))
    return tuple(ms)


@lru_cache(maxsize=None)
def _member_table(n: int) -> dict[Menu, tuple[int, ...]]:
    return {m: members(m) for m in menus(n)}


@dataclass(frozen=True)
class GroundSet:
    """An ordered set of item labels."""

    labels: tuple[str, ...]

    def __post_init__(self):
        if not 2 <= len(self.labels) <= MAX_ITEMS:
            raise GroundTooLarge(
                f"ground set must have 2..{MAX_ITEMS} items, got {len(self.labels)}"
            )
        seen = set()
        for lbl in self.labels:
            if not lbl or any(ch.isspace() for ch in lbl) or "," in lbl or lbl == "->":
                raise ValueError(f"bad item label {lbl!r}")
            if lbl in seen:
                raise ValueError(f"duplicate item label {lbl!r}")
            seen.add(lbl)

    @property
    def n(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"unknown item label {label!r}") from None

    def menu(self, labels: Iterable[str]) -> Menu:
        return mask_of(self.index(lbl) for lbl in labels)

    def menu_labels(self, mask: Menu) -> tuple[str, ...]:
        return tuple(self.labels[i] for i in members(mask))

    @property
    def full_mask(self) -> Menu:
        return (1 << self.n) - 1


def default_ground(n: int) -> GroundSet:
    """Ground set with single-letter labels a, b, c, ..."""
    return GroundSet(tuple(string.ascii_lowercase[:n]))


@dataclass(frozen=True)
class ChoiceFunction:
    """A total single-valued choice over every menu of a ground set.

    ``table[mask]`` is the chosen item index for the menu ``mask``; singleton
    entries are forced to the lone member and ``table[0]`` is ``-1``.  The
    constructor trusts its arguments; use :func:`make_choice` to build one
    from validated per-menu assignments.
    """

    ground: GroundSet
    table: tuple[int, ...] = field(repr=False)

    def __post_init__(self):
        if len(self.table) != 1 << self.ground.n:
            raise ValueError("table length must be 2**n")

    @property
    def n(self) -> int:
        return self.ground.n

    def choose(self, menu: Menu) -> int:
        if menu == 0:
            raise ValueError("empty menu")
        return self.table[menu]

    def menus(self) -> tuple[Menu, ...]:
        """Menus of size >= 2 in canonical (size, mask) order."""
        return menus(self.ground.n)

    def assignments(self) -> Iterator[tuple[Menu, int]]:
        """(menu, chosen item) pairs over the stored domain."""
        for m in menus(self.ground.n):
            yield m, self.table[m]


def _singleton_table(n: int) -> list[int]:
    table = [-1] * (1 << n)
    for i in range(n):
        table[1 << i] = i
    return table


def make_choice(
    ground: GroundSet, assignments: Iterable[tuple[Menu, int]]
) -> ChoiceFunction:
    """Build a validated choice function from per-menu assignments.

    The assignments must cover exactly the menus of size >= 2, once each,
    and every chosen item must belong to its menu.

    Raises:
        DuplicateMenu: a menu appears twice.
        NonMemberChoice: a chosen item lies outside its menu.
        MissingMenu: some menu of size >= 2 has no assignment.
    """
    n = ground.n
    table = _singleton_table(n)
    seen: set[Menu] = set()
    for mask, item in assignments:
        if not 0 < mask < (1 << n):
            raise ValueError(f"menu mask {mask:#x} out of range for n={n}")
        if mask.bit_count() < 2:
            raise ValueError("assignments must not include singleton menus")
        if mask in seen:
            raise DuplicateMenu(
                f"menu {{{' '.join(ground.menu_labels(mask))}}} assigned twice"
            )
        if not mask >> item & 1:
            raise NonMemberChoice(
                f"chosen item {ground.labels[item]!r} is not in menu "
                f"{{{' '.join(ground.menu_labels(mask))}}}"
            )
        seen.add(mask)
        table[mask] = item
    for m in menus(n):
        if m not in seen:
            raise MissingMenu(
                f"no assignment for menu {{{' '.join(ground.menu_labels(m))}}}"
            )
    return ChoiceFunction(ground, tuple(table))


def subchoice(c: ChoiceFunction, menu: Menu) -> ChoiceFunction:
    """Restrict ``c`` to the items of ``menu`` as a choice in its own right.

    The result agrees with ``c`` on every submenu of ``menu``.
    """
    items = members(menu)
    if len(items) < 2:
        raise ValueError("subchoice needs a menu of size >= 2")
    ground = GroundSet(tuple(c.ground.labels[i] for i in items))
    k = len(items)
    table = _singleton_table(k)
    for sub in menus(k):
        parent = mask_of(items[i] for i in members(sub))
        table[sub] = items.index(c.table[parent])
    return ChoiceFunction(ground, tuple(table))


def relabel(c: ChoiceFunction, perm: Sequence[int]) -> ChoiceFunction:
    """The isomorphic copy of ``c`` under the item permutation ``perm``.

    The new function c' satisfies c'(perm(A)) = perm(c(A)); the ground-set
    labels are unchanged.
    """
    n = c.ground.n
    if sorted(perm) != list(range(n)):
        raise ValueError("perm must be a permutation of item indices")
    table = _singleton_table(n)
    for mask in menus(n):
        image = mask_of(perm[i] for i in members(mask))
        table[image] = perm[c.table[mask]]
    return ChoiceFunction(c.ground, tuple(table))


@lru_cache(maxsize=8)
def _perm_tables(n: int) -> tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]:
    """Per permutation: (perm, preimage-mask table over all 2**n masks)."""
    out = []
    for perm in itertools.permutations(range(n)):
        pre = [0] * (1 << n)
        for mask in range(1 << n):
            p = 0
            for i in range(n):
                if mask >> perm[i] & 1:
                    p |= 1 << i
            pre[mask] = p
        out.append((perm, tuple(pre)))
    return tuple(out)


def canonical_form(c: ChoiceFunction) -> CanonicalCode:
    """A code equal for two choice functions iff they are isomorphic.

    The code is the lexicographic minimum, over all relabelings of the
    items, of the chosen-item byte string in canonical menu order.  Gated
    to n <= 8 because it ranges over all n! relabelings.
    """
    n = c.ground.n
    if n > MAX_CANONICAL:
        raise GroundTooLarge(f"canonical form is gated to n <= {MAX_CANONICAL}")
    table = c.table
    ms = menus(n)
    best: bytes | None = None
    for perm, pre in _perm_tables(n):
        code = bytes(perm[table[pre[m]]] for m in ms)
        if best is None or code < best:
            best = code
    assert best is not None
    return best


def count_choices(n: int) -> int:
    """Number of distinct choice functions on ``n`` items."""
    total = 1
    for m in menus(n):
        total *= m.bit_count()
    return total


def choice_from_index(n: int, index: int, ground: GroundSet | None = None) -> ChoiceFunction:
    """Decode one choice function from its rank in the canonical enumeration.

    Menus are ordered by (size, mask); the first menu is the most
    significant mixed-radix digit and member items are the digit values in
    ascending index order.
    """
    ground = ground or default_ground(n)
    ms = menus(n)
    mem = _member_table(n)
    table = _singleton_table(n)
    rem = index
    for m in reversed(ms):
        rem, d = divmod(rem, m.bit_count())
        table[m] = mem[m][d]
    if rem:
        raise ValueError(f"index {index} out of range for n={n}")
    return ChoiceFunction(ground, tuple(table))


def enumerate_choices(
    n: int, start: int = 0, stop: int | None = None
) -> Iterator[ChoiceFunction]:
    """Every choice function on ``n`` items exactly once, in a fixed order.

    ``start``/``stop`` select a rank range so the traversal can be split
    across parallel workers; the full run is ``[0, count_choices(n))``.
    Exhaustive enumeration is gated to n <= 4.
    """
    if not 2 <= n <= MAX_EXHAUSTIVE:
        raise GroundTooLarge(f"exhaustive enumeration is gated to 2 <= n <= {MAX_EXHAUSTIVE}")
    total = count_choices(n)
    stop = total if stop is None else min(stop, total)
    ground = default_ground(n)
    ms = menus(n)
    mem = _member_table(n)
    sizes = [m.bit_count() for m in ms]
    table = _singleton_table(n)
    for index in range(max(start, 0), stop):
        rem = index
        for m, s in zip(reversed(ms), reversed(sizes)):
            rem, d = divmod(rem, s)
            table[m] = mem[m][d]
        yield ChoiceFunction(ground, tuple(table))


def sample_choices(
    n: int, count: int, seed: int | random.Random | None = None
) -> Iterator[ChoiceFunction]:
    """``count`` uniform-random choice functions on ``n`` items (n <= 6)."""
    if not 2 <= n <= MAX_SAMPLING:
        raise GroundTooLarge(f"random sampling is gated to 2 <= n <= {MAX_SAMPLING}")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    ground = default_ground(n)
    mem = _member_table(n)
    for _ in range(count):
        table = _singleton_table(n)
        for m, mm in mem.items():
            table[m] = mm[rng.randrange(len(mm))]
        yield ChoiceFunction(ground, tuple(table))
