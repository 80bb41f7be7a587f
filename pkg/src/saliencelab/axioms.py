"""Switch detection and consistency axioms for choice functions.

A switch is the minimal observable inconsistency: adding one item to a menu
moves the choice to something that is neither the old pick nor the newcomer.
Every axiom checker here returns a verdict carrying a replayable witness, so
a failed check can always be demonstrated against the raw choice data.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .core import ChoiceFunction, Menu, mask_of, members, menus
from .errors import NotASwitch

AXIOMS = ("warp", "warp_s", "weak_warp", "always_chosen", "expansion_gamma")


@dataclass(frozen=True)
class Switch:
    """A pair (base, base + added) whose choice jumps to a third item."""

    base: Menu
    added: int
    old_choice: int
    new_choice: int

    @property
    def extended(self) -> Menu:
        return self.base | (1 << self.added)

    def replay(self, c: ChoiceFunction) -> bool:
        """Check this switch against the raw choice data."""
        return (
            not self.base >> self.added & 1
            and c.table[self.base] == self.old_choice
            and c.table[self.extended] == self.new_choice
            and self.new_choice != self.added
            and self.new_choice != self.old_choice
        )


@dataclass(frozen=True)
class Witness:
    """Menus and items that reproduce an axiom violation when replayed."""

    menus: tuple[Menu, ...]
    items: tuple[int, ...]


@dataclass(frozen=True)
class AxiomVerdict:
    axiom: str
    holds: bool
    witness: Witness | None = None

    def __post_init__(self):
        if self.holds == (self.witness is not None):
            raise ValueError("witness must be present exactly when the axiom fails")


def iter_minimal_switches(c: ChoiceFunction) -> Iterator[Switch]:
    """Minimal switches in canonical order: base by (size, mask), then added item."""
    table = c.table
    for base in menus(c.n):
        old = table[base]
        others = ((1 << c.n) - 1) & ~base
        for x in members(others):
            new = table[base | (1 << x)]
            if new != x and new != old:
                yield Switch(base, x, old, new)


def find_minimal_switches(c: ChoiceFunction) -> tuple[Switch, ...]:
    """All pairs (A, A + x) with c(A) != c(A + x) != x."""
    return tuple(iter_minimal_switches(c))


def reduce_switch(c: ChoiceFunction, base: Menu, larger: Menu) -> Switch:
    """Shrink a switch (base, larger) to a minimal switch nested inside it.

    Constructive descent: drop one item x of larger - base at a time (lowest
    index first).  Either (larger - x, larger) is already a minimal switch,
    or (base, larger - x) is again a switch and the descent continues.

    Raises:
        NotASwitch: the input pair is not a switch, i.e. it does not satisfy
            base < larger with c(base) != c(larger) in base.
    """
    table = c.table
    if not (
        base and base != larger and base & ~larger == 0
        and table[larger] != table[base]
        and base >> table[larger] & 1
    ):
        raise NotASwitch("pair is not a switch")
    lo, hi = base, larger
    while hi & ~lo:
        extra = hi & ~lo
        if extra.bit_count() == 1:
            x = members(extra)[0]
            return Switch(lo, x, table[lo], table[hi])
        x = members(extra)[0]
        mid = hi & ~(1 << x)
        if table[mid] != table[hi] and table[hi] != x:
            return Switch(mid, x, table[mid], table[hi])
        # (mid, hi) failed, so c(hi) = c(mid) and (lo, mid) is a switch
        hi = mid
    raise AssertionError("descent must terminate at a minimal switch")


def find_conflicting_menus(
    c: ChoiceFunction,
) -> tuple[tuple[Menu, Menu, int, int], ...]:
    """All quadruples (A, B, a, b) where the two menus conflict.

    A and B conflict through a in A and b in B when both (A, A + b) and
    (B, B + a) are switches.  Both orderings of a conflicting pair are
    reported; the order follows the canonical switch order.
    """
    switches = find_minimal_switches(c)
    out = []
    for s in switches:
        for t in switches:
            if s.base == t.base:
                continue
            # b := s.added must lie in B = t.base, a := t.added in A = s.base
            if t.base >> s.added & 1 and s.base >> t.added & 1:
                out.append((s.base, t.base, t.added, s.added))
    return tuple(out)


def check_axiom(c: ChoiceFunction, axiom: str) -> AxiomVerdict:
    """Decide one consistency axiom, with a replayable counterexample.

    Supported axiom ids: warp, warp_s, weak_warp, always_chosen,
    expansion_gamma.
    """
    try:
        checker = _CHECKERS[axiom]
    except KeyError:
        raise ValueError(f"unknown axiom {axiom!r}") from None
    return checker(c)


def _check_warp(c: ChoiceFunction) -> AxiomVerdict:
    # Contraction consistency for a finite choice function is exactly the
    # absence of minimal switches, so one linear scan decides it.
    for s in iter_minimal_switches(c):
        w = Witness(menus=(s.base, s.extended), items=(s.added, s.old_choice, s.new_choice))
        return AxiomVerdict("warp", False, w)
    return AxiomVerdict("warp", True)


def _check_warp_s(c: ChoiceFunction) -> AxiomVerdict:
    # For every switch (A, A + b) and every menu B containing b: adding any
    # a of A to B may not move the choice anywhere except to a itself.
    table = c.table
    for s in iter_minimal_switches(c):
        b = s.added
        for big in menus(c.n):
            if not big >> b & 1:
                continue
            for a in members(s.base & ~big):
                with_a = big | (1 << a)
                if table[with_a] != table[big] and table[with_a] != a:
                    w = Witness(menus=(s.base, big), items=(b, a))
                    return AxiomVerdict("warp_s", False, w)
    return AxiomVerdict("warp_s", True)


def _check_weak_warp(c: ChoiceFunction) -> AxiomVerdict:
    # If x beats y head to head and is chosen from a big menu, y may not be
    # chosen from any menu nested between the pair and the big menu.
    table = c.table
    n = c.n
    for big in menus(n):
        x = table[big]
        for y in members(big & ~(1 << x)):
            pair = (1 << x) | (1 << y)
            if pair == big or table[pair] != x:
                continue
            rest = big & ~pair
            sub = rest
            while True:
                mid = sub | pair
                if mid != big and table[mid] == y:
                    w = Witness(menus=(pair, mid, big), items=(x, y))
                    return AxiomVerdict("weak_warp", False, w)
                if sub == 0:
                    break
                sub = (sub - 1) & rest
    return AxiomVerdict("weak_warp", True)


def _check_always_chosen(c: ChoiceFunction) -> AxiomVerdict:
    # An item that wins every head-to-head contest inside a menu must be
    # chosen from that menu.
    table = c.table
    for menu in menus(c.n):
        for x in members(menu):
            if all(
                table[(1 << x) | (1 << y)] == x
                for y in members(menu & ~(1 << x))
            ):
                if table[menu] != x:
                    w = Witness(menus=(menu,), items=(x, table[menu]))
                    return AxiomVerdict("always_chosen", False, w)
                break  # at most one pairwise-undefeated item per menu
    return AxiomVerdict("always_chosen", True)


def _check_expansion_gamma(c: ChoiceFunction) -> AxiomVerdict:
    # An item chosen from two menus must be chosen from their union.
    table = c.table
    ms = menus(c.n)
    for i, first in enumerate(ms):
        x = table[first]
        for second in ms[i + 1 :]:
            if table[second] != x:
                continue
            union = first | second
            if table[union] != x:
                w = Witness(menus=(first, second, union), items=(x, table[union]))
                return AxiomVerdict("expansion_gamma", False, w)
    return AxiomVerdict("expansion_gamma", True)


_CHECKERS = {
    "warp": _check_warp,
    "warp_s": _check_warp_s,
    "weak_warp": _check_weak_warp,
    "always_chosen": _check_always_chosen,
    "expansion_gamma": _check_expansion_gamma,
}
