"""Shared fixtures and independent oracles for the test suite.

The oracles deliberately re-derive facts from first principles (pairwise
scans, permutation searches) rather than calling the production code paths
they are used to check.
"""

from __future__ import annotations

import itertools
import random

import pytest

from saliencelab import (
    ChoiceFunction,
    LinearOrder,
    enumerate_choices,
    get_fixture,
    members,
    menus,
)


@pytest.fixture(scope="session")
def luce_raiffa() -> ChoiceFunction:
    return get_fixture("luce_raiffa").choice()


@pytest.fixture(scope="session")
def acyclic_salience() -> ChoiceFunction:
    return get_fixture("acyclic_salience").choice()


@pytest.fixture(scope="session")
def fancy_dinner() -> ChoiceFunction:
    return get_fixture("fancy_dinner").choice()


@pytest.fixture(scope="session")
def shortlist() -> ChoiceFunction:
    return get_fixture("shortlist").choice()


@pytest.fixture(scope="session")
def all_choices_n3() -> list[ChoiceFunction]:
    return list(enumerate_choices(3))


@pytest.fixture(scope="session")
def all_choices_n4() -> list[ChoiceFunction]:
    return list(enumerate_choices(4))


# ---------------------------------------------------------------------------
# Independent oracles


def oracle_switch_pairs(c: ChoiceFunction) -> set[tuple[int, int]]:
    """Minimal switches by scanning all menu pairs (base, base + one item)."""
    out = set()
    ms = menus(c.n)
    for small in ms:
        for big in ms:
            extra = big & ~small
            if small & ~big or extra.bit_count() != 1:
                continue
            x = members(extra)[0]
            if c.table[big] != x and c.table[big] != c.table[small]:
                out.add((small, x))
    return out


def oracle_rationalizing_order(c: ChoiceFunction) -> LinearOrder | None:
    """Search all rankings for one whose maximization replays the choice."""
    for ranking in itertools.permutations(range(c.n)):
        order = LinearOrder(ranking)
        if all(order.max_of(m) == c.table[m] for m in menus(c.n)):
            return order
    return None


def oracle_removal_preference(c: ChoiceFunction) -> set[tuple[int, int]]:
    """Pairs (x, y) where some menu holding x changes choice as y leaves,
    without y having been chosen.  Literal double loop over item pairs."""
    out = set()
    n = c.n

    def choose(mask):
        return members(mask)[0] if mask.bit_count() == 1 else c.table[mask]

    for x in range(n):
        for y in range(n):
            if x == y:
                continue
            for menu in menus(n):
                if not menu >> x & 1:
                    continue
                reduced = menu & ~(1 << y)
                if reduced == menu or reduced == 0:
                    continue
                if c.table[menu] != y and choose(reduced) != c.table[menu]:
                    out.add((x, y))
                    break
    return out


def random_partial_order_pairs(
    rng: random.Random, n: int, density: float = 0.4
) -> set[tuple[int, int]]:
    """A random asymmetric, cycle-free pair set (a sub-relation of a random
    total order, which captures every such relation)."""
    base = list(range(n))
    rng.shuffle(base)
    pairs = set()
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < density:
                pairs.add((base[i], base[j]))
    return pairs
