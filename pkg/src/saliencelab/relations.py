"""Binary relations over items: property verdicts, closure, extensions, maxima.

Asymmetry and acyclicity are kept deliberately separate: asymmetry means no
cycles of length two, acyclicity means no simple cycles of length three or
more.  Several checkers in this package quantify over the two properties
independently, so a single combined "no cycles at all" flag would not do.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Mapping

from .core import Menu, members
from .errors import EmptyMax, NotExtendable


@dataclass(frozen=True)
class Relation:
    """An n x n incidence table; ``rows[x]`` is the bit mask of {y : x R y}."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if len(self.rows) != self.n:
            raise ValueError("rows length must equal n")
        full = (1 << self.n) - 1
        if any(r & ~full for r in self.rows):
            raise ValueError("row mask out of range")

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "Relation":
        rows = [0] * n
        for x, y in pairs:
            rows[x] |= 1 << y
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> "Relation":
        return cls(n, (0,) * n)

    def has(self, x: int, y: int) -> bool:
        return bool(self.rows[x] >> y & 1)

    def pairs(self) -> Iterator[tuple[int, int]]:
        for x in range(self.n):
            for y in members(self.rows[x]):
                yield (x, y)

    def converse(self) -> "Relation":
        rows = [0] * self.n
        for x, y in self.pairs():
            rows[y] |= 1 << x
        return Relation(self.n, tuple(rows))

    def strict_part(self) -> "Relation":
        """x over y where x R y holds and y R x does not."""
        rows = [
            self.rows[x] & ~mask_column(self, x) for x in range(self.n)
        ]
        return Relation(self.n, tuple(rows))

    def contains(self, other: "Relation") -> bool:
        return self.n == other.n and all(
            other.rows[x] & ~self.rows[x] == 0 for x in range(self.n)
        )

    def is_empty(self) -> bool:
        return all(r == 0 for r in self.rows)


def mask_column(r: Relation, x: int) -> int:
    """Bit mask of {y : y R x}."""
    col = 0
    for y in range(r.n):
        if r.rows[y] >> x & 1:
            col |= 1 << y
    return col


@dataclass(frozen=True)
class PropertyReport:
    """Property flags for a relation, with a concrete witness per failure.

    Witness shapes: a pair ``(x, y)`` for all flags except ``acyclic``,
    whose witness is a simple cycle ``(v0, v1, ..., vk)`` meaning
    v0 R v1 R ... R vk R v0 with k >= 2.
    """

    reflexive: bool
    asymmetric: bool
    symmetric: bool
    antisymmetric: bool
    transitive: bool
    acyclic: bool
    complete: bool
    witnesses: Mapping[str, tuple[int, ...]] = field(default_factory=dict)


def _find_long_cycle(r: Relation) -> tuple[int, ...] | None:
    """A simple directed cycle on >= 3 distinct items, or None.

    For each edge u -> v, search a shortest path v -> u that avoids the
    direct edge (v, u); shortest paths are simple, so gluing the edge back
    on yields a simple cycle of length >= 3.  Conversely any long simple
    cycle contains such an edge, so the scan is exact.
    """
    n = r.n
    for u in range(n):
        for v in members(r.rows[u] & ~(1 << u)):
            parent = {v: -1}
            queue = deque([v])
            found = False
            while queue and not found:
                w = queue.popleft()
                succ = r.rows[w] & ~(1 << w)
                if w == v:
                    succ &= ~(1 << u)  # skip the direct edge v -> u
                for t in members(succ):
                    if t in parent:
                        continue
                    parent[t] = w
                    if t == u:
                        found = True
                        break
                    queue.append(t)
            if found:
                path = [u]
                while path[-1] != v:
                    path.append(parent[path[-1]])
                path.reverse()  # v ... u
                return tuple([u] + path[:-1])
    return None


def check_properties(r: Relation) -> PropertyReport:
    """Flags plus counterexample witnesses for the standard properties."""
    n = r.n
    witness: dict[str, tuple[int, ...]] = {}

    reflexive = True
    for x in range(n):
        if not r.has(x, x):
            reflexive = False
            witness["reflexive"] = (x, x)
            break

    asymmetric = True
    for x in range(n):
        for y in range(x, n):
            if r.has(x, y) and r.has(y, x):
                asymmetric = False
                witness["asymmetric"] = (x, y)
                break
        if not asymmetric:
            break

    symmetric = True
    antisymmetric = True
    for x in range(n):
        for y in range(n):
            if x == y:
                continue
            if r.has(x, y) and not r.has(y, x) and symmetric:
                symmetric = False
                witness["symmetric"] = (x, y)
            if r.has(x, y) and r.has(y, x) and x < y and antisymmetric:
                antisymmetric = False
                witness["antisymmetric"] = (x, y)

    transitive = True
    for x in range(n):
        for y in members(r.rows[x]):
            if r.rows[y] & ~r.rows[x]:
                z = members(r.rows[y] & ~r.rows[x])[0]
                transitive = False
                witness["transitive"] = (x, z)
                break
        if not transitive:
            break

    cycle = _find_long_cycle(r)
    acyclic = cycle is None
    if cycle is not None:
        witness["acyclic"] = cycle

    complete = True
    for x in range(n):
        for y in range(x + 1, n):
            if not r.has(x, y) and not r.has(y, x):
                complete = False
                witness["complete"] = (x, y)
                break
        if not complete:
            break

    return PropertyReport(
        reflexive=reflexive,
        asymmetric=asymmetric,
        symmetric=symmetric,
        antisymmetric=antisymmetric,
        transitive=transitive,
        acyclic=acyclic,
        complete=complete,
        witnesses=witness,
    )


def transitive_closure(r: Relation) -> Relation:
    """Smallest transitive relation containing ``r``."""
    rows = list(r.rows)
    for k in range(r.n):
        rk = rows[k]
        for x in range(r.n):
            if rows[x] >> k & 1:
                rows[x] |= rk
    return Relation(r.n, tuple(rows))


@dataclass(frozen=True)
class LinearOrder:
    """A strict total order given as a ranking, best item first."""

    ranking: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.ranking) != list(range(len(self.ranking))):
            raise ValueError("ranking must be a permutation of 0..n-1")

    @property
    def n(self) -> int:
        return len(self.ranking)

    @cached_property
    def _pos(self) -> tuple[int, ...]:
        pos = [0] * self.n
        for rank, item in enumerate(self.ranking):
            pos[item] = rank
        return tuple(pos)

    def above(self, x: int, y: int) -> bool:
        """True when x is strictly better than y."""
        return self._pos[x] < self._pos[y]

    def max_of(self, menu: Menu) -> int:
        if menu == 0:
            raise ValueError("empty menu")
        pos = self._pos
        return min(members(menu), key=pos.__getitem__)

    def min_of(self, menu: Menu) -> int:
        if menu == 0:
            raise ValueError("empty menu")
        pos = self._pos
        return max(members(menu), key=pos.__getitem__)

    def down_mask(self, x: int) -> Menu:
        """Items ranked at or below x, including x."""
        px = self._pos[x]
        out = 0
        for y in range(self.n):
            if self._pos[y] >= px:
                out |= 1 << y
        return out

    def as_relation(self) -> Relation:
        rows = [0] * self.n
        for i, x in enumerate(self.ranking):
            for y in self.ranking[i + 1 :]:
                rows[x] |= 1 << y
        return Relation(self.n, tuple(rows))


def linear_extension(r: Relation) -> LinearOrder:
    """A deterministic strict total order containing ``r``.

    Repeatedly emits the lowest-index item that no remaining item strictly
    dominates, so ties always break toward smaller indices.

    Raises:
        NotExtendable: ``r`` has a cycle (including self-loops and
            two-cycles), so no strict total order can contain it.
    """
    n = r.n
    for x in range(n):
        if r.has(x, x):
            raise NotExtendable(f"self-loop at item {x}")
    remaining = (1 << n) - 1
    ranking: list[int] = []
    while remaining:
        pick = -1
        for x in members(remaining):
            dominated = False
            for y in members(remaining & ~(1 << x)):
                if r.has(y, x):
                    dominated = True
                    break
            if not dominated:
                pick = x
                break
        if pick < 0:
            raise NotExtendable("relation has a cycle")
        ranking.append(pick)
        remaining &= ~(1 << pick)
    return LinearOrder(tuple(ranking))


def maximal_elements(menu: Menu, r: Relation) -> Menu:
    """Items of ``menu`` not strictly dominated within it, as a mask.

    The strict part of ``r`` is used, so both weak preferences and already
    strict relations are accepted.

    Raises:
        EmptyMax: every item is dominated, i.e. the strict part cycles on
            the menu (a caller bug per the preconditions).
    """
    if menu == 0:
        raise ValueError("empty menu")
    out = 0
    for x in members(menu):
        dominated = False
        for y in members(menu & ~(1 << x)):
            if r.has(y, x) and not r.has(x, y):
                dominated = True
                break
        if not dominated:
            out |= 1 << x
    if out == 0:
        raise EmptyMax("strict part of the relation cycles on the menu")
    return out
