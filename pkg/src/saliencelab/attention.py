"""Limited attention: revealed preference, attention filters, and witnesses.

A choice is explainable with limited attention when a single linear
preference maximized over per-menu consideration sets reproduces it; the
consideration sets must not change when an ignored item is removed.  The
salient variant strengthens that stability to every removed item that is
neither the menu's worst element nor the best considered one, and it is
equivalent to rationalizability by linear salience.  The canonical filter
built here assigns to each menu the chosen item's lower set, which is the
unique maximal filter for a fixed preference.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .axioms import AxiomVerdict, Witness
from .core import ChoiceFunction, Menu, members, menus
from .errors import GroundTooLarge, InternalContractBreach, NotRls
from .relations import LinearOrder, Relation, linear_extension
from .salience import is_rls, revealed_salience

MAX_EXHAUSTIVE_ORDERS = 5


@dataclass(frozen=True)
class FilterTable:
    """A consideration-set table: each menu maps to a nonempty submenu."""

    n: int
    table: tuple[Menu, ...]

    def __post_init__(self):
        if len(self.table) != 1 << self.n:
            raise ValueError("filter table length must be 2**n")
        for mask in range(1, 1 << self.n):
            picked = self.table[mask]
            if picked == 0 or picked & ~mask:
                raise ValueError(f"filter value for menu {mask:#x} is not a nonempty submenu")

    def of(self, menu: Menu) -> Menu:
        if menu == 0:
            raise ValueError("empty menu")
        return self.table[menu]


@dataclass(frozen=True)
class CslaWitness:
    rationale: LinearOrder
    filter: FilterTable


def revealed_preference_p(c: ChoiceFunction) -> Relation:
    """x over y when removing y from some menu chosen as x moves the choice.

    Menus of size two fall back to the forced singleton choice after the
    removal.
    """
    rows = [0] * c.n
    table = c.table
    for menu in menus(c.n):
        x = table[menu]
        for y in members(menu & ~(1 << x)):
            if table[menu & ~(1 << y)] != x:
                rows[x] |= 1 << y
    return Relation(c.n, tuple(rows))


def p_tilde(c: ChoiceFunction) -> Relation:
    """The converse of revealed salience.

    Equivalently: x over y when some menu containing both changes its
    choice once y is removed although y was not the chosen item.  The
    converse form is the single source of truth here; the direct removal
    scan is asserted equal to it in the test suite.
    """
    return revealed_salience(c).relation.converse()


def _find_cycle(r: Relation) -> tuple[int, ...] | None:
    """Vertices of some directed cycle (length >= 2), or None."""
    color = [0] * r.n
    stack: list[int] = []

    def dfs(u: int) -> tuple[int, ...] | None:
        color[u] = 1
        stack.append(u)
        for v in members(r.rows[u]):
            if color[v] == 1:
                return tuple(stack[stack.index(v):])
            if color[v] == 0:
                found = dfs(v)
                if found:
                    return found
        stack.pop()
        color[u] = 2
        return None

    for start in range(r.n):
        if color[start] == 0:
            cycle = dfs(start)
            if cycle:
                return cycle
    return None


def is_cla(c: ChoiceFunction) -> AxiomVerdict:
    """Decide choice with limited attention.

    Holds exactly when the revealed preference has no directed cycles of
    any length; the witness lists the items of one cycle.
    """
    cycle = _find_cycle(revealed_preference_p(c))
    if cycle is None:
        return AxiomVerdict("cla", True)
    return AxiomVerdict("cla", False, Witness(menus=(), items=cycle))


def canonical_filter(c: ChoiceFunction, order: LinearOrder) -> FilterTable:
    """The maximal filter for ``order``: each menu keeps the chosen item's
    lower set."""
    table = [0] * (1 << c.n)
    full = c.table
    for mask in range(1, 1 << c.n):
        chosen = full[mask]
        table[mask] = order.down_mask(chosen) & mask
    return FilterTable(c.n, tuple(table))


def verify_salient_filter(c: ChoiceFunction, witness: CslaWitness) -> bool:
    """Replay a salient-attention witness against the choice data.

    True iff (i) every menu's choice is the rationale-best considered item,
    and (ii) removing any item other than the menu's rationale-worst and
    the best considered one deletes exactly that item from the
    consideration set.
    """
    order = witness.rationale
    gamma = witness.filter.table
    table = c.table
    n = c.n
    for mask in range(1, 1 << n):
        if order.max_of(gamma[mask]) != table[mask]:
            return False
    for mask in menus(n):
        worst = order.min_of(mask)
        best_considered = order.max_of(gamma[mask])
        for x in members(mask):
            if x == worst or x == best_considered:
                continue
            if gamma[mask] & ~(1 << x) != gamma[mask & ~(1 << x)]:
                return False
    return True


def build_csla_witness(c: ChoiceFunction) -> CslaWitness:
    """Construct a salient-attention witness for a linear-salience choice.

    The rationale is the deterministic linear extension of the converse of
    revealed salience, and the filter is the canonical one.  The result is
    verified before it is returned.

    Raises:
        NotRls: the choice is not rationalizable by linear salience.
        InternalContractBreach: verification failed, which indicates an
            implementation bug rather than bad input.
    """
    if not is_rls(c).holds:
        raise NotRls("revealed salience is not asymmetric")
    order = linear_extension(p_tilde(c))
    witness = CslaWitness(rationale=order, filter=canonical_filter(c, order))
    if not verify_salient_filter(c, witness):
        raise InternalContractBreach("constructed salient-attention witness failed replay")
    return witness


def is_csla_exhaustive(c: ChoiceFunction) -> bool:
    """Decide salient limited attention by searching all rationales.

    For a fixed rationale the canonical filter is the unique maximal one,
    so only the n! rationales need to be tried, never the filters.  Gated
    to n <= 5.
    """
    if c.n > MAX_EXHAUSTIVE_ORDERS:
        raise GroundTooLarge(f"rationale search is gated to n <= {MAX_EXHAUSTIVE_ORDERS}")
    for ranking in itertools.permutations(range(c.n)):
        order = LinearOrder(ranking)
        witness = CslaWitness(rationale=order, filter=canonical_filter(c, order))
        if verify_salient_filter(c, witness):
            return True
    return False
