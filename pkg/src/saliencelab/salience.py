"""Revealed salience and rationalization by linear salience.

The salience an observer can infer from choice data is a binary relation:
x is revealed more salient than y whenever adding x to some menu containing
y produces a switch.  A choice is rationalizable by linear salience exactly
when this relation has no two-cycles; the constructive witness built here
realizes that criterion and can always be replayed against the data.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .axioms import AxiomVerdict, Switch, Witness, iter_minimal_switches
from .core import ChoiceFunction, members, menus
from .errors import GroundTooLarge, NotRls
from .relations import LinearOrder, Relation, linear_extension, transitive_closure

MAX_WITNESS_BUILD = 16


@dataclass(frozen=True)
class RevealedSalience:
    """The revealed-salience relation plus one witnessing switch per pair."""

    relation: Relation
    provenance: Mapping[tuple[int, int], Switch]


def revealed_salience(c: ChoiceFunction) -> RevealedSalience:
    """x over y whenever some switch adds x to a menu containing y.

    Provenance keeps the first witnessing switch in canonical switch order
    for every revealed pair.
    """
    rows = [0] * c.n
    provenance: dict[tuple[int, int], Switch] = {}
    for s in iter_minimal_switches(c):
        for y in members(s.base):
            rows[s.added] |= 1 << y
            provenance.setdefault((s.added, y), s)
    return RevealedSalience(Relation(c.n, tuple(rows)), provenance)


def is_rls(c: ChoiceFunction) -> AxiomVerdict:
    """Decide rationalizability by linear salience.

    Holds exactly when revealed salience is asymmetric; a two-cycle in the
    relation already rules out longer cycles mattering, so no separate
    acyclicity test is needed.  On failure the witness carries the
    symmetric pair and the base menus of its two provenance switches.
    """
    rs = revealed_salience(c)
    rel = rs.relation
    for x in range(c.n):
        for y in members(rel.rows[x]):
            if y > x and rel.has(y, x):
                sx = rs.provenance[(x, y)]
                sy = rs.provenance[(y, x)]
                w = Witness(menus=(sx.base, sy.base), items=(x, y))
                return AxiomVerdict("rls", False, w)
    return AxiomVerdict("rls", True)


@dataclass(frozen=True)
class RlsWitness:
    """A linear-salience rationalization: salience classes plus rationales.

    ``salience_classes`` lists the indifference classes best first; the
    constructive path always emits singleton classes, while verification
    accepts coarser class structures as long as items in one class share
    one rationale.
    """

    salience_classes: tuple[tuple[int, ...], ...]
    rationales: Mapping[int, LinearOrder]

    @property
    def n(self) -> int:
        return sum(len(cls) for cls in self.salience_classes)

    @property
    def salience_ranking(self) -> tuple[int, ...]:
        """Flat best-to-worst item ranking (classes in order)."""
        return tuple(x for cls in self.salience_classes for x in cls)

    def distinct_rationales(self) -> int:
        return len({r.ranking for r in self.rationales.values()})


def build_rls_witness(c: ChoiceFunction) -> RlsWitness:
    """Construct a replayable linear-salience witness.

    The salience order is the deterministic linear extension of the
    transitive closure of revealed salience.  Each item's rationale is the
    deterministic linear extension of the preference revealed inside that
    item's salience down-set: y beats z when some menu within the down-set
    contains the item and both of them and selects y.

    The down-set scan is exponential in the down-set size, so construction
    is gated to n <= 16; the polynomial decision procedure is
    :func:`is_rls`.

    Raises:
        NotRls: the choice has no linear-salience rationalization.
        GroundTooLarge: n exceeds the construction gate.
    """
    if c.n > MAX_WITNESS_BUILD:
        raise GroundTooLarge(f"witness construction is gated to n <= {MAX_WITNESS_BUILD}")
    verdict = is_rls(c)
    if not verdict.holds:
        raise NotRls("revealed salience is not asymmetric")
    rel = revealed_salience(c).relation
    salience = linear_extension(transitive_closure(rel))
    table = c.table
    rationales: dict[int, LinearOrder] = {}
    for x in range(c.n):
        down = salience.down_mask(x)
        rest = down & ~(1 << x)
        rows = [0] * c.n
        sub = rest
        while True:
            menu = sub | (1 << x)
            if menu.bit_count() >= 2:
                y = table[menu]
                rows[y] |= menu & ~(1 << y)
            if sub == 0:
                break
            sub = (sub - 1) & rest
        rationales[x] = linear_extension(Relation(c.n, tuple(rows)))
    return RlsWitness(
        salience_classes=tuple((x,) for x in salience.ranking),
        rationales=rationales,
    )


def verify_rls_witness(c: ChoiceFunction, witness: RlsWitness) -> bool:
    """Replay a linear-salience witness against the choice data.

    Checks that the classes partition the items, that equally salient items
    share one rationale, and that every menu's choice maximizes the
    rationale of the menu's most salient class.  Returns False on any
    failure; raises ValueError only for structurally malformed input
    (wrong item set or rankings that are not total orders).
    """
    n = c.n
    flat = [x for cls in witness.salience_classes for x in cls]
    if sorted(flat) != list(range(n)):
        raise ValueError("salience classes must partition the item indices")
    if set(witness.rationales) != set(range(n)):
        raise ValueError("one rationale per item is required")
    for order in witness.rationales.values():
        if order.n != n:
            raise ValueError("rationales must rank the full ground set")
    for cls in witness.salience_classes:
        first = witness.rationales[cls[0]].ranking
        if any(witness.rationales[x].ranking != first for x in cls[1:]):
            return False  # equally salient items disagree on the rationale
    table = c.table
    for menu in menus(n):
        for cls in witness.salience_classes:
            top = [x for x in cls if menu >> x & 1]
            if top:
                break
        else:  # pragma: no cover - partition guarantees a hit
            raise AssertionError
        if table[menu] != witness.rationales[top[0]].max_of(menu):
            return False
    return True
