"""General salience rationalization, moodiness, flipped choices, census, bounds.

In the general model a choice is justified by a salience suborder plus one
linear rationale per item: every menu must be explained by the rationale of
one of its maximally salient members.  Any behavior admits such a
rationalization, so the interesting quantity is the minimum number of
distinct rationales; a choice needing one per item is called moody.  The
census machinery counts isomorphism classes of small choice functions by
property, and the bound calculator turns a four-item class count into an
upper bound on the property's density at larger sizes.
"""

from __future__ import annotations

import itertools
import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from .axioms import AxiomVerdict, Witness, iter_minimal_switches
from .core import (
    ChoiceFunction,
    GroundSet,
    canonical_form,
    choice_from_index,
    count_choices,
    default_ground,
    enumerate_choices,
    members,
    menus,
)
from .attention import is_cla
from .errors import GroundTooLarge, TooSmall, UnsupportedN
from .relations import LinearOrder, Relation, check_properties, maximal_elements
from .salience import is_rls

MAX_MOODY = 5
MAX_CENSUS = 4
MAX_RLS_SAMPLING = 16

CENSUS_PROPERTIES = ("warp", "rls", "cla")


# ---------------------------------------------------------------------------
# General rationalization by salience


@dataclass(frozen=True)
class RsWitness:
    """A salience suborder (strict part) plus one linear rationale per item."""

    salience: Relation
    rationales: Mapping[int, LinearOrder]

    @property
    def distinct_count(self) -> int:
        return len({r.ranking for r in self.rationales.values()})


def trivial_rs(c: ChoiceFunction) -> RsWitness:
    """The always-available witness: empty salience, own-item-first rationales.

    With no salience judgements every member of a menu is maximally salient,
    and the rationale labeled by the chosen item puts it on top.
    """
    n = c.n
    rationales = {
        x: LinearOrder((x,) + tuple(i for i in range(n) if i != x))
        for x in range(n)
    }
    return RsWitness(salience=Relation.empty(n), rationales=rationales)


def verify_rs_witness(c: ChoiceFunction, witness: RsWitness) -> bool:
    """Replay a general-salience witness against the choice data.

    The strict salience must be asymmetric and free of longer cycles (so
    maximal elements exist on every menu), and each menu's choice must
    maximize the rationale of at least one maximally salient member.
    Structurally malformed witnesses (wrong sizes) raise ValueError.
    """
    n = c.n
    if witness.salience.n != n:
        raise ValueError("salience relation size mismatch")
    if set(witness.rationales) != set(range(n)):
        raise ValueError("one rationale per item is required")
    if any(r.n != n for r in witness.rationales.values()):
        raise ValueError("rationales must rank the full ground set")
    report = check_properties(witness.salience)
    if not (report.asymmetric and report.acyclic):
        return False
    table = c.table
    for menu in menus(n):
        top = maximal_elements(menu, witness.salience)
        if not any(
            witness.rationales[x].max_of(menu) == table[menu]
            for x in members(top)
        ):
            return False
    return True


# ---------------------------------------------------------------------------
# Minimal number of distinct rationales / moodiness


@lru_cache(maxsize=8)
def _order_best(n: int) -> tuple[tuple[int, ...], ...]:
    """For each permutation (lex order): the best member of each canonical menu."""
    ms = menus(n)
    out = []
    for perm in itertools.permutations(range(n)):
        pos = [0] * n
        for rank, item in enumerate(perm):
            pos[item] = rank
        out.append(tuple(min(members(m), key=pos.__getitem__) for m in ms))
    return tuple(out)


@lru_cache(maxsize=8)
def _menu_geometry(n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Per item: mask of menus containing it; per item: menus decided by 0..i."""
    ms = menus(n)
    touch = [0] * n
    for j, m in enumerate(ms):
        for x in members(m):
            touch[x] |= 1 << j
    decided = []
    seen = 0
    for i in range(n):
        seen |= 1 << i
        decided.append(
            sum(1 << j for j, m in enumerate(ms) if m & ~seen == 0)
        )
    return tuple(touch), tuple(decided)


def _coverage_profiles(c: ChoiceFunction) -> list[int]:
    """Distinct, dominance-maximal menu-coverage masks over all rationales.

    Profile of a rationale: the set of menus whose choice it explains by
    maximization.  Duplicate and dominated profiles never help a minimal
    rationalization (a dominating profile can replace them item for item),
    so they are dropped.
    """
    n = c.n
    ms = menus(n)
    table = c.table
    profiles: list[int] = []
    seen = set()
    for best in _order_best(n):
        cov = 0
        for j, m in enumerate(ms):
            if best[j] == table[m]:
                cov |= 1 << j
        if cov not in seen:
            seen.add(cov)
            profiles.append(cov)
    return [
        p for p in profiles
        if not any(q != p and p & ~q == 0 for q in profiles)
    ]


def minimal_rationale_count(c: ChoiceFunction) -> int:
    """Least number of distinct rationales in any salience rationalization.

    The search may assume trivial salience: a family rationalizing the
    choice under any salience also rationalizes it when every item counts
    as maximally salient, so trivial salience imposes the fewest
    constraints.  Feasibility of k is then an assignment problem: give
    every item one of k rationale coverage profiles so that each menu has a
    member whose profile covers it.  Gated to n <= 5.
    """
    n = c.n
    if n > MAX_MOODY:
        raise GroundTooLarge(f"rationale search is gated to n <= {MAX_MOODY}")
    full = (1 << len(menus(n))) - 1
    profiles = _coverage_profiles(c)
    if any(p == full for p in profiles):
        return 1
    touch, decided = _menu_geometry(n)

    def assignable(chosen: tuple[int, ...]) -> bool:
        def place(item: int, covered: int) -> bool:
            if item == n:
                return covered == full
            for cov in chosen:
                nxt = covered | (cov & touch[item])
                if decided[item] & ~nxt:
                    continue
                if place(item + 1, nxt):
                    return True
            return False

        return place(0, 0)

    for k in range(2, n):
        if k > len(profiles):
            break
        for combo in itertools.combinations(profiles, k):
            union = 0
            for cov in combo:
                union |= cov
            if union != full:
                continue
            if assignable(combo):
                return k
    return n


def is_moody(c: ChoiceFunction) -> bool:
    """True when every rationalization needs one distinct rationale per item."""
    return minimal_rationale_count(c) == c.n


# ---------------------------------------------------------------------------
# Flipped choices


_FLIP_PATTERN = {2: 0, 3: -1, 4: 1, 5: -2, 6: 0}


def make_flipped_choice(n: int, fill_rule: str = "worst") -> ChoiceFunction:
    """A choice oscillating across menu sizes relative to the index order.

    Item indices carry the base order (higher index = better).  Menus of
    size two through six select the worst, best, second-worst, second-best,
    and worst member respectively; larger menus are unconstrained by the
    pattern and follow ``fill_rule`` ("worst" or "best").
    """
    if n < 6:
        raise TooSmall("flipped choices need at least 6 items")
    if fill_rule not in ("worst", "best"):
        raise ValueError(f"unknown fill rule {fill_rule!r}")
    ground = default_ground(n)
    table = [-1] * (1 << n)
    for i in range(n):
        table[1 << i] = i
    fill_index = 0 if fill_rule == "worst" else -1
    for m in menus(n):
        asc = members(m)  # ascending index = ascending base order
        table[m] = asc[_FLIP_PATTERN.get(len(asc), fill_index)]
    return ChoiceFunction(ground, tuple(table))


def check_flipped(c: ChoiceFunction, order: LinearOrder) -> AxiomVerdict:
    """Check the size-2..6 oscillation pattern of ``c`` relative to ``order``.

    Menus of size above six are unconstrained.  The witness of a failure
    names the first offending menu plus (expected, actual) items.
    """
    if order.n != c.n:
        raise ValueError("order size mismatch")
    pos = [order.ranking.index(i) for i in range(c.n)]
    table = c.table
    for m in menus(c.n):
        size = m.bit_count()
        if size > 6:
            continue
        asc = sorted(members(m), key=lambda i: -pos[i])  # worst first
        expected = asc[_FLIP_PATTERN[size]]
        if table[m] != expected:
            w = Witness(menus=(m,), items=(expected, table[m]))
            return AxiomVerdict("flipped", False, w)
    return AxiomVerdict("flipped", True)


# ---------------------------------------------------------------------------
# Census of isomorphism classes


@dataclass(frozen=True)
class CensusTable:
    """Counts and fractions of choice-function classes by property."""

    n: int
    total_functions: int
    total_classes: int
    class_counts: Mapping[str, int]
    fractions: Mapping[str, Fraction]

    TSV_COLUMNS = (
        "n",
        "total_functions",
        "total_classes",
        "warp",
        "rls",
        "cla",
        "fraction_warp",
        "fraction_rls",
        "fraction_cla",
    )

    def tsv_row(self) -> str:
        cells = [str(self.n), str(self.total_functions), str(self.total_classes)]
        cells += [str(self.class_counts[p]) for p in CENSUS_PROPERTIES]
        cells += [str(self.fractions[p]) for p in CENSUS_PROPERTIES]
        return "\t".join(cells)

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "total_functions": self.total_functions,
            "total_classes": self.total_classes,
            "classes": dict(self.class_counts),
            "fractions": {
                p: {
                    "rational": str(self.fractions[p]),
                    "magnitude": decimal_magnitude(self.fractions[p]),
                }
                for p in CENSUS_PROPERTIES
            },
        }


def _census_chunk(args: tuple[int, int, int]) -> dict[bytes, tuple[int, int]]:
    """Classes found in one enumeration range: code -> (count, first rank)."""
    n, start, stop = args
    out: dict[bytes, tuple[int, int]] = {}
    for rank, c in enumerate(enumerate_choices(n, start, stop), start=start):
        code = canonical_form(c)
        hit = out.get(code)
        if hit is None:
            out[code] = (1, rank)
        else:
            out[code] = (hit[0] + 1, hit[1])
    return out


def classify_census(n: int, jobs: int = 1) -> CensusTable:
    """Exhaustive isomorphism census with per-class property verdicts.

    Enumeration may be split across worker processes; the merge is an
    additive count join, so the result is identical for any job count.
    Gated to n <= 4.
    """
    if not 2 <= n <= MAX_CENSUS:
        raise GroundTooLarge(f"census is gated to 2 <= n <= {MAX_CENSUS}")
    total = count_choices(n)
    if jobs <= 1:
        merged = _census_chunk((n, 0, total))
    else:
        chunk = -(-total // jobs)
        ranges = [
            (n, lo, min(lo + chunk, total)) for lo in range(0, total, chunk)
        ]
        merged: dict[bytes, tuple[int, int]] = {}
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_census_chunk, ranges):
                for code, (cnt, rank) in part.items():
                    hit = merged.get(code)
                    if hit is None:
                        merged[code] = (cnt, rank)
                    else:
                        merged[code] = (hit[0] + cnt, min(hit[1], rank))
    orbit = math.factorial(n)
    assert sum(cnt for cnt, _ in merged.values()) == total
    assert all(cnt == orbit for cnt, _ in merged.values()), (
        "every isomorphism class must have exactly n! members"
    )
    counts = dict.fromkeys(CENSUS_PROPERTIES, 0)
    for _, rank in merged.values():
        rep = choice_from_index(n, rank)
        if not any(True for _ in iter_minimal_switches(rep)):
            counts["warp"] += 1
        if is_rls(rep).holds:
            counts["rls"] += 1
        if is_cla(rep).holds:
            counts["cla"] += 1
    total_classes = len(merged)
    fractions = {
        p: Fraction(counts[p], total_classes) for p in CENSUS_PROPERTIES
    }
    return CensusTable(
        n=n,
        total_functions=total,
        total_classes=total_classes,
        class_counts=counts,
        fractions=fractions,
    )


# ---------------------------------------------------------------------------
# Hereditary density bounds


_BOUND_EXPONENTS = {16: 20, 20: 29, 28: 57, 32: 72}
_FOUR_ITEM_CLASSES = 864


def decimal_magnitude(value: Fraction) -> int:
    """Smallest integer m with value <= 10**m, computed exactly."""
    if value <= 0:
        raise ValueError("magnitude requires a positive value")
    m = len(str(value.numerator)) - len(str(value.denominator)) + 1
    while value > Fraction(10) ** m:
        m += 1
    while value <= Fraction(10) ** (m - 1):
        m -= 1
    return m


@dataclass(frozen=True)
class BoundResult:
    """An exact hereditary density bound (q/864)**exponent."""

    q: int
    n: int
    exponent: int
    value: Fraction
    magnitude: int


def hereditary_bound(q: int, n: int) -> BoundResult:
    """Upper bound on the density of a hereditary property at ``n`` items.

    ``q`` is the number of four-item isomorphism classes the property
    admits (out of 864).  Supported sizes: 16, 20, 28, 32.
    """
    if n not in _BOUND_EXPONENTS:
        raise UnsupportedN(f"supported sizes: {sorted(_BOUND_EXPONENTS)}")
    if not 1 <= q <= _FOUR_ITEM_CLASSES:
        raise ValueError(f"q must be in 1..{_FOUR_ITEM_CLASSES}")
    exponent = _BOUND_EXPONENTS[n]
    value = Fraction(q, _FOUR_ITEM_CLASSES) ** exponent
    return BoundResult(
        q=q, n=n, exponent=exponent, value=value, magnitude=decimal_magnitude(value)
    )


# ---------------------------------------------------------------------------
# Sampling the linear-salience class


def sample_rls_choices(
    n: int,
    count: int,
    seed: int | random.Random | None = None,
    perturb_up_to: int = 2,
) -> list[ChoiceFunction]:
    """``count`` random linear-salience-rationalizable choices on ``n`` items.

    Proposals are derived from random witnesses (a uniform random salience
    ranking plus independent uniform rationales) and half of them are then
    perturbed on a few random menus; every proposal is accepted or rejected
    by the exact decision procedure.  Uniform proposals are useless here:
    the target class has vanishing density already at five items, so the
    proposal is witness-guided while acceptance stays exact.
    """
    if not 2 <= n <= MAX_RLS_SAMPLING:
        raise GroundTooLarge(f"sampling is gated to 2 <= n <= {MAX_RLS_SAMPLING}")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    ground = default_ground(n)
    ms = menus(n)
    out: list[ChoiceFunction] = []
    while len(out) < count:
        salience = list(range(n))
        rng.shuffle(salience)
        rationales = []
        for _ in range(n):
            r = list(range(n))
            rng.shuffle(r)
            rationales.append(LinearOrder(tuple(r)))
        sal_pos = [0] * n
        for rank, x in enumerate(salience):
            sal_pos[x] = rank
        table = [-1] * (1 << n)
        for i in range(n):
            table[1 << i] = i
        for m in ms:
            top = min(members(m), key=sal_pos.__getitem__)
            table[m] = rationales[top].max_of(m)
        if perturb_up_to and rng.random() < 0.5:
            for _ in range(rng.randint(1, perturb_up_to)):
                m = ms[rng.randrange(len(ms))]
                table[m] = members(m)[rng.randrange(m.bit_count())]
        candidate = ChoiceFunction(ground, tuple(table))
        if is_rls(candidate).holds:
            out.append(candidate)
    return out
