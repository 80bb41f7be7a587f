"""Ground sets, menus, choice construction, subchoices, codes, enumeration."""

from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from saliencelab import (
    ChoiceFunction,
    DuplicateMenu,
    GroundSet,
    GroundTooLarge,
    MissingMenu,
    NonMemberChoice,
    canonical_form,
    count_choices,
    default_ground,
    enumerate_choices,
    get_fixture,
    make_choice,
    mask_of,
    members,
    menus,
    relabel,
    sample_choices,
    subchoice,
)
from saliencelab.core import choice_from_index

from conftest import oracle_switch_pairs


def test_ground_set_validation():
    g = GroundSet(("c", "f", "s"))
    assert g.n == 3
    assert g.index("f") == 1
    assert g.menu(["s", "c"]) == 0b101
    assert g.menu_labels(0b101) == ("c", "s")
    with pytest.raises(ValueError):
        GroundSet(("a", "a"))
    with pytest.raises(ValueError):
        GroundSet(("a", "b c"))
    with pytest.raises(GroundTooLarge):
        GroundSet(("a",))
    with pytest.raises(GroundTooLarge):
        GroundSet(tuple(f"i{k}" for k in range(25)))


def test_menus_canonical_order():
    ms = menus(3)
    assert ms == (0b011, 0b101, 0b110, 0b111)
    sizes = [m.bit_count() for m in menus(4)]
    assert sizes == sorted(sizes)
    assert len(menus(4)) == 11


def test_make_choice_luce_raiffa():
    g = GroundSet(("c", "f", "s"))
    c = make_choice(
        g,
        [
            (g.menu("cf"), g.index("c")),
            (g.menu("cs"), g.index("c")),
            (g.menu("fs"), g.index("s")),
            (g.menu("cfs"), g.index("s")),
        ],
    )
    assert c.choose(g.menu("cfs")) == g.index("s")
    assert c.choose(g.menu("c")) == g.index("c")  # singleton is forced
    assert all(m >> c.choose(m) & 1 for m in menus(3))


def test_make_choice_errors():
    g = GroundSet(("c", "f", "s"))
    rows = [
        (g.menu("cf"), 0),
        (g.menu("cs"), 0),
        (g.menu("fs"), 2),
        (g.menu("cfs"), 2),
    ]
    with pytest.raises(MissingMenu, match="c f"):
        make_choice(g, rows[1:])
    with pytest.raises(DuplicateMenu):
        make_choice(g, rows + [rows[0]])
    with pytest.raises(NonMemberChoice):
        make_choice(g, [(g.menu("cs"), g.index("f"))] + rows[:1] + rows[2:])
    with pytest.raises(ValueError):
        make_choice(g, rows + [(g.menu("c"), 0)])


def test_subchoice_of_five_item_fixture_matches_three_item_one():
    thea = get_fixture("fancy_dinner").choice()
    lr = get_fixture("luce_raiffa").choice()
    restricted = subchoice(thea, thea.ground.menu("cfs"))
    assert restricted.ground.labels == lr.ground.labels
    assert restricted.table == lr.table


def test_subchoice_full_menu_is_identity(luce_raiffa):
    full = (1 << luce_raiffa.n) - 1
    again = subchoice(luce_raiffa, full)
    assert again.table == luce_raiffa.table
    with pytest.raises(ValueError):
        subchoice(luce_raiffa, 0b001)


def test_subchoice_preserves_switch_freeness():
    # restrictions of a maximizing choice still maximize the same order
    rng = random.Random(7)
    for _ in range(12):
        ranking = list(range(5))
        rng.shuffle(ranking)
        pos = {x: r for r, x in enumerate(ranking)}
        table = [-1] * 32
        for i in range(5):
            table[1 << i] = i
        for m in menus(5):
            table[m] = min(members(m), key=pos.__getitem__)
        c = ChoiceFunction(default_ground(5), tuple(table))
        assert not oracle_switch_pairs(c)
        for menu in menus(5):
            if menu != (1 << 5) - 1:
                assert not oracle_switch_pairs(subchoice(c, menu))


def test_canonical_form_isomorphic_fixtures():
    a = get_fixture("attraction").choice()
    b = get_fixture("handicap").choice()
    assert canonical_form(a) == canonical_form(b)
    assert a.table != b.table


def test_canonical_form_orbit_structure_n3(all_choices_n3):
    # group the 24 functions into relabeling orbits without canonical codes
    perms = list(itertools.permutations(range(3)))
    orbits: dict[frozenset, list[ChoiceFunction]] = {}
    for c in all_choices_n3:
        orbit = frozenset(relabel(c, p).table for p in perms)
        orbits.setdefault(orbit, []).append(c)
    assert len(orbits) == 4
    assert all(len(v) == 6 for v in orbits.values())
    codes = set()
    for group in orbits.values():
        group_codes = {canonical_form(c) for c in group}
        assert len(group_codes) == 1
        codes |= group_codes
    assert len(codes) == 4


@settings(max_examples=60, deadline=None)
@given(
    index=st.integers(min_value=0, max_value=count_choices(4) - 1),
    perm=st.permutations(range(4)),
)
def test_canonical_form_relabel_invariant(index, perm):
    c = choice_from_index(4, index)
    assert canonical_form(relabel(c, perm)) == canonical_form(c)


def test_canonical_form_gate():
    big = ChoiceFunction(
        default_ground(9),
        tuple(-1 if m == 0 else members(m)[0] for m in range(1 << 9)),
    )
    with pytest.raises(GroundTooLarge):
        canonical_form(big)


def test_enumeration_counts():
    assert count_choices(2) == 2
    assert count_choices(3) == 24
    assert count_choices(4) == 20736
    assert len(list(enumerate_choices(2))) == 2
    assert len({c.table for c in enumerate_choices(3)}) == 24
    with pytest.raises(GroundTooLarge):
        list(enumerate_choices(5))


def test_enumeration_partitioning_is_a_disjoint_cover():
    total = count_choices(3)
    first = [c.table for c in enumerate_choices(3, 0, 10)]
    second = [c.table for c in enumerate_choices(3, 10, total)]
    assert len(first) == 10 and len(second) == total - 10
    combined = first + second
    assert combined == [c.table for c in enumerate_choices(3)]


def test_choice_from_index_matches_enumeration():
    for rank, c in enumerate(enumerate_choices(3)):
        assert choice_from_index(3, rank).table == c.table
    with pytest.raises(ValueError):
        choice_from_index(3, count_choices(3))


def test_sampling_validity_and_determinism():
    a = [c.table for c in sample_choices(6, 25, seed=11)]
    b = [c.table for c in sample_choices(6, 25, seed=11)]
    assert a == b
    for table in a:
        for m in menus(6):
            assert m >> table[m] & 1
    with pytest.raises(GroundTooLarge):
        list(sample_choices(7, 1, seed=0))


def test_mask_helpers():
    assert members(0b1011) == (0, 1, 3)
    assert mask_of([3, 0, 1]) == 0b1011
