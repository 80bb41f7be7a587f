"""General-salience witnesses, moodiness, flipped choices, census, bounds."""

from __future__ import annotations

import itertools
import json
import random
from fractions import Fraction

import pytest

from saliencelab import (
    GroundTooLarge,
    LinearOrder,
    Relation,
    RsWitness,
    TooSmall,
    UnsupportedN,
    check_flipped,
    classify_census,
    decimal_magnitude,
    find_minimal_switches,
    get_fixture,
    hereditary_bound,
    is_moody,
    is_rls,
    make_flipped_choice,
    maximal_elements,
    menus,
    minimal_rationale_count,
    members,
    relabel,
    sample_choices,
    sample_rls_choices,
    trivial_rs,
    verify_rs_witness,
)
from saliencelab.fileio import rs_witness_from_dict


def test_trivial_rs_shape_and_replay(luce_raiffa, acyclic_salience):
    for c in (luce_raiffa, acyclic_salience):
        w = trivial_rs(c)
        assert w.salience.is_empty()
        assert w.distinct_count == c.n
        for x, order in w.rationales.items():
            assert order.ranking[0] == x
        assert verify_rs_witness(c, w)


def test_trivial_rs_replay_on_random_data():
    rng = random.Random(41)
    for n in (3, 4, 5):
        for c in sample_choices(n, 80, rng):
            assert verify_rs_witness(c, trivial_rs(c))


def test_published_five_item_witness_replays(fancy_dinner):
    fixture = get_fixture("fancy_dinner")
    w = rs_witness_from_dict(fancy_dinner.ground, fixture.rs_witness)
    assert verify_rs_witness(fancy_dinner, w)
    assert w.distinct_count == 4  # two items share one rationale


def test_tampered_five_item_witness_fails(fancy_dinner):
    fixture = get_fixture("fancy_dinner")
    broken = json.loads(json.dumps(fixture.rs_witness))
    broken["rationales"]["w"] = list(reversed(broken["rationales"]["w"]))
    w = rs_witness_from_dict(fancy_dinner.ground, broken)
    assert not verify_rs_witness(fancy_dinner, w)


def test_cyclic_salience_is_not_a_witness(luce_raiffa):
    w = trivial_rs(luce_raiffa)
    cyc = Relation.from_pairs(3, [(0, 1), (1, 2), (2, 0)])
    assert not verify_rs_witness(luce_raiffa, RsWitness(cyc, w.rationales))
    two = Relation.from_pairs(3, [(0, 1), (1, 0)])
    assert not verify_rs_witness(luce_raiffa, RsWitness(two, w.rationales))


def test_rs_witness_structural_validation(luce_raiffa):
    w = trivial_rs(luce_raiffa)
    with pytest.raises(ValueError):
        verify_rs_witness(luce_raiffa, RsWitness(Relation.empty(4), w.rationales))
    with pytest.raises(ValueError):
        verify_rs_witness(luce_raiffa, RsWitness(w.salience, {0: LinearOrder((0, 1, 2))}))


# ---------------------------------------------------------------------------
# minimal rationale count


def _direct_min_count_n3(c) -> int:
    """Search every salience suborder and every rationale family outright."""
    orders = [LinearOrder(p) for p in itertools.permutations(range(3))]
    arrows = [(0, 1), (0, 2), (1, 2)]
    ms = menus(3)
    best = 3
    for states in itertools.product((0, 1, 2), repeat=3):
        pairs = []
        for (x, y), state in zip(arrows, states):
            if state == 1:
                pairs.append((x, y))
            elif state == 2:
                pairs.append((y, x))
        rel = Relation.from_pairs(3, pairs)
        if {(0, 1), (1, 2), (2, 0)} <= set(pairs) or {(1, 0), (2, 1), (0, 2)} <= set(pairs):
            continue  # cyclic strict part: not a salience suborder
        tops = {m: members(maximal_elements(m, rel)) for m in ms}
        for family in itertools.product(range(6), repeat=3):
            ok = all(
                any(orders[family[x]].max_of(m) == c.table[m] for x in tops[m])
                for m in ms
            )
            if ok:
                best = min(best, len(set(family)))
                if best == 1:
                    return 1
    return best


def test_minimal_count_matches_direct_search_n3(all_choices_n3):
    for c in all_choices_n3:
        assert minimal_rationale_count(c) == _direct_min_count_n3(c)


def test_minimal_count_on_fixtures(luce_raiffa):
    assert minimal_rationale_count(luce_raiffa) == 2
    assert minimal_rationale_count(get_fixture("acyclic_salience").choice()) == 2


def test_switch_free_choices_need_one_rationale():
    rng = random.Random(42)
    seen = 0
    for c in sample_choices(4, 200, rng):
        k = minimal_rationale_count(c)
        if find_minimal_switches(c):
            assert k >= 2
        else:
            assert k == 1
            seen += 1
    assert seen > 0


def test_no_moody_choice_on_three_items(all_choices_n3):
    counts = {minimal_rationale_count(c) for c in all_choices_n3}
    assert counts == {1, 2}
    assert not any(is_moody(c) for c in all_choices_n3)


def test_minimal_count_isomorphism_invariant():
    rng = random.Random(43)
    perms = list(itertools.permutations(range(4)))
    for c in sample_choices(4, 40, rng):
        k = minimal_rationale_count(c)
        for p in rng.sample(perms, 4):
            assert minimal_rationale_count(relabel(c, p)) == k


def test_moody_gate():
    with pytest.raises(GroundTooLarge):
        minimal_rationale_count(next(iter(sample_choices(6, 1, seed=0))))


# ---------------------------------------------------------------------------
# flipped choices


def test_flipped_pattern_values():
    c = make_flipped_choice(6)
    full = (1 << 6) - 1
    assert c.table[full] == 0  # six items: worst again
    for m in menus(6):
        asc = members(m)
        expected = {2: asc[0], 3: asc[-1], 4: asc[1], 5: asc[-2], 6: asc[0]}[len(asc)]
        assert c.table[m] == expected


def test_flipped_fill_rules():
    worst = make_flipped_choice(7, "worst")
    best = make_flipped_choice(7, "best")
    full = (1 << 7) - 1
    assert worst.table[full] == 0
    assert best.table[full] == 6
    with pytest.raises(ValueError):
        make_flipped_choice(7, "median")


def test_flipped_too_small():
    with pytest.raises(TooSmall):
        make_flipped_choice(5)


def test_flipped_round_trip_and_fill_freedom():
    base = LinearOrder(tuple(reversed(range(8))))
    for fill in ("worst", "best"):
        c = make_flipped_choice(8, fill)
        assert check_flipped(c, base).holds  # sizes above six are free


def test_flipped_perturbation_is_caught():
    c = make_flipped_choice(6)
    table = list(c.table)
    target = next(m for m in menus(6) if m.bit_count() == 4)
    asc = members(target)
    table[target] = asc[2]  # pattern demands asc[1]
    from saliencelab import ChoiceFunction

    broken = ChoiceFunction(c.ground, tuple(table))
    verdict = check_flipped(broken, LinearOrder(tuple(reversed(range(6)))))
    assert not verdict.holds
    assert verdict.witness.menus == (target,)
    assert verdict.witness.items == (asc[1], asc[2])


def test_flipped_fails_for_maximizers():
    order = LinearOrder(tuple(reversed(range(6))))
    table = [-1] * (1 << 6)
    for i in range(6):
        table[1 << i] = i
    for m in menus(6):
        table[m] = order.max_of(m)
    from saliencelab import ChoiceFunction, default_ground

    maximizer = ChoiceFunction(default_ground(6), tuple(table))
    assert not check_flipped(maximizer, order).holds


# ---------------------------------------------------------------------------
# census and bounds


def test_census_two_items():
    t = classify_census(2)
    assert t.total_functions == 2
    assert t.total_classes == 1
    assert t.class_counts == {"warp": 1, "rls": 1, "cla": 1}
    assert t.fractions["warp"] == Fraction(1)


def test_census_three_items():
    t = classify_census(3)
    assert t.total_functions == 24
    assert t.total_classes == 4
    assert t.class_counts == {"warp": 1, "rls": 3, "cla": 4}
    assert t.fractions == {
        "warp": Fraction(1, 4),
        "rls": Fraction(3, 4),
        "cla": Fraction(1),
    }


def test_census_parallel_merge_is_deterministic():
    assert classify_census(3, jobs=3) == classify_census(3, jobs=1)


def test_census_four_items_stable_under_partitioning():
    assert classify_census(4, jobs=2) == classify_census(4, jobs=1)


def test_census_gate():
    with pytest.raises(GroundTooLarge):
        classify_census(5)


def test_census_tsv_row():
    t = classify_census(3)
    assert t.tsv_row() == "3\t24\t4\t1\t3\t4\t1/4\t3/4\t1"


def test_decimal_magnitude_units():
    assert decimal_magnitude(Fraction(1)) == 0
    assert decimal_magnitude(Fraction(1, 10)) == -1
    assert decimal_magnitude(Fraction(1, 1000)) == -3
    assert decimal_magnitude(Fraction(3)) == 1
    assert decimal_magnitude(Fraction(10)) == 1
    assert decimal_magnitude(Fraction(5, 108)) == -1
    with pytest.raises(ValueError):
        decimal_magnitude(Fraction(0))


def test_hereditary_bound_exact_values():
    b = hereditary_bound(40, 16)
    assert b.exponent == 20
    assert b.value == Fraction(5, 108) ** 20
    assert b.magnitude == -26
    assert hereditary_bound(1, 32).magnitude == -211


def test_hereditary_bound_errors():
    with pytest.raises(UnsupportedN):
        hereditary_bound(40, 17)
    with pytest.raises(ValueError):
        hereditary_bound(0, 16)
    with pytest.raises(ValueError):
        hereditary_bound(900, 16)


# ---------------------------------------------------------------------------
# sampling


def test_sample_rls_choices_are_rls_and_deterministic():
    first = sample_rls_choices(5, 30, seed=44)
    second = sample_rls_choices(5, 30, seed=44)
    assert [c.table for c in first] == [c.table for c in second]
    for c in first:
        assert is_rls(c).holds
    assert len({c.table for c in first}) > 1


def test_sample_rls_gate():
    with pytest.raises(GroundTooLarge):
        sample_rls_choices(17, 1, seed=0)
