"""Built-in fixture corpus: classic choice anomalies with known verdicts.

Each fixture bundles a choice file payload with the verdict map it is known
to satisfy, so the corpus doubles as golden data for the axiom checkers.
The expected keys use the same axiom ids as the checkers (warp, warp_s,
weak_warp, always_chosen, expansion_gamma, rls, cla); fixtures carrying a
general-salience witness also store it for replay.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .core import ChoiceFunction
from .fileio import parse_choice_file


@dataclass(frozen=True)
class Fixture:
    fixture_id: str
    description: str
    choice_text: str
    expected: Mapping[str, bool]
    rs_witness: dict | None = field(default=None)

    def choice(self) -> ChoiceFunction:
        return parse_choice_file(self.choice_text)


_FIXTURES = (
    Fixture(
        fixture_id="luce_raiffa",
        description=(
            "Dinner choice where an exotic dish on the menu signals kitchen "
            "quality: steak wins only once frog's legs are offered"
        ),
        choice_text=(
            "items: c f s\n"
            "c f -> c\n"
            "c s -> c\n"
            "f s -> s\n"
            "c f s -> s\n"
        ),
        expected={"warp": False, "warp_s": True, "always_chosen": False, "rls": True},
    ),
    Fixture(
        fixture_id="fancy_dinner",
        description=(
            "Five-dish restaurant choice explained by an incomplete salience "
            "order (two incomparable mid-tier dishes) with four rationales"
        ),
        choice_text=(
            "items: c f p s w\n"
            "c f -> c\n"
            "c p -> c\n"
            "c s -> c\n"
            "c w -> w\n"
            "f p -> p\n"
            "f s -> s\n"
            "f w -> w\n"
            "p s -> p\n"
            "p w -> p\n"
            "s w -> s\n"
            "c f p -> p\n"
            "c f s -> s\n"
            "c f w -> w\n"
            "c p s -> c\n"
            "c p w -> p\n"
            "c s w -> s\n"
            "f p s -> s\n"
            "f p w -> p\n"
            "f s w -> s\n"
            "p s w -> p\n"
            "c f p s -> c\n"
            "c f p w -> p\n"
            "c f s w -> s\n"
            "c p s w -> p\n"
            "f p s w -> p\n"
            "c f p s w -> p\n"
        ),
        expected={"warp": False},
        rs_witness={
            "salience_pairs": [
                ["f", "c"], ["f", "s"],
                ["p", "c"], ["p", "s"],
                ["w", "c"], ["w", "f"], ["w", "p"], ["w", "s"],
            ],
            "rationales": {
                "c": ["c", "s", "w", "p", "f"],
                "s": ["c", "s", "w", "p", "f"],
                "f": ["w", "s", "p", "c", "f"],
                "p": ["w", "c", "p", "s", "f"],
                "w": ["p", "s", "w", "c", "f"],
            },
        },
    ),
    Fixture(
        fixture_id="acyclic_salience",
        description=(
            "Binary choices follow one strict ranking but the worst item is "
            "picked from the full menu; revealed salience is acyclic yet "
            "not asymmetric"
        ),
        choice_text=(
            "items: x y z\n"
            "x y -> x\n"
            "x z -> x\n"
            "y z -> y\n"
            "x y z -> z\n"
        ),
        expected={"warp": False, "rls": False, "cla": True},
    ),
    Fixture(
        fixture_id="attraction",
        description=(
            "Decoy effect: adding a dominated third option flips the binary "
            "preference toward the dominating good"
        ),
        choice_text=(
            "items: x y z\n"
            "x y -> y\n"
            "x z -> x\n"
            "y z -> z\n"
            "x y z -> x\n"
        ),
        expected={"warp": False, "rls": True},
    ),
    Fixture(
        fixture_id="compromise",
        description=(
            "Compromise effect: the mid-quality good is taken whenever a "
            "higher-quality option frames it as the intermediate choice"
        ),
        choice_text=(
            "items: w x y z\n"
            "w x -> x\n"
            "w y -> y\n"
            "w z -> z\n"
            "x y -> x\n"
            "x z -> x\n"
            "y z -> y\n"
            "w x y -> x\n"
            "w x z -> x\n"
            "w y z -> y\n"
            "x y z -> y\n"
            "w x y z -> y\n"
        ),
        expected={"rls": True},
    ),
    Fixture(
        fixture_id="handicap",
        description=(
            "Handicap avoidance: the subject masks the real motive behind a "
            "reported preference reversal; isomorphic to the decoy data"
        ),
        choice_text=(
            "items: x y z\n"
            "x y -> x\n"
            "x z -> z\n"
            "y z -> y\n"
            "x y z -> y\n"
        ),
        expected={"rls": True},
    ),
    Fixture(
        fixture_id="shortlist",
        description=(
            "Sequentially shortlistable behavior (expansion and weak WARP "
            "hold) whose revealed salience has a two-cycle"
        ),
        choice_text=(
            "items: w x y z\n"
            "w x -> w\n"
            "w y -> y\n"
            "w z -> z\n"
            "x y -> x\n"
            "x z -> z\n"
            "y z -> y\n"
            "w x y -> w\n"
            "w x z -> z\n"
            "w y z -> y\n"
            "x y z -> x\n"
            "w x y z -> w\n"
        ),
        expected={
            "weak_warp": True,
            "expansion_gamma": True,
            "warp_s": False,
            "rls": False,
        },
    ),
    Fixture(
        fixture_id="weak_warp_violation",
        description=(
            "Linear-salience-rationalizable behavior that breaks weak WARP, "
            "so shortlisting cannot explain it"
        ),
        choice_text=(
            "items: w x y z\n"
            "w x -> w\n"
            "w y -> y\n"
            "w z -> z\n"
            "x y -> y\n"
            "x z -> x\n"
            "y z -> z\n"
            "w x y -> y\n"
            "w x z -> z\n"
            "w y z -> y\n"
            "x y z -> x\n"
            "w x y z -> y\n"
        ),
        expected={"weak_warp": False, "warp_s": True, "rls": True},
    ),
)


def builtin_fixtures() -> tuple[Fixture, ...]:
    """The eight bundled fixtures, in corpus order."""
    return _FIXTURES


def get_fixture(fixture_id: str) -> Fixture:
    for f in _FIXTURES:
        if f.fixture_id == fixture_id:
            return f
    raise KeyError(f"unknown fixture {fixture_id!r}")
