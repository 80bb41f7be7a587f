"""Choice file parsing/serialization and witness JSON codecs.

Choice file format (UTF-8 text):

    items: a b c        header; item labels in ground-set order
    a b -> a            one line per menu of size >= 2; chosen item after ->
    # comment           a hash starts a comment anywhere in a line

Every menu of size >= 2 must appear exactly once.  Serialization is
canonical: menus ordered by (size, lexicographic member labels), members of
a line sorted lexicographically, so serialize-parse round-trips are
bit-exact.
"""

from __future__ import annotations

import json
from typing import Any, Iterable

from .attention import CslaWitness, FilterTable
from .core import ChoiceFunction, GroundSet, Menu, make_choice, menus
from .errors import DuplicateMenu, NonMemberChoice, ParseError
from .lab import RsWitness
from .relations import LinearOrder, Relation
from .salience import RlsWitness


def parse_choice_file(text: str) -> ChoiceFunction:
    """Parse a choice file, reporting the offending line on failure.

    Raises:
        ParseError: malformed header or menu line.
        DuplicateMenu: a menu listed twice (at the second listing).
        NonMemberChoice: a chosen item outside its menu.
        MissingMenu: a menu of size >= 2 never listed.
    """
    ground: GroundSet | None = None
    assignments: list[tuple[Menu, int]] = []
    seen: dict[Menu, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ground is None:
            if not line.startswith("items:"):
                raise ParseError("expected 'items:' header", lineno)
            labels = line[len("items:"):].split()
            try:
                ground = GroundSet(tuple(labels))
            except Exception as exc:
                raise ParseError(f"bad header: {exc}", lineno) from None
            continue
        tokens = line.split()
        if tokens.count("->") != 1 or tokens.index("->") != len(tokens) - 2:
            raise ParseError("expected '<members> -> <chosen>'", lineno)
        member_labels, chosen_label = tokens[:-2], tokens[-1]
        if len(member_labels) < 2:
            raise ParseError("menus must list at least two members", lineno)
        if len(set(member_labels)) != len(member_labels):
            raise ParseError("menu lists an item twice", lineno)
        try:
            mask = ground.menu(member_labels)
            chosen = ground.index(chosen_label)
        except KeyError as exc:
            raise ParseError(str(exc.args[0]), lineno) from None
        if mask in seen:
            raise DuplicateMenu(
                f"menu {{{' '.join(sorted(member_labels))}}} already listed "
                f"on line {seen[mask]} (line {lineno})"
            )
        if not mask >> chosen & 1:
            raise NonMemberChoice(
                f"chosen item {chosen_label!r} is not a member (line {lineno})"
            )
        seen[mask] = lineno
        assignments.append((mask, chosen))
    if ground is None:
        raise ParseError("empty file: missing 'items:' header")
    return make_choice(ground, assignments)


def serialize_choice(c: ChoiceFunction) -> str:
    """Canonical text form; see the module docstring for the ordering."""
    lines = ["items: " + " ".join(c.ground.labels)]
    rows = []
    for mask in menus(c.n):
        labels = tuple(sorted(c.ground.menu_labels(mask)))
        rows.append((len(labels), labels, c.ground.labels[c.table[mask]]))
    rows.sort(key=lambda r: (r[0], r[1]))
    for _, labels, chosen in rows:
        lines.append(f"{' '.join(labels)} -> {chosen}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Witness JSON


def _order_to_labels(ground: GroundSet, order: LinearOrder) -> list[str]:
    return [ground.labels[i] for i in order.ranking]


def _order_from_labels(ground: GroundSet, labels: Any) -> LinearOrder:
    if not isinstance(labels, list):
        raise ParseError("order must be a list of labels, best first")
    try:
        ranking = tuple(ground.index(lbl) for lbl in labels)
        return LinearOrder(ranking)
    except (KeyError, ValueError) as exc:
        raise ParseError(f"bad order {labels!r}: {exc}") from None


def _rationales_from_obj(ground: GroundSet, obj: Any) -> dict[int, LinearOrder]:
    if not isinstance(obj, dict):
        raise ParseError("'rationales' must map item labels to orders")
    out = {}
    for lbl, order_labels in obj.items():
        out[ground.index(lbl)] = _order_from_labels(ground, order_labels)
    if set(out) != set(range(ground.n)):
        raise ParseError("'rationales' must cover every item exactly once")
    return out


def rls_witness_to_dict(ground: GroundSet, w: RlsWitness) -> dict:
    out: dict[str, Any] = {}
    if all(len(cls) == 1 for cls in w.salience_classes):
        out["salience"] = [ground.labels[cls[0]] for cls in w.salience_classes]
    else:
        out["salience_classes"] = [
            [ground.labels[i] for i in cls] for cls in w.salience_classes
        ]
    out["rationales"] = {
        ground.labels[i]: _order_to_labels(ground, order)
        for i, order in sorted(w.rationales.items())
    }
    return out


def rls_witness_from_dict(ground: GroundSet, obj: dict) -> RlsWitness:
    if "salience" in obj:
        classes = tuple((ground.index(lbl),) for lbl in obj["salience"])
    elif "salience_classes" in obj:
        classes = tuple(
            tuple(ground.index(lbl) for lbl in cls)
            for cls in obj["salience_classes"]
        )
    else:
        raise ParseError("witness needs 'salience' or 'salience_classes'")
    return RlsWitness(
        salience_classes=classes,
        rationales=_rationales_from_obj(ground, obj.get("rationales")),
    )


def menu_key(ground: GroundSet, mask: Menu) -> str:
    return ",".join(sorted(ground.menu_labels(mask)))


def csla_witness_to_dict(ground: GroundSet, w: CslaWitness) -> dict:
    filt = {
        menu_key(ground, mask): sorted(ground.menu_labels(w.filter.table[mask]))
        for mask in range(1, 1 << ground.n)
    }
    return {
        "rationale": _order_to_labels(ground, w.rationale),
        "filter": filt,
    }


def csla_witness_from_dict(ground: GroundSet, obj: dict) -> CslaWitness:
    if "rationale" not in obj or "filter" not in obj:
        raise ParseError("witness needs 'rationale' and 'filter'")
    order = _order_from_labels(ground, obj["rationale"])
    raw = obj["filter"]
    if not isinstance(raw, dict):
        raise ParseError("'filter' must map menu keys to label lists")
    table = [0] * (1 << ground.n)
    for key, labels in raw.items():
        mask = ground.menu(key.split(","))
        table[mask] = ground.menu(labels)
    missing = [m for m in range(1, 1 << ground.n) if table[m] == 0]
    if missing:
        raise ParseError(
            f"'filter' missing menu {menu_key(ground, missing[0])!r}"
        )
    try:
        filt = FilterTable(ground.n, tuple(table))
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    return CslaWitness(rationale=order, filter=filt)


def relation_pairs(ground: GroundSet, rel: Relation) -> list[list[str]]:
    """Adjacency list of label pairs, sorted lexicographically."""
    pairs = [
        [ground.labels[x], ground.labels[y]] for x, y in rel.pairs()
    ]
    pairs.sort()
    return pairs


def relation_from_pairs(ground: GroundSet, pairs: Iterable) -> Relation:
    idx_pairs = []
    for pair in pairs:
        if not isinstance(pair, (list, tuple)) or len(pair) != 2:
            raise ParseError(f"bad relation pair {pair!r}")
        idx_pairs.append((ground.index(pair[0]), ground.index(pair[1])))
    return Relation.from_pairs(ground.n, idx_pairs)


def rs_witness_to_dict(ground: GroundSet, w: RsWitness) -> dict:
    return {
        "salience_pairs": relation_pairs(ground, w.salience),
        "rationales": {
            ground.labels[i]: _order_to_labels(ground, order)
            for i, order in sorted(w.rationales.items())
        },
    }


def rs_witness_from_dict(ground: GroundSet, obj: dict) -> RsWitness:
    if "salience_pairs" not in obj:
        raise ParseError("witness needs 'salience_pairs'")
    return RsWitness(
        salience=relation_from_pairs(ground, obj["salience_pairs"]),
        rationales=_rationales_from_obj(ground, obj.get("rationales")),
    )


def detect_witness_model(obj: dict) -> str:
    """Infer the witness model from the keys of its JSON object."""
    if "filter" in obj:
        return "csla"
    if "salience_pairs" in obj:
        return "rs"
    if "salience" in obj or "salience_classes" in obj:
        return "rls"
    raise ParseError("cannot infer witness model from keys")


def witness_from_json(ground: GroundSet, text: str, model: str | None = None):
    """Decode a witness JSON document; the model is inferred unless given."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise ParseError("witness document must be a JSON object")
    model = model or detect_witness_model(obj)
    if model == "rls":
        return model, rls_witness_from_dict(ground, obj)
    if model == "csla":
        return model, csla_witness_from_dict(ground, obj)
    if model == "rs":
        return model, rs_witness_from_dict(ground, obj)
    raise ParseError(f"unknown witness model {model!r}")
