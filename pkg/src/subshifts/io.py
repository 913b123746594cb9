"""Reading and writing the JSON file formats."""
from __future__ import annotations

import json
import os

from .graphs import graph_from_dict
from .groups import Group, group_from_dict
from .patterns import Pattern


def load_json(source):
    """Parse a path to a JSON file, or an inline JSON string."""
    if isinstance(source, (dict, list)):
        return source
    if os.path.exists(source):
        with open(source, encoding="utf-8") as fh:
            return json.load(fh)
    try:
        return json.loads(source)
    except json.JSONDecodeError:
        raise FileNotFoundError(f"no such file: {source}") from None


def dumps(obj) -> str:
    return json.dumps(obj, ensure_ascii=False, indent=1)


def load_group(source) -> Group:
    d = load_json(source)
    if "group" in d and "kind" not in d:
        d = d["group"]
    return group_from_dict(d)


def load_presentation(source):
    """An SftPresentation, SoficPresentation or ArrowSft, by the keys present."""
    from .bounded_actions import ArrowSft
    from .sft.presentation import SftPresentation, SoficPresentation

    d = load_json(source)
    if "arrows" in d:
        return ArrowSft.from_dict(d)
    if "local_map" in d:
        return SoficPresentation.from_dict(d)
    return SftPresentation.from_dict(d)


def load_graph(source):
    d = load_json(source)
    kind = d.get("kind")
    if kind in ("zd", "free", "product") or (kind == "finite" and "table" in d):
        # a bare group spec stands for its Cayley graph
        d = {"kind": "cayley", "group": d}
    return graph_from_dict(d)


def load_window(source, group: Group) -> Pattern:
    d = load_json(source)
    cells = d["cells"] if isinstance(d, dict) else d
    return Pattern.from_mapping(group, {group.element_from_json(g): int(v) for g, v in cells})


def window_to_json(p: Pattern) -> dict:
    return {"cells": p.to_json()}
