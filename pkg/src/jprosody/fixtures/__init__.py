"""Experimental items shipped as tree files.

``tree1``/``tree2`` are the two initial-lowering sentences and ``boost4N``
the four-noun rhythmic-boost sentence. Each comes with the annotations and
verdict the pipeline is expected to produce.
"""
from __future__ import annotations

import json
from importlib import resources

from ..errors import UnknownFixture
from ..tree import SyntacticTree, parse_tree

FIXTURE_IDS = ("tree1", "tree2", "boost4N")


def fixture_path(fixture_id: str):
    if fixture_id not in FIXTURE_IDS:
        raise UnknownFixture(f"unknown fixture {fixture_id!r}; known: {', '.join(FIXTURE_IDS)}")
    return resources.files(__name__) / f"{fixture_id}.tree"


def load_fixture(fixture_id: str) -> tuple[SyntacticTree, dict]:
    tree = parse_tree(fixture_path(fixture_id).read_text(encoding="utf-8"))
    expectations = json.loads((resources.files(__name__) / "expectations.json").read_text(encoding="utf-8"))
    return tree, expectations[fixture_id]
