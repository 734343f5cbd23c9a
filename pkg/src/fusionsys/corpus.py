"""The checked-in verification corpus: (registry group, prime) pairs."""

from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources

from .config import Caps, DEFAULT_CAPS
from .fusion import FusionSystem, fusion_system_of_group
from .groups import FiniteGroup, Subgroup, sylow_subgroup
from .registry import named_group


@lru_cache(maxsize=1)
def corpus_entries() -> tuple:
    """(name, prime) pairs from the packaged manifest."""
    text = resources.files("fusionsys.data").joinpath("corpus.json").read_text()
    data = json.loads(text)
    return tuple((e["group"], e["prime"]) for e in data["entries"])


def corpus_group(name: str) -> FiniteGroup:
    return named_group(name)


@lru_cache(maxsize=None)
def corpus_sylow(name: str, p: int) -> Subgroup:
    return sylow_subgroup(named_group(name), p)


@lru_cache(maxsize=None)
def corpus_fusion(name: str, p: int) -> FusionSystem:
    G = named_group(name)
    return fusion_system_of_group(G, corpus_sylow(name, p), p)
