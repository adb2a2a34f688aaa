"""Hall subgroups of permutation groups: E, C and D verdicts, the chief-series reduction and the oracle."""

import json
from pathlib import Path

from . import _core
from ._core import BudgetExceeded, PermGroup, zoo_group, zoo_names

__all__ = [
    "BudgetExceeded",
    "PermGroup",
    "zoo_group",
    "zoo_names",
    "group",
    "analyze",
    "reduce",
    "k_induced",
    "find_hall",
    "example_gl52",
    "run_corpus",
    "replay_trace",
    "CORPUS",
]

CORPUS = Path(__file__).with_name("corpus.json")


def _pi(pi):
    return pi if isinstance(pi, str) else ",".join(str(p) for p in pi)


def group(spec):
    """A zoo name, a PermGroup, or a (degree, generators) pair."""
    if isinstance(spec, PermGroup):
        return spec
    if isinstance(spec, str):
        return zoo_group(spec)
    degree, gens = spec
    return PermGroup(degree, gens)


def analyze(g, pi, **kw):
    return json.loads(_core.analyze(group(g), _pi(pi), **kw))


def reduce(g, pi, compare_oracle=False, **kw):
    return json.loads(_core.reduce(group(g), _pi(pi), compare_oracle, **kw))


def k_induced(g, normal, pi, seed=1):
    return json.loads(_core.k_induced(group(g), group(normal), _pi(pi), seed))


def find_hall(g, pi, seed=1):
    return _core.find_hall(group(g), _pi(pi), seed)


def example_gl52():
    return json.loads(_core.example_gl52())


def run_corpus(manifest=None, jobs=1, seed=1):
    return json.loads(_core.run_corpus(str(manifest or CORPUS), jobs, seed))


def replay_trace(trace):
    """Empty string when the serialized trace's order arithmetic checks out."""
    return _core.replay_trace(trace if isinstance(trace, str) else json.dumps(trace))
