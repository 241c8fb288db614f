"""Python front end for the definite-program answer laboratory.

Thin wrappers over the native module; every call returns plain dicts/lists
decoded from the core's structured output.
"""

import json as _json

from _hlab import (  # noqa: F401
    HlabInconsistencyError,
    HlabParseError,
    HlabPremiseError,
)
import _hlab


def solve(program, query, max_depth=128, max_nodes=2_000_000,
          keep_duplicates=False):
    return _json.loads(
        _hlab.solve(program, query, max_depth, max_nodes, keep_duplicates))


def entails(program, query, max_depth=128, max_nodes=2_000_000):
    return _json.loads(_hlab.entails(program, query, max_depth, max_nodes))


def check(program, query, alphabet="", depth_cap=3, max_depth=128,
          max_nodes=2_000_000):
    return _json.loads(
        _hlab.check(program, query, alphabet, depth_cap, max_depth, max_nodes))


def generalize(program, query):
    return _json.loads(_hlab.generalize(program, query))


def aliens(program, query):
    return _json.loads(_hlab.aliens(program, query))


def model(program, alphabet="", depth_cap=3):
    return _json.loads(_hlab.model(program, alphabet, depth_cap))


def counterexample(occurring, alphabet, query):
    return _json.loads(_hlab.counterexample(occurring, alphabet, query))


def fuzz(property="theorem1", cases=100, seed=1, record_cases=False):
    return _json.loads(_hlab.fuzz(property, cases, seed, record_cases))


__all__ = [
    "solve", "entails", "check", "generalize", "aliens", "model",
    "counterexample", "fuzz", "HlabParseError", "HlabPremiseError",
    "HlabInconsistencyError",
]
