"""Expander classification, witness sets and Diophantine probes for polynomials over Q.

Every function returns plain Python data decoded from the same JSON documents
the `erq` command line prints. Rationals are "p/q" strings.
"""

import json

from . import _core
from ._core import Error, InvariantViolation

__all__ = [
    "Error",
    "InvariantViolation",
    "parse",
    "classify",
    "decompose",
    "recompose",
    "image_size",
    "growth_sweep",
    "fiber_check",
    "sumset",
    "productset",
    "witness",
    "chang",
    "rational_root",
    "heights",
    "curve_points",
    "genus",
    "membership",
    "intersection",
    "pigeonhole",
    "longest_progression",
    "range_probe",
    "squares",
    "record_experiment",
]


def _rationals(values):
    return ",".join(str(v) for v in values)


def parse(text, variables=None):
    return json.loads(_core.parse(text, variables))


def classify(text, variables=None):
    return json.loads(_core.classify(text, variables))


def decompose(text, variables=None):
    return json.loads(_core.decompose(text, variables))


def recompose(certificate):
    """Canonical text of the polynomial a certificate document describes."""
    return _core.recompose(json.dumps(certificate))


def image_size(text, sets, variables=None, threads=1):
    return json.loads(_core.image_size(text, json.dumps(sets), variables, threads))


def growth_sweep(text, sets, ns, variables=None):
    return json.loads(_core.growth_sweep(text, json.dumps(sets), list(ns), variables))


def fiber_check(text, sets, variables=None):
    return json.loads(_core.fiber_check(text, json.dumps(sets), variables))


def sumset(a, b):
    return json.loads(_core.set_op("sumset", json.dumps([a, b])))


def productset(a, b):
    return json.loads(_core.set_op("productset", json.dumps([a, b])))


def witness(text, n, variables=None, literal_sets=False):
    return json.loads(_core.witness(text, n, variables, literal_sets))


def chang(n):
    return json.loads(_core.chang(n))


def rational_root(r, w):
    return json.loads(_core.rational_root(str(r), w))


def heights(height):
    return json.loads(_core.heights(height))


def curve_points(g, w, height, c="1"):
    return json.loads(_core.curve_points(g, w, height, str(c)))


def genus(g):
    return json.loads(_core.genus(g))


def membership(r, generators):
    return json.loads(_core.membership(str(r), _rationals(generators)))


def intersection(g, generators, height):
    return json.loads(_core.intersection(g, _rationals(generators), height))


def pigeonhole(vectors, w):
    return json.loads(_core.pigeonhole(json.dumps(vectors), w))


def longest_progression(values, kind="ap"):
    return json.loads(_core.progression(json.dumps([str(v) for v in values]), kind))


def range_probe(g, bound, kind="ap", domain="integers", shift=None):
    return json.loads(_core.range_probe(g, domain, bound, kind, None if shift is None else str(shift)))


def squares(n):
    return json.loads(_core.squares(n))


def record_experiment(path, entry):
    """Appends one JSON line to the log at `path`; returns its line index."""
    return _core.record_experiment(str(path), json.dumps(entry))
