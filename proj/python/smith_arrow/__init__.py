"""Exact F_p chain complexes, arrow categories and Smith ideals.

Instances travel as JSON; the helpers below accept dicts or strings and return dicts.
"""

import json

from . import _core
from ._core import ParseError, SmithError, suite_names

__all__ = [
    "ParseError",
    "SmithError",
    "coker",
    "generate",
    "homology",
    "pushout_product",
    "quotient",
    "run_suites",
    "suite_names",
    "tensor",
    "validate",
]


def _text(x):
    return x if isinstance(x, str) else json.dumps(x)


def validate(kind, instance):
    """Return (ok, message) for kind in complex, map, square, dga, smith, module."""
    return _core.validate(kind, _text(instance))


def homology(complex_):
    return _core.homology(_text(complex_))


def quotient(smith):
    return json.loads(_core.quotient(_text(smith)))


def tensor(f, g):
    return json.loads(_core.tensor(_text(f), _text(g)))


def pushout_product(f, g):
    return json.loads(_core.pushout_product(_text(f), _text(g)))


def coker(f):
    return json.loads(_core.coker(_text(f)))


def generate(kind, seed=1, p=2, max_dim=3, lo=-3, hi=3):
    return json.loads(_core.generate(kind, seed, p, max_dim, lo, hi))


def run_suites(config=None, **kw):
    cfg = dict(config or {})
    cfg.update(kw)
    return json.loads(_core.run_suites(json.dumps(cfg)))
