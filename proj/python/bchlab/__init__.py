"""Python front end for the bchlab C++ core."""

import json

from . import _core
from ._core import BchlabError, dim_closed, griesmer, largest_leaders_half

__all__ = [
    "BchlabError",
    "bch_code",
    "claims",
    "coset_leaders",
    "dim_closed",
    "field",
    "griesmer",
    "largest_leaders_half",
    "t_distribution",
    "version",
    "weights",
]

__version__ = _core.version()


def version():
    return _core.version()


def field(q, m):
    return json.loads(_core.field_json(q, m))


def coset_leaders(q, m, lam, members=False):
    return json.loads(_core.leaders_json(q, m, lam, members))


def bch_code(q, m, lam, delta, b=1, hat=False, min_distance=False):
    return json.loads(_core.code_json(q, m, lam, delta, b, hat, min_distance))


def weights(family, q, m, source="closed_form", threads=1):
    """Weight table as {weight: frequency}; frequencies are exact Python ints."""
    raw = json.loads(_core.weights_json(family, q, m, source, threads))
    raw["entries"] = {w: int(f) for w, f in raw["entries"]}
    return raw


def t_distribution(q, m, closed=False, threads=1):
    return json.loads(_core.t_distribution_json(q, m, closed, threads))


def claims(only="", max_field=0, threads=1):
    return json.loads(_core.claims_json(only, max_field, threads))
