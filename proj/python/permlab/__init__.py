"""Exact permanents of graph Laplacians and the inequality per(L o L) <= per(L)^2.

Matrices are lists of lists of Python ints. Graphs are spec strings such as
"c5", "k2,3", "g6:Bw", or (n, edges) pairs. Report functions return dicts whose
exact integers are Python ints.
"""

import json
import re

from . import _permlab
from ._permlab import (
    InputClassError,
    ParseError,
    PermlabError,
    SizeLimitError,
    clique_form,
    clique_scalar_holds,
    coalesce,
    cycle_series,
    from_graph6,
    graph_edges,
    hadamard,
    laplacian,
    odd_cycle_gap,
    permanent,
    structural_zero,
    to_graph6,
)

__all__ = [
    "InputClassError",
    "ParseError",
    "PermlabError",
    "SizeLimitError",
    "clique_form",
    "clique_scalar_holds",
    "coalesce",
    "coalescence_identity",
    "cycle_series",
    "diag_multilinearity",
    "from_graph6",
    "graph_edges",
    "hadamard",
    "hadamard_coalescence_identity",
    "laplacian",
    "lieb_bound",
    "odd_cycle_gap",
    "permanent",
    "run_campaign",
    "sign_property",
    "structural_zero",
    "table",
    "to_graph6",
    "verify_graph",
    "verify_matrix",
]

_INT = re.compile(r"-?[0-9]+\Z")
# text fields that may happen to look numeric
_TEXT_KEYS = {"instance_id", "provenance", "graph6", "method", "kind", "generator", "label", "note", "status", "formula"}


def _ints(obj, key=None):
    if isinstance(obj, dict):
        return {k: _ints(v, k) for k, v in obj.items()}
    if isinstance(obj, list):
        return [_ints(v, key) for v in obj]
    if isinstance(obj, str) and key not in _TEXT_KEYS and _INT.match(obj):
        return int(obj)
    return obj


def _load(text):
    return _ints(json.loads(text))


def verify_graph(graph, jobs=1):
    return _load(_permlab.verify_graph_json(graph, jobs))


def verify_matrix(rows, jobs=1):
    return _load(_permlab.verify_matrix_json(rows, jobs))


def coalescence_identity(g1, v1, g2, v2):
    return _load(_permlab.coalescence_identity_json(g1, v1, g2, v2))


def hadamard_coalescence_identity(g1, v1, g2, v2):
    return _load(_permlab.hadamard_coalescence_identity_json(g1, v1, g2, v2))


def diag_multilinearity(rows, i, alpha):
    return _load(_permlab.diag_multilinearity_json(rows, i, alpha))


def sign_property(rows):
    return _load(_permlab.sign_property_json(rows))


def lieb_bound(rows, i):
    return _load(_permlab.lieb_bound_json(rows, i))


def run_campaign(config, jobs=1, raw=False):
    """config is campaign-file text or a dict of the same keys.

    raw=True returns the JSON text unchanged (byte-identical to the CLI's)."""
    if isinstance(config, dict):
        config = "".join(f"{k} = {v}\n" for k, v in config.items())
    text = _permlab.run_campaign_json(config, jobs)
    return text if raw else _load(text)


def table(which, max_n, ryser_max_n=14):
    return _load(_permlab.table_json(which, max_n, ryser_max_n))
