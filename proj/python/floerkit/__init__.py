"""Knot Floer homology and integer surgery calculator."""

import json
import os

from . import _core
from ._core import DomainError, InternalError, SchemaError

__all__ = ["hfk", "surgery", "diagram", "h1", "table", "corpus", "SchemaError", "DomainError", "InternalError"]


def _arg(doc):
    if isinstance(doc, (dict, list)):
        return json.dumps(doc)
    return os.fspath(doc)


def hfk(spec):
    """Knot invariants of a knot spec (path, JSON text or dict)."""
    return json.loads(_core.hfk(_arg(spec)))


def surgery(spec, n, verify=False, truncation=None, window_slack=None):
    """HF^- of n-surgery on a knot spec, one entry per spin^c class."""
    return json.loads(_core.surgery(_arg(spec), n, verify, truncation, window_slack))


def diagram(doc):
    """Chain complex and invariants of a (1,1)-diagram."""
    return json.loads(_core.diagram(_arg(doc)))


def h1(matrix):
    """First homology of the manifold presented by an integer matrix."""
    return json.loads(_core.h1(_arg(matrix)))


def table(result):
    """Human-readable rendering of a result dict."""
    return _core.table(json.dumps(result))


def corpus():
    """Runs the built-in regression examples."""
    return _core.corpus()
