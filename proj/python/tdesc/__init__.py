"""Galois descent for split projective toric varieties.

Thin wrappers over the compiled core: inputs may be dicts, JSON strings,
file paths or bundled example names ("dp6", "sign-c2"); results are dicts.
"""

import json
import os

from . import _tdesc

__all__ = ["analyze", "forms", "lattice", "omega", "nef", "h0", "examples", "example", "ParseError"]

ParseError = _tdesc.ParseError


def _text(obj, folder):
    if isinstance(obj, dict):
        return json.dumps(obj)
    if isinstance(obj, str):
        if obj.lstrip().startswith("{"):
            return obj
        if os.path.exists(obj):
            with open(obj) as fh:
                return fh.read()
        for name in (obj, f"{folder}/{obj}", f"{folder}/{obj}.json"):
            if name in _tdesc.examples():
                return _tdesc.example(name)
    raise ValueError(f"cannot interpret {obj!r} as a {folder[:-1]}")


def analyze(fan):
    return json.loads(_tdesc.analyze(_text(fan, "fans")))


def forms(fan, field="real"):
    if isinstance(field, dict):
        return json.loads(_tdesc.forms_with_model(_text(fan, "fans"), json.dumps(field)))
    return json.loads(_tdesc.forms(_text(fan, "fans"), field))


def lattice(op, lat, degree=None, subgroup=None):
    return json.loads(_tdesc.lattice(op, _text(lat, "lattices"), degree, subgroup))


def omega(fan, classes=None):
    return json.loads(_tdesc.omega(_text(fan, "fans"), classes))


def nef(fan):
    return json.loads(_tdesc.nef(_text(fan, "fans")))


def h0(fan, divisor):
    return json.loads(_tdesc.h0(_text(fan, "fans"), list(divisor)))


def examples():
    return list(_tdesc.examples())


def example(name):
    return json.loads(_tdesc.example(name))
