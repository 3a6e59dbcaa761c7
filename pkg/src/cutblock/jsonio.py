"""Canonical JSON: sorted keys, tight separators, trailing newline.

Every file and stdout payload goes through dumps_canonical, which is what
makes repeated runs bytewise identical.
"""

import json

from .projgeom import PointSet


def dumps_canonical(obj):
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def load_pointset(path):
    """A PointSet from either a bare point-set file or a construction report."""
    with open(path, "r", encoding="utf-8") as fh:
        obj = json.load(fh)
    if "pointset" in obj:
        obj = obj["pointset"]
    return PointSet.from_jsonable(obj)


def write(path, obj):
    data = dumps_canonical(obj)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(data)
    return data
