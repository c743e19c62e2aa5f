"""JSON instance and solution files.

Both formats are plain JSON objects written one key per line, so files diff
cleanly and identical inputs give byte-identical files.  Polynomials are
coefficient lists, lowest degree first.
"""

import json
import sys

import numpy as np

from .field import FieldCtx
from .poly import Poly
from .solver import SolveOutput, expand_nullspace
from .structured import Generators

INSTANCE_FORMAT = "structla-instance"
SOLUTION_FORMAT = "structla-solution"
VERSION = 1


class FormatError(ValueError):
    """A file does not follow the expected layout."""


def _dumps(obj):
    body = ",\n".join(f"  {json.dumps(k)}: {json.dumps(v, separators=(',', ':'))}" for k, v in obj.items())
    return "{\n" + body + "\n}\n"


def _ints(a):
    return [int(t) for t in np.asarray(a, dtype=object).ravel()]


def _grid(A):
    return [_ints(row) for row in np.asarray(A, dtype=object)]


def instance_to_dict(g, v=None):
    d = {
        "format": INSTANCE_FORMAT,
        "version": VERSION,
        "prime": g.field.p,
        "structure": g.structure,
        "m": g.m,
        "n": g.n,
        "alpha": g.alpha,
        "G": _grid(g.G),
        "H": _grid(g.H),
    }
    if g.x is not None:
        d["x"] = _ints(g.x)
    if g.y is not None:
        d["y"] = _ints(g.y)
    if v is not None:
        d["v"] = _ints(v)
    return d


def _need(d, key, kind):
    if key not in d:
        raise FormatError(f"missing field {key!r}")
    val = d[key]
    if kind is int and (not isinstance(val, int) or isinstance(val, bool)):
        raise FormatError(f"field {key!r} must be an integer")
    if kind is list and not isinstance(val, list):
        raise FormatError(f"field {key!r} must be a list")
    if kind is str and not isinstance(val, str):
        raise FormatError(f"field {key!r} must be a string")
    return val


def _int_grid(rows, r, c, key):
    if len(rows) != r or any(not isinstance(row, list) or len(row) != c for row in rows):
        raise FormatError(f"field {key!r} must be a {r}x{c} grid")
    for row in rows:
        for e in row:
            if not isinstance(e, int) or isinstance(e, bool):
                raise FormatError(f"field {key!r} holds a non-integer")
    return np.array(rows, dtype=object).reshape(r, c)


def _int_list(vals, n, key):
    if len(vals) != n or any(not isinstance(e, int) or isinstance(e, bool) for e in vals):
        raise FormatError(f"field {key!r} must list {n} integers")
    return vals


def instance_from_dict(d):
    """(Generators, v or None); entries are reduced modulo the prime."""
    if not isinstance(d, dict) or d.get("format") != INSTANCE_FORMAT:
        raise FormatError("not an instance file")
    F = FieldCtx(_need(d, "prime", int))
    m, n, a = _need(d, "m", int), _need(d, "n", int), _need(d, "alpha", int)
    structure = _need(d, "structure", str)
    G = F.array(_int_grid(_need(d, "G", list), m, a, "G"))
    H = F.array(_int_grid(_need(d, "H", list), n, a, "H"))
    x = _int_list(d["x"], m, "x") if d.get("x") is not None else None
    y = _int_list(d["y"], n, "y") if d.get("y") is not None else None
    g = Generators(structure, G, H, F, x=x, y=y)
    v = F.array(np.array(_int_list(d["v"], m, "v"), dtype=object)) if d.get("v") is not None else None
    return g, v


def solution_to_dict(out, g):
    kernel = expand_nullspace(out, g)
    return {
        "format": SOLUTION_FORMAT,
        "version": VERSION,
        "prime": g.field.p,
        "structure": out.structure,
        "status": "solved" if out.u is not None else "inconsistent",
        "u": None if out.u is None else _ints(out.u),
        "nullity": out.nullity,
        "nullspace": {
            "ell": out.ell,
            "d": [int(t) for t in out.d],
            "t": [int(t) for t in out.t],
            "p": [q.coeffs for q in out.p],
        },
        "kernel_vector": _ints(kernel[0]) if kernel else None,
    }


def solution_from_dict(d, g):
    if not isinstance(d, dict) or d.get("format") != SOLUTION_FORMAT:
        raise FormatError("not a solution file")
    F = g.field
    if _need(d, "prime", int) != F.p:
        raise FormatError("solution and instance use different primes")
    status = _need(d, "status", str)
    if status not in ("solved", "inconsistent"):
        raise FormatError(f"unknown status {status!r}")
    ns = d.get("nullspace")
    if not isinstance(ns, dict):
        raise FormatError("field 'nullspace' must be an object")
    ell = _need(ns, "ell", int)
    ds = _int_list(_need(ns, "d", list), ell, "d")
    ts = _int_list(_need(ns, "t", list), ell, "t")
    ps_raw = _need(ns, "p", list)
    if len(ps_raw) != ell:
        raise FormatError("nullspace lists must have ell entries")
    ps = []
    for q in ps_raw:
        if not isinstance(q, list) or any(not isinstance(e, int) or isinstance(e, bool) for e in q):
            raise FormatError("polynomials must be integer lists")
        ps.append(Poly(q, F))
    u = None
    if status == "solved":
        u = F.array(np.array(_int_list(_need(d, "u", list), g.n, "u"), dtype=object))
    out = SolveOutput(d.get("structure", g.structure), g.n, ell, ps, ds, ts, u)
    return out


def save_json(path, obj):
    text = _dumps(obj)
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def load_json(path):
    with open(path, encoding="utf-8") as fh:
        try:
            return json.load(fh)
        except json.JSONDecodeError as exc:
            raise FormatError(f"{path}: invalid JSON ({exc})") from exc


def save_instance(path, g, v=None):
    save_json(path, instance_to_dict(g, v))


def load_instance(path):
    return instance_from_dict(load_json(path))


def save_solution(path, out, g):
    save_json(path, solution_to_dict(out, g))


def load_solution(path, g):
    return solution_from_dict(load_json(path), g)
