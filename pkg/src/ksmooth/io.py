"""JSON formats and built-in space aliases.

Rationals are written as strings ``"p"`` or ``"p/q"``; integers are also
accepted on input.  Floats are rejected.

Space: an alias string (``"linf3"``, ``"linf:3"``, ``"l1:3"``, ``"hexagon"``)
or ``{"kind": "linf" | "l1", "dim": n}``, ``{"kind": "polygon", "vertices": [...]}``,
``{"kind": "custom", "vertices": [...]}``.

Operator: ``{"domain": space, "codomain": space, "matrix": [[...], ...]}`` with
the matrix of shape ``dim(codomain) x dim(domain)``.
"""

from __future__ import annotations

import json
import re
from pathlib import Path
from typing import Union

from . import linalg as la
from .errors import InputError
from .geometry import PolyhedralSpace, space_from_ball, space_hexagon, space_l1, space_linf, space_polygon
from .operators import Operator
from .polytope import Polytope

LINF_DIMS = range(2, 6)
L1_DIMS = range(2, 5)
ALIASES = tuple([f"linf{n}" for n in LINF_DIMS] + [f"l1:{n}" for n in L1_DIMS] + ["hexagon"])

_ALIAS_RE = re.compile(r"^(linf|l1):?(\d+)$")


def resolve_space(spec: Union[str, dict]) -> PolyhedralSpace:
    if isinstance(spec, str):
        name = spec.strip().lower()
        if name == "hexagon":
            return space_hexagon()
        m = _ALIAS_RE.match(name)
        if m:
            kind, n = m.group(1), int(m.group(2))
            dims = LINF_DIMS if kind == "linf" else L1_DIMS
            if n not in dims:
                raise InputError(f"alias {spec!r} outside supported dimensions {dims.start}..{dims.stop - 1}")
            return space_linf(n) if kind == "linf" else space_l1(n)
        raise InputError(f"unknown space alias {spec!r}; known: {', '.join(ALIASES)}")
    if not isinstance(spec, dict):
        raise InputError("space must be an alias string or an object")
    kind = spec.get("kind")
    if kind in ("linf", "l1"):
        n = spec.get("dim")
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise InputError("space 'dim' must be a positive integer")
        return space_linf(n) if kind == "linf" else space_l1(n)
    if kind in ("polygon", "custom"):
        verts = [parse_vector(v) for v in _require(spec, "vertices")]
        if kind == "polygon":
            return space_polygon(verts, spec.get("name"))
        return space_from_ball(Polytope.from_vertices(verts), spec.get("name"))
    raise InputError(f"unknown space kind {kind!r}")


def _require(obj: dict, key: str):
    if key not in obj:
        raise InputError(f"missing field {key!r}")
    return obj[key]


def parse_vector(values) -> la.Vector:
    if isinstance(values, str):
        values = [p for p in values.split(",")]
    if not isinstance(values, (list, tuple)) or not values:
        raise InputError("expected a non-empty list of rationals")
    return tuple(la.parse_rational(v) for v in values)


def format_vector(v) -> list:
    return [la.format_rational(c) for c in v]


def operator_from_json(obj: dict) -> Operator:
    if not isinstance(obj, dict):
        raise InputError("operator file must contain an object")
    x = resolve_space(_require(obj, "domain"))
    y = resolve_space(_require(obj, "codomain"))
    rows = _require(obj, "matrix")
    if not isinstance(rows, list) or not rows:
        raise InputError("'matrix' must be a non-empty list of rows")
    return Operator(x, y, [parse_vector(r) for r in rows])


def operator_to_json(t: Operator, domain=None, codomain=None) -> dict:
    return {
        "domain": domain if domain is not None else _space_ref(t.domain),
        "codomain": codomain if codomain is not None else _space_ref(t.codomain),
        "matrix": [format_vector(r) for r in t.matrix],
    }


def _space_ref(space: PolyhedralSpace):
    if space.name in ALIASES:
        return space.name
    return {"kind": "custom", "vertices": [format_vector(v) for v in space.ball.vertices]}


def polytope_to_json(p: Polytope) -> dict:
    return {
        "dim": p.dim,
        "vertices": [format_vector(v) for v in p.vertices],
        "functionals": [format_vector(f) for f in p.functionals],
    }


def polytope_from_json(obj: dict) -> Polytope:
    if "vertices" in obj:
        return Polytope.from_vertices([parse_vector(v) for v in obj["vertices"]])
    if "functionals" in obj:
        return Polytope.from_functionals([parse_vector(f) for f in obj["functionals"]])
    raise InputError("polytope needs 'vertices' or 'functionals'")


def load_json(path: Union[str, Path]):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc.msg} (line {exc.lineno})") from None


def dumps(obj) -> str:
    """Canonical JSON text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"
