"""JSON input documents and report serialization.

The input format is plain JSON.  Paths are written with arrow names joined
by dots ("x.y.x" is the path x then y then x), relations are objects
mapping path strings to integer coefficients, and module actions are keyed
"generator@degree".  See FORMAT.md at the repository root for the full
layout and worked examples.
"""
from __future__ import annotations

import json

import numpy as np

from .quiver import Path, PathSpaceElement, Quiver
from .algebra import Presentation, build_slices
from .grmod import GradedModule, GradedMorphism


class DocumentError(ValueError):
    """Input document failed to parse; the message names the bad field."""


def _fail(where: str, msg: str):
    raise DocumentError(f"{where}: {msg}")


def parse_path(q: Quiver, text: str, where: str) -> Path:
    names = [t for t in text.split(".") if t]
    if not names:
        _fail(where, "empty path")
    try:
        idxs = [q.arrow_by_name(nm) for nm in names]
    except Exception:
        _fail(where, f"unknown arrow name in {text!r}")
    pa = Path(q.arrow_source(idxs[0]), tuple(idxs))
    if not pa.is_valid_in(q):
        _fail(where, f"arrows do not compose in {text!r}")
    return pa


def parse_relation(q: Quiver, obj, where: str, n: int) -> PathSpaceElement:
    if not isinstance(obj, dict) or not obj:
        _fail(where, "relation must be a non-empty object")
    coeffs = {}
    for text, cv in obj.items():
        pa = parse_path(q, text, f"{where}[{text!r}]")
        if pa.length() != n:
            _fail(where, f"path {text!r} has length {pa.length()}, "
                         f"relations must be homogeneous of degree {n}")
        if not isinstance(cv, int):
            _fail(where, f"coefficient of {text!r} is not an integer")
        coeffs[pa] = cv
    return PathSpaceElement(n, coeffs)


def parse_document(doc: dict, default_modulus: int = 101) -> dict:
    """Validate a raw JSON document into domain objects.

    Returns a dict with keys modulus, quiver, n, relations, presentation,
    window, m, r, modules (raw specs), complexes (raw specs).
    """
    if not isinstance(doc, dict):
        _fail("document", "top level must be an object")
    p = doc.get("modulus", default_modulus)
    if not (isinstance(p, int) and p >= 2):
        _fail("modulus", "must be an integer >= 2")
    nv = doc.get("vertices")
    if not (isinstance(nv, int) and nv >= 1):
        _fail("vertices", "must be a positive integer")
    arrows = doc.get("arrows")
    if not isinstance(arrows, list):
        _fail("arrows", "must be a list of [name, source, target]")
    specs = []
    for i, a in enumerate(arrows):
        if (not isinstance(a, list) or len(a) != 3
                or not isinstance(a[0], str)):
            _fail(f"arrows[{i}]", "expected [name, source, target]")
        if not all(isinstance(v, int) and 0 <= v < nv for v in a[1:]):
            _fail(f"arrows[{i}]", "vertex out of range")
        specs.append((a[0], a[1], a[2]))
    try:
        q = Quiver.make(nv, specs)
    except Exception as e:
        _fail("arrows", str(e))
    n = doc.get("n")
    if not (isinstance(n, int) and n >= 2):
        _fail("n", "must be an integer >= 2")
    rels = [parse_relation(q, r, f"relations[{i}]", n)
            for i, r in enumerate(doc.get("relations", []))]
    window = doc.get("window", [-8 * n, 8 * n])
    if (not isinstance(window, list) or len(window) != 2
            or not all(isinstance(v, int) for v in window)
            or window[0] > window[1]):
        _fail("window", "must be [lo, hi] with lo <= hi")
    m = doc.get("m", 0)
    r = doc.get("r", 1)
    if not (isinstance(m, int) and isinstance(r, int) and r >= 1):
        _fail("m/r", "must be integers with r >= 1")
    pres = Presentation.make(q, n, rels, p)
    return {
        "modulus": p, "quiver": q, "n": n, "relations": rels,
        "presentation": pres, "window": tuple(window), "m": m, "r": r,
        "modules": doc.get("modules", {}) or {},
        "complexes": doc.get("complexes", {}) or {},
    }


def load_document(path: str, default_modulus: int = 101) -> dict:
    try:
        with open(path) as fh:
            raw = json.load(fh)
    except OSError as e:
        raise DocumentError(f"cannot read {path}: {e}")
    except json.JSONDecodeError as e:
        raise DocumentError(f"{path}: invalid JSON at line {e.lineno}, "
                            f"column {e.colno}")
    return parse_document(raw, default_modulus)


def parse_module(spec, algebra, where: str) -> GradedModule:
    """A graded module from {"verts": {...}, "actions": {...}}.

    Action keys are "name@degree" with the generator names of the target
    algebra; matrices are row-indexed by the source degree basis.
    """
    if not isinstance(spec, dict):
        _fail(where, "module spec must be an object")
    verts = {}
    for dk, vs in (spec.get("verts", {}) or {}).items():
        try:
            d = int(dk)
        except ValueError:
            _fail(f"{where}.verts", f"bad degree key {dk!r}")
        if not (isinstance(vs, list)
                and all(isinstance(v, int) for v in vs)):
            _fail(f"{where}.verts[{dk}]", "expected a list of vertices")
        if vs:
            verts[d] = tuple(vs)
    gens = {g.name: gi for gi, g in enumerate(algebra.generators())}
    actions = {}
    for key, mat in (spec.get("actions", {}) or {}).items():
        try:
            name, dk = key.rsplit("@", 1)
            d = int(dk)
        except ValueError:
            _fail(f"{where}.actions", f"bad action key {key!r}")
        if name not in gens:
            _fail(f"{where}.actions[{key}]", f"unknown generator {name!r}")
        a = np.asarray(mat, dtype=np.int64) % algebra.p
        if a.ndim != 2:
            _fail(f"{where}.actions[{key}]", "matrix must be 2-dimensional")
        if a.any():
            actions[(gens[name], d)] = a
    mod = GradedModule(algebra, verts, actions)
    bad = mod.validate()
    if bad:
        _fail(where, f"module is not valid: {bad[0]}")
    return mod


def module_json(mod: GradedModule) -> dict:
    gens = mod.algebra.generators()
    return {
        "verts": {str(d): list(mod.verts_at(d))
                  for d in sorted(mod.degrees())},
        "actions": {f"{gens[gi].name}@{d}": mod.act(gi, d).tolist()
                    for (gi, d) in sorted(mod.actions)},
    }


def morphism_json(f: GradedMorphism) -> dict:
    return {str(d): f.mats[d].tolist() for d in sorted(f.mats)}


def complex_json(c) -> dict:
    return {
        "period": c.period,
        "components": {str(k): module_json(c.component(k))
                       for k in c.positions()},
        "diffs": {str(k): morphism_json(c.diff(k))
                  for k in sorted(c.diffs)},
    }


def presentation_json(pres: Presentation) -> dict:
    q = pres.quiver
    return {
        "modulus": pres.p,
        "vertices": q.vertex_count,
        "arrows": [[q.arrow_name(i), q.arrow_source(i), q.arrow_target(i)]
                   for i in range(q.arrow_count)],
        "n": pres.n,
        "relations": [
            {pa.name_in(q): int(cv) for pa, cv in rel.coeffs.items()}
            for rel in pres.relations
        ],
    }


def algebra_from_document(dom: dict, window_top=None):
    top = window_top if window_top is not None else max(
        abs(dom["window"][0]), abs(dom["window"][1]))
    return build_slices(dom["presentation"], top)


def dump_report(report: dict, path=None) -> str:
    text = json.dumps(report, indent=2, sort_keys=True, default=_coerce)
    if path:
        with open(path, "w") as fh:
            fh.write(text + "\n")
    return text


def _coerce(obj):
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    if isinstance(obj, tuple):
        return list(obj)
    raise TypeError(f"not JSON serializable: {type(obj)!r}")
