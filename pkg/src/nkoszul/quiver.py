"""Finite quivers, path enumeration and the canonical path pairing.

Composition is left-to-right: the path ``p * q`` means "p then q" and needs
``target(p) == source(q)``.  The canonical order on paths of a fixed length
is lexicographic by arrow index sequence (trivial paths ordered by vertex);
that order is used everywhere as the coordinate order of path spaces.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache


class QuiverError(ValueError):
    pass


@dataclass(frozen=True)
class Quiver:
    vertex_count: int
    arrows: tuple  # of (name, source, target)

    def __post_init__(self):
        names = set()
        for name, s, t in self.arrows:
            if not (0 <= s < self.vertex_count and 0 <= t < self.vertex_count):
                raise QuiverError(f"arrow {name}: vertex out of range")
            if name in names:
                raise QuiverError(f"duplicate arrow name {name!r}")
            names.add(name)

    @staticmethod
    def make(vertex_count: int, arrows) -> "Quiver":
        return Quiver(vertex_count, tuple((str(n), int(s), int(t)) for n, s, t in arrows))

    @property
    def arrow_count(self) -> int:
        return len(self.arrows)

    def arrow_name(self, i: int) -> str:
        return self.arrows[i][0]

    def arrow_source(self, i: int) -> int:
        return self.arrows[i][1]

    def arrow_target(self, i: int) -> int:
        return self.arrows[i][2]

    def arrow_by_name(self, name: str) -> int:
        for i, (n, _, _) in enumerate(self.arrows):
            if n == name:
                return i
        raise QuiverError(f"unknown arrow {name!r}")

    def opposite(self) -> "Quiver":
        return Quiver(self.vertex_count,
                      tuple((n, t, s) for n, s, t in self.arrows))


@dataclass(frozen=True)
class Path:
    """A path in a quiver: a composable arrow index sequence.

    A trivial path is the empty sequence plus its vertex.
    """

    source: int
    arrows: tuple

    def length(self) -> int:
        return len(self.arrows)

    def target_in(self, q: Quiver) -> int:
        if not self.arrows:
            return self.source
        return q.arrow_target(self.arrows[-1])

    def is_valid_in(self, q: Quiver) -> bool:
        v = self.source
        for a in self.arrows:
            if q.arrow_source(a) != v:
                return False
            v = q.arrow_target(a)
        return True

    def compose(self, other: "Path", q: Quiver) -> "Path":
        if self.target_in(q) != other.source:
            raise QuiverError("paths do not compose")
        return Path(self.source, self.arrows + other.arrows)

    def name_in(self, q: Quiver) -> str:
        if not self.arrows:
            return f"e{self.source}"
        return ".".join(q.arrow_name(a) for a in self.arrows)


def trivial_path(v: int) -> Path:
    return Path(v, ())


def arrow_path(q: Quiver, i: int) -> Path:
    return Path(q.arrow_source(i), (i,))


def enumerate_paths(q: Quiver, k: int) -> list:
    """All paths of length k in canonical (lexicographic) order."""
    if k < 0:
        raise QuiverError("negative path length")
    return list(_enumerate_paths_cached(q, k))


@lru_cache(maxsize=None)
def _enumerate_paths_cached(q: Quiver, k: int) -> tuple:
    if k == 0:
        return tuple(trivial_path(v) for v in range(q.vertex_count))
    if k == 1:
        return tuple(arrow_path(q, i) for i in range(q.arrow_count))
    out = []
    for p in _enumerate_paths_cached(q, k - 1):
        t = p.target_in(q)
        for i in range(q.arrow_count):
            if q.arrow_source(i) == t:
                out.append(Path(p.source, p.arrows + (i,)))
    # extending lex-ordered prefixes by ascending last arrow preserves the
    # lexicographic order on full sequences
    return tuple(out)


def path_index(q: Quiver, k: int) -> dict:
    return {p: i for i, p in enumerate(_enumerate_paths_cached(q, k))}


def opposite_path(p: Path, q: Quiver) -> Path:
    """The reversed path in the opposite quiver (same arrow indices)."""
    return Path(p.target_in(q), tuple(reversed(p.arrows)))


class PathSpaceElement:
    """A homogeneous element of KQ_k: a path -> coefficient map."""

    def __init__(self, degree: int, coeffs=None):
        self.degree = degree
        self.coeffs = {}
        if coeffs:
            for path, c in coeffs.items():
                if path.length() != degree:
                    raise QuiverError("path length does not match degree")
                if c:
                    self.coeffs[path] = c

    def reduced(self, p: int) -> "PathSpaceElement":
        return PathSpaceElement(
            self.degree, {pa: c % p for pa, c in self.coeffs.items() if c % p})

    def vector(self, q: Quiver, p: int):
        import numpy as np
        idx = path_index(q, self.degree)
        v = np.zeros(len(idx), dtype=np.int64)
        for path, c in self.coeffs.items():
            if path not in idx:
                raise QuiverError(f"path {path} not in quiver")
            v[idx[path]] = c % p
        return v

    def opposite(self, q: Quiver) -> "PathSpaceElement":
        return PathSpaceElement(
            self.degree,
            {opposite_path(path, q): c for path, c in self.coeffs.items()})

    def __repr__(self):
        return f"PathSpaceElement(deg={self.degree}, {self.coeffs})"


def pairing(u: PathSpaceElement, v: PathSpaceElement, q: Quiver, p: int) -> dict:
    """Canonical pairing KQ_k^op x KQ_k -> KQ_0.

    <p^o, q> = delta_{p,q} e_{t(p)}; returns a vertex -> scalar map with zero
    entries dropped.  ``u`` lives over the opposite quiver of ``q``'s quiver.
    """
    if u.degree != v.degree:
        raise QuiverError("pairing of elements of different degrees")
    qop = q.opposite()
    out: dict = {}
    for w, cu in u.coeffs.items():
        # w is a path in Q^op; its opposite is the matching path in Q
        orig = opposite_path(w, qop)
        cv = v.coeffs.get(orig)
        if cv:
            vert = orig.target_in(q)
            out[vert] = (out.get(vert, 0) + cu * cv) % p
    return {vert: c for vert, c in out.items() if c}
