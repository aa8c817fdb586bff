"""Simplicial complexes on labeled vertices.

A complex is stored by its maximal faces (facets); the full face set is the
downward closure, computed lazily and cached.  Vertex labels form a totally
ordered tagged family: the diamond apex, cyclic-factor vertices c1, c2, ...,
simplex-factor vertices t1, t2, ..., and plain vertices u1, u2, ... for
generic complexes, in that order.  Complexes are immutable after
construction; every operation returns a new value.
"""

from __future__ import annotations

import json
import re
from itertools import combinations
from typing import Iterable, Iterator

from .vectors import FVector

__all__ = [
    "Label",
    "APEX",
    "cvert",
    "tvert",
    "plain",
    "label_str",
    "parse_label",
    "LinkConditionError",
    "SimplicialComplex",
    "simplex_complex",
    "simplex_boundary",
    "face_enumeration",
]

# A label is (kind rank, index); the rank encodes apex < c < t < u so tuples
# sort in the required total order.
Label = tuple[int, int]

_KIND_APEX, _KIND_C, _KIND_T, _KIND_U = 0, 1, 2, 3
APEX: Label = (_KIND_APEX, 0)

_LABEL_RE = re.compile(r"^(p|[ctu]\d+)$")


def cvert(i: int) -> Label:
    """The i-th cyclic-factor vertex (1-based)."""
    return (_KIND_C, i)


def tvert(j: int) -> Label:
    """The j-th simplex-factor vertex (1-based)."""
    return (_KIND_T, j)


def plain(i: int) -> Label:
    """A generic vertex u<i>."""
    return (_KIND_U, i)


def label_str(v: Label) -> str:
    kind, idx = v
    if kind == _KIND_APEX:
        return "p"
    return "ctu"[kind - 1] + str(idx)


def parse_label(s: str) -> Label:
    if not _LABEL_RE.match(s):
        raise ValueError(f"bad vertex label {s!r}")
    if s == "p":
        return APEX
    kind = {"c": _KIND_C, "t": _KIND_T, "u": _KIND_U}[s[0]]
    return (kind, int(s[1:]))


class LinkConditionError(ValueError):
    """Raised when an edge contraction would not preserve the h-polynomial relation."""


class SimplicialComplex:
    """A finite simplicial complex given by its facet list.

    Facets are maximalized on construction (no facet contains another).  An
    empty facet list denotes the complex whose only face is the empty set,
    which is what a 0-simplex bounds.
    """

    __slots__ = ("facets", "_faces", "_by_size", "_vertices")

    def __init__(self, facets: Iterable[Iterable[Label]]):
        sets = {frozenset(f) for f in facets}
        if not sets:
            sets = {frozenset()}
        maximal = [
            f for f in sets if not any(f < g for g in sets)
        ]
        self.facets: frozenset[frozenset[Label]] = frozenset(maximal)
        self._faces: frozenset[frozenset[Label]] | None = None
        self._by_size: dict[int, int] | None = None
        self._vertices: tuple[Label, ...] | None = None

    @property
    def vertices(self) -> tuple[Label, ...]:
        """Support of the facet list, in ascending label order."""
        if self._vertices is None:
            seen: set[Label] = set()
            for f in self.facets:
                seen.update(f)
            self._vertices = tuple(sorted(seen))
        return self._vertices

    @property
    def dim(self) -> int:
        return max(len(f) for f in self.facets) - 1

    def is_pure(self) -> bool:
        sizes = {len(f) for f in self.facets}
        return len(sizes) == 1

    @property
    def faces(self) -> frozenset[frozenset[Label]]:
        """Downward closure of the facets (includes the empty face)."""
        if self._faces is None:
            out: set[frozenset[Label]] = set()
            for f in self.facets:
                t = tuple(f)
                for r in range(len(t) + 1):
                    out.update(map(frozenset, combinations(t, r)))
            self._faces = frozenset(out)
        return self._faces

    def faces_sorted(self) -> Iterator[frozenset[Label]]:
        """All faces in deterministic order: by size, then lexicographically."""
        return iter(sorted(self.faces, key=lambda f: (len(f), sorted(f))))

    def is_face(self, face: Iterable[Label]) -> bool:
        return frozenset(face) in self.faces

    def f_vector(self) -> FVector:
        if self._by_size is None:
            by_size: dict[int, int] = {}
            for f in self.faces:
                by_size[len(f)] = by_size.get(len(f), 0) + 1
            self._by_size = by_size
        d = self.dim
        return FVector(d, tuple(self._by_size.get(s, 0) for s in range(d + 2)))

    def euler_characteristic(self) -> int:
        """Reduced-free Euler characteristic sum_i (-1)^i f_i."""
        fv = self.f_vector()
        return sum((-1) ** i * fv.counts[i + 1] for i in range(self.dim + 1))

    # -- elementary operations -------------------------------------------

    def link(self, face: Iterable[Label]) -> "SimplicialComplex":
        """Faces G disjoint from `face` with G union `face` in the complex."""
        fs = frozenset(face)
        if fs not in self.faces:
            raise ValueError(f"{sorted(map(label_str, fs))} is not a face")
        return SimplicialComplex(f - fs for f in self.facets if fs <= f)

    def star(self, face: Iterable[Label]) -> list[frozenset[Label]]:
        """The open star: all faces containing `face`, sorted."""
        fs = frozenset(face)
        if fs not in self.faces:
            raise ValueError(f"{sorted(map(label_str, fs))} is not a face")
        hits = [g for g in self.faces if fs <= g]
        return sorted(hits, key=lambda g: (len(g), sorted(g)))

    def antistar(self, face: Iterable[Label]) -> "SimplicialComplex":
        """The subcomplex of faces that do not contain `face`."""
        fs = frozenset(face)
        candidates: set[frozenset[Label]] = set()
        for f in self.facets:
            if fs <= f:
                candidates.update(f - {v} for v in fs)
            else:
                candidates.add(f)
        return SimplicialComplex(candidates)

    def join(self, other: "SimplicialComplex") -> "SimplicialComplex":
        """Join: facets are pairwise unions; vertex sets must be disjoint."""
        mine, theirs = set(self.vertices), set(other.vertices)
        if mine & theirs:
            clash = sorted(label_str(v) for v in mine & theirs)
            raise ValueError(f"join requires disjoint vertex sets, shared: {clash}")
        return SimplicialComplex(a | b for a in self.facets for b in other.facets)

    def contract_edge(self, u: Label, v: Label) -> "SimplicialComplex":
        """Identify v with u along the edge {u, v}, keeping the label u.

        Requires the link condition lk_{uv} = lk_u intersect lk_v; without it
        the contraction would not preserve the h-polynomial bookkeeping, so
        the operation refuses instead of silently producing a non-sphere.
        """
        edge = frozenset((u, v))
        if edge not in self.faces:
            raise ValueError(
                f"{{{label_str(u)}, {label_str(v)}}} is not an edge of the complex"
            )
        lk_edge = self.link(edge).faces
        lk_both = self.link([u]).faces & self.link([v]).faces
        if lk_edge != lk_both:
            raise LinkConditionError(
                f"link condition fails at edge {{{label_str(u)}, {label_str(v)}}}"
            )
        new_facets = []
        for f in self.facets:
            if v in f:
                new_facets.append((f - {v}) | {u})
            else:
                new_facets.append(f)
        return SimplicialComplex(new_facets)

    def relabel(self, mapping: dict[Label, Label]) -> "SimplicialComplex":
        """Apply a vertex relabeling; labels not in the mapping are kept."""
        return SimplicialComplex(
            frozenset(mapping.get(v, v) for v in f) for f in self.facets
        )

    # -- serialization -----------------------------------------------------

    def canonical_facets(self) -> list[tuple[Label, ...]]:
        return sorted(tuple(sorted(f)) for f in self.facets)

    def to_json_obj(self) -> dict:
        return {
            "dim": self.dim,
            "vertices": [label_str(v) for v in self.vertices],
            "facets": [[label_str(v) for v in f] for f in self.canonical_facets()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), indent=2) + "\n"

    @classmethod
    def from_json_obj(cls, obj: dict) -> "SimplicialComplex":
        facets = [[parse_label(s) for s in f] for f in obj["facets"]]
        return cls(facets)

    @classmethod
    def from_json(cls, text: str) -> "SimplicialComplex":
        return cls.from_json_obj(json.loads(text))

    # -- value semantics ---------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.facets == other.facets

    def __hash__(self) -> int:
        return hash(self.facets)

    def __repr__(self) -> str:
        return (
            f"SimplicialComplex(dim={self.dim}, vertices={len(self.vertices)}, "
            f"facets={len(self.facets)})"
        )


def simplex_complex(labels: Iterable[Label]) -> SimplicialComplex:
    """The full simplex on the given vertices."""
    return SimplicialComplex([frozenset(labels)])


def simplex_boundary(labels: Iterable[Label]) -> SimplicialComplex:
    """The boundary of the simplex on the given vertices.

    For a single vertex this is the complex containing only the empty face.
    """
    ls = tuple(labels)
    return SimplicialComplex(combinations(ls, len(ls) - 1))


def face_enumeration(complex_: SimplicialComplex) -> FVector:
    """f-vector of a complex by explicit downward closure."""
    return complex_.f_vector()
