"""Builders for the polytope families, as explicit boundary complexes.

Everything here is purely combinatorial.  Cyclic polytopes come from the
Gale evenness rule on an ordered vertex list; MW polytopes are assembled
from a cyclic factor C and a simplex factor T glued at the last C-vertex x
(which is swallowed by the gluing and is not a vertex of the result);
lexicographic subdivisions come from the push/pull recursion on the first
vertices; diamonds cap a lexicographic subdivision with a cone over the
base boundary.

The push/pull recursion relies on both families being closed under
deletion of the first vertex: C(K, m) minus its first vertex is C(K, m-1)
on the remaining order, and an MW polytope minus its first vertex is the
MW polytope with one vertex fewer.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .complexes import (
    APEX,
    Label,
    SimplicialComplex,
    cvert,
    simplex_boundary,
    simplex_complex,
    tvert,
)
from .vectors import GVector, mchoose

__all__ = [
    "CyclicSpec",
    "MWSpec",
    "DiamondSpec",
    "Block",
    "BlockDecomposition",
    "block_decomposition",
    "cyclic_facets",
    "cyclic_is_face",
    "mw_boundary",
    "mw_g_closed",
    "lex_subdivision",
    "lex_mw_via_cyclic",
    "lex_range",
    "diamond_boundary",
    "diamond_g_closed",
    "ball_boundary",
]


@dataclass(frozen=True)
class CyclicSpec:
    """Cyclic K-polytope with m ordered vertices."""

    K: int
    m: int

    def __post_init__(self) -> None:
        if not 1 <= self.K < self.m:
            raise ValueError(f"cyclic spec needs 1 <= K < m, got K={self.K}, m={self.m}")


@dataclass(frozen=True)
class MWSpec:
    """MW polytope parameters: cyclic factor dimension K, polytope dimension D, N vertices.

    K = 1 is admitted beyond the usual 2 <= K range: the cyclic factor then
    degenerates to a segment (Gale evenness leaves only the two end
    vertices), which is exactly what the K = 2 vertex-figure reduction
    produces one level down.
    """

    K: int
    D: int
    N: int

    def __post_init__(self) -> None:
        if not (1 <= self.K <= self.D < self.N):
            raise ValueError(
                f"MW spec needs 1 <= K <= D < N, got K={self.K}, D={self.D}, N={self.N}"
            )

    @property
    def c_count(self) -> int:
        """Number of cyclic-factor vertices, x included."""
        return self.N - self.D + self.K

    @property
    def t_count(self) -> int:
        return self.D - self.K + 1


@dataclass(frozen=True)
class DiamondSpec:
    """The a-th lexicographic diamond over the MW base with parameters (k, d, n)."""

    k: int
    d: int
    n: int
    a: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError("diamond spec needs k >= 1")
        if not self.n >= self.d >= 2 * self.k + 2:
            raise ValueError(
                f"diamond spec needs n >= d >= 2k+2, got k={self.k}, d={self.d}, n={self.n}"
            )
        if not 1 <= self.a <= self.n - self.d + 1:
            raise ValueError(
                f"diamond index a={self.a} outside 1..{self.n - self.d + 1}"
            )

    @property
    def base(self) -> MWSpec:
        return MWSpec(2 * self.k, self.d - 2, self.n - 1)


@dataclass(frozen=True)
class Block:
    """A maximal run of consecutive positions inside a vertex subset."""

    start: int
    end: int

    @property
    def size(self) -> int:
        return self.end - self.start + 1

    @property
    def odd(self) -> bool:
        return self.size % 2 == 1

    def inner(self, m: int) -> bool:
        return self.start > 1 and self.end < m


@dataclass(frozen=True)
class BlockDecomposition:
    """Block structure of a subset of {1..m} under the linear vertex order.

    The first and last positions (v_1 and x) are ends of the line; the
    wraparound pair v_1 ~ x is never treated as consecutive.
    """

    positions: tuple[int, ...]
    m: int
    blocks: tuple[Block, ...]

    @property
    def isolated(self) -> bool:
        return all(b.size == 1 for b in self.blocks)

    def inner_odd_count(self) -> int:
        return sum(1 for b in self.blocks if b.inner(self.m) and b.odd)

    def all_blocks_even(self) -> bool:
        return all(not b.odd for b in self.blocks)

    def all_inner_blocks_even(self) -> bool:
        return all(not b.odd for b in self.blocks if b.inner(self.m))


def block_decomposition(positions: Iterable[int], m: int) -> BlockDecomposition:
    pos = tuple(sorted(set(positions)))
    if pos and not (1 <= pos[0] and pos[-1] <= m):
        raise ValueError(f"positions {pos} outside 1..{m}")
    blocks: list[Block] = []
    start = None
    prev = None
    for p in pos:
        if start is None:
            start = prev = p
        elif p == prev + 1:
            prev = p
        else:
            blocks.append(Block(start, prev))
            start = prev = p
    if start is not None:
        blocks.append(Block(start, prev))
    return BlockDecomposition(pos, m, tuple(blocks))


def _gale_facets_positions(K: int, m: int) -> list[tuple[int, ...]]:
    """K-subsets of {1..m} whose inner blocks are all even (Gale evenness)."""
    out = []
    for S in combinations(range(1, m + 1), K):
        if block_decomposition(S, m).all_inner_blocks_even():
            out.append(S)
    return out


def _cyclic_facets_on(K: int, labels: Sequence[Label]) -> list[frozenset[Label]]:
    """Facets of the cyclic K-polytope whose ordered vertices are `labels`."""
    m = len(labels)
    return [
        frozenset(labels[p - 1] for p in S) for S in _gale_facets_positions(K, m)
    ]


def cyclic_facets(K: int, m: int) -> SimplicialComplex:
    """Boundary complex of the cyclic K-polytope with m vertices c1..cm."""
    spec = CyclicSpec(K, m)
    return SimplicialComplex(_cyclic_facets_on(spec.K, [cvert(i) for i in range(1, m + 1)]))


def cyclic_is_face(subset: Iterable[int], K: int, m: int) -> bool:
    """Face test for C(K, m) by block counting.

    A subset of i <= K vertices spans a face exactly when it has at most
    K - i inner odd blocks.  Agrees with membership in the downward closure
    of the Gale facets.
    """
    dec = block_decomposition(subset, m)
    i = len(dec.positions)
    if i > K:
        raise ValueError(f"subset of size {i} exceeds K={K}")
    return dec.inner_odd_count() <= K - i


def _mw_facets(
    K: int, c_labels: Sequence[Label], t_labels: Sequence[Label]
) -> list[frozenset[Label]]:
    """Boundary facets of the MW polytope on the given factor labels.

    The gluing vertex x is the last entry of c_labels; it does not survive
    into the output.  Facets either contain all of T together with a link
    facet of x, or a codimension-one face of T together with a C-facet
    avoiding x.
    """
    x = c_labels[-1]
    c_facets = _cyclic_facets_on(K, c_labels)
    t_all = frozenset(t_labels)
    t_ridges = [t_all - {t} for t in t_labels]
    out = []
    for S in c_facets:
        if x in S:
            out.append(t_all | (S - {x}))
        else:
            out.extend(ridge | S for ridge in t_ridges)
    return out


def mw_boundary(spec: MWSpec) -> SimplicialComplex:
    """Boundary complex of the MW polytope, a pure (D-1)-sphere on N vertices."""
    c_labels = [cvert(i) for i in range(1, spec.c_count + 1)]
    t_labels = [tvert(j) for j in range(1, spec.t_count + 1)]
    return SimplicialComplex(_mw_facets(spec.K, c_labels, t_labels))


def mw_g_closed(spec: MWSpec) -> GVector:
    """Closed-form g-vector: multichoose numbers up to floor(K/2), zero beyond."""
    kappa = spec.K // 2
    out = []
    for i in range(spec.D // 2 + 1):
        out.append(mchoose(spec.N - spec.D - 1, i) if i <= kappa else 0)
    return GVector(tuple(out))


# -- lexicographic subdivisions ------------------------------------------


def _pushable_order(spec: CyclicSpec | MWSpec) -> list[Label]:
    if isinstance(spec, CyclicSpec):
        return [cvert(i) for i in range(1, spec.m + 1)]
    return [cvert(i) for i in range(1, spec.c_count)]


def _suffix_facets(spec: CyclicSpec | MWSpec, start: int) -> set[frozenset[Label]]:
    """Facets of the polytope on the vertex order with the first `start` dropped."""
    if isinstance(spec, CyclicSpec):
        labels = [cvert(i) for i in range(start + 1, spec.m + 1)]
        return set(_cyclic_facets_on(spec.K, labels))
    c_labels = [cvert(i) for i in range(start + 1, spec.c_count + 1)]
    t_labels = [tvert(j) for j in range(1, spec.t_count + 1)]
    return set(_mw_facets(spec.K, c_labels, t_labels))


def lex_range(spec: CyclicSpec | MWSpec) -> int:
    """Largest index a for which pushing/pulling still changes anything."""
    if isinstance(spec, CyclicSpec):
        return spec.m - spec.K
    return spec.N - spec.D


def lex_subdivision(spec: CyclicSpec | MWSpec, a: int) -> SimplicialComplex:
    """The a-th lexicographic subdivision: push v_1..v_{a-1}, then pull v_a.

    Each push on the current polytope P with first vertex v and sub-polytope
    P' = P minus v contributes the pyramids from v over the facets of P'
    that are not facets of P, and recurses into P'.  The final pull on v_a
    contributes the pyramids from v_a over the facets of the current
    polytope that avoid v_a.  On a simplex the pull degenerates to the
    simplex itself, which ends the recursion at the top of the range.
    """
    amax = lex_range(spec)
    if not 1 <= a <= amax:
        raise ValueError(f"lex index a={a} outside 1..{amax}")
    order = _pushable_order(spec)
    cells: list[frozenset[Label]] = []
    cur = _suffix_facets(spec, 0)
    for s in range(a - 1):
        nxt = _suffix_facets(spec, s + 1)
        v = order[s]
        cells.extend(F | {v} for F in nxt - cur)
        cur = nxt
    v = order[a - 1]
    cells.extend(F | {v} for F in cur if v not in F)
    return SimplicialComplex(cells)


def lex_mw_via_cyclic(spec: MWSpec, a: int) -> SimplicialComplex:
    """Assemble Lex_a of an MW polytope from Lex_a of its cyclic factor.

    The subdivision restricted to the cyclic factor determines everything:
    cells through the gluing vertex x pick up all of T, the rest pick up
    the codimension-one faces of T.  Must agree with the direct push/pull
    route facet for facet.
    """
    m = spec.c_count
    ball = lex_subdivision(CyclicSpec(spec.K, m), a)
    x = cvert(m)
    t_labels = [tvert(j) for j in range(1, spec.t_count + 1)]
    t_full = simplex_complex(t_labels)
    t_bound = simplex_boundary(t_labels)
    part_a = t_full.join(ball.link([x]))
    part_b = t_bound.join(ball.antistar([x]))
    return SimplicialComplex(set(part_a.facets) | set(part_b.facets))


# -- diamonds ---------------------------------------------------------------


def diamond_boundary(spec: DiamondSpec) -> SimplicialComplex:
    """Boundary of the a-th lexicographic diamond: Lex_a(P) capped by the apex cone.

    Faces are those of the subdivision plus {apex} joined with every face of
    the base boundary; a pure (d-2)-sphere on n vertices.
    """
    base = spec.base
    ball = lex_subdivision(base, spec.a)
    rim = mw_boundary(base)
    facets = set(ball.facets)
    facets.update(f | {APEX} for f in rim.facets)
    return SimplicialComplex(facets)


def diamond_g_closed(k: int, d: int, n: int, a: int) -> GVector:
    """Closed-form g-vector of the a-th diamond over the (k, d, n) MW base.

    Entries are mchoose(n-d, i) through index k, then mchoose(n-d-a+1, k)
    at index k+1 when that index exists, then zero.
    """
    DiamondSpec(k, d, n, a)
    out = []
    for i in range((d - 1) // 2 + 1):
        if i <= k:
            out.append(mchoose(n - d, i))
        elif i == k + 1:
            out.append(mchoose(n - d - a + 1, k))
        else:
            out.append(0)
    return GVector(tuple(out))


def ball_boundary(ball: SimplicialComplex) -> SimplicialComplex:
    """Boundary of a pure simplicial ball: closure of ridges lying in one facet."""
    ridge_count: dict[frozenset[Label], int] = {}
    for f in ball.facets:
        for v in f:
            r = f - {v}
            ridge_count[r] = ridge_count.get(r, 0) + 1
    return SimplicialComplex(r for r, c in ridge_count.items() if c == 1)
