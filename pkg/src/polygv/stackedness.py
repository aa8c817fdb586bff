"""Stackedness machinery for the diamonds: missing faces, stacked facets, witnesses.

The predicted face lists live purely on the block structure of the cyclic
factor's linear vertex order (wraparound adjacency is never consecutive);
the brute-force oracles work on the explicitly enumerated diamond boundary.
The incompatibility witness pins down one facet of a stacked triangulation
that cannot be classified in the neighboring diamond, which is what blocks
any global cubical stacked subdivision.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable

import networkx as nx
from networkx.algorithms import isomorphism

from .complexes import APEX, Label, SimplicialComplex, cvert, label_str, tvert
from .constructions import block_decomposition
from .qvectors import diamond_index_of_sign_vector

__all__ = [
    "MISSING_1",
    "MISSING_2",
    "FACET_I",
    "FACET_II",
    "UNCLASSIFIED",
    "ClassifiedFace",
    "IncompatibilityWitness",
    "predicted_missing_faces",
    "brute_missing_faces",
    "predicted_stacked_facets",
    "oracle_stacked_facets",
    "classify_face",
    "incompatibility_witness",
    "cube_subgraph_images",
    "cube_graph_face_check",
]

MISSING_1 = "missing-1"
MISSING_2 = "missing-2"
FACET_I = "facet-I"
FACET_II = "facet-II"
UNCLASSIFIED = "unclassified"


@dataclass(frozen=True)
class ClassifiedFace:
    """A vertex subset of a diamond boundary together with its classification."""

    vertices: frozenset[Label]
    tag: str

    def labels(self) -> list[str]:
        return [label_str(v) for v in sorted(self.vertices)]


@dataclass(frozen=True)
class IncompatibilityWitness:
    """A sign vector, its diamond index a, the flipped neighbor's index b > a,
    and one face that is a stacked facet in the a-th diamond but matches
    neither facet type in the b-th."""

    k: int
    d: int
    n: int
    sigma: str
    a: int
    b: int
    face: frozenset[Label]
    face_type_in_a: str
    face_type_in_b: str

    def to_json_obj(self) -> dict:
        return {
            "k": self.k,
            "d": self.d,
            "n": self.n,
            "sigma": self.sigma,
            "a": self.a,
            "b": self.b,
            "face": [label_str(v) for v in sorted(self.face)],
            "face_type_in_a": self.face_type_in_a,
            "face_type_in_b": self.face_type_in_b,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), indent=2) + "\n"


def _check_params(k: int, d: int, n: int, a: int | None = None) -> None:
    if k < 1 or not n >= d >= 2 * k + 4:
        raise ValueError(f"needs k >= 1 and n >= d >= 2k+4, got k={k}, d={d}, n={n}")
    if a is not None and not 1 <= a <= n - d + 1:
        raise ValueError(f"diamond index a={a} outside 1..{n - d + 1}")


def _c_top(k: int, d: int, n: int) -> int:
    """Number of cyclic-factor vertices including the gluing vertex x."""
    return n - d + 2 * k + 1


def _t_labels(k: int, d: int) -> frozenset[Label]:
    return frozenset(tvert(j) for j in range(1, d - 2 * k))


def _isolated_sets(size: int, top: int) -> Iterable[tuple[int, ...]]:
    """Size-`size` subsets of positions 1..top with no two consecutive."""
    for S in combinations(range(1, top + 1), size):
        if all(b - a >= 2 for a, b in zip(S, S[1:])):
            yield S


def _even_block_sets(size: int, top: int, m: int) -> Iterable[tuple[int, ...]]:
    """Size-`size` subsets of positions 1..top with all blocks of even length."""
    for S in combinations(range(1, top + 1), size):
        if block_decomposition(S, m).all_blocks_even():
            yield S


def predicted_missing_faces(k: int, d: int, n: int, a: int) -> list[ClassifiedFace]:
    """Minimal non-faces of the a-th diamond, by the block characterization.

    Type 1 (size k+2): the apex plus k+1 isolated cyclic vertices below x
    with minimum exactly v_a.  Type 2 (size k+1): k+1 isolated cyclic
    vertices below x with minimum different from v_a.  Nothing else of size
    at most k+2 is missing.
    """
    _check_params(k, d, n, a)
    m = _c_top(k, d, n)
    out = []
    for S in _isolated_sets(k + 1, m - 1):
        verts = frozenset(cvert(i) for i in S)
        if S[0] == a:
            out.append(ClassifiedFace(verts | {APEX}, MISSING_1))
        else:
            out.append(ClassifiedFace(verts, MISSING_2))
    return sorted(out, key=lambda cf: (len(cf.vertices), sorted(cf.vertices)))


def brute_missing_faces(
    complex_: SimplicialComplex, max_size: int
) -> list[frozenset[Label]]:
    """All inclusion-minimal non-faces of size <= max_size, by subset scan.

    Scans sizes in increasing order and prunes supersets of non-faces
    already found, so the output is exactly the minimal ones.
    """
    support = sorted(complex_.vertices)
    if max_size > len(support):
        raise ValueError(f"max_size {max_size} exceeds vertex count {len(support)}")
    faces = complex_.faces
    found: list[frozenset[Label]] = []
    for size in range(1, max_size + 1):
        for S in combinations(support, size):
            fs = frozenset(S)
            if fs in faces:
                continue
            if any(miss < fs for miss in found):
                continue
            found.append(fs)
    return sorted(found, key=lambda f: (len(f), sorted(f)))


def predicted_stacked_facets(k: int, d: int, n: int, a: int) -> list[ClassifiedFace]:
    """Facets of the unique stacked triangulation of the a-th diamond.

    Type I: apex + a 2k-set of cyclic vertices below x in even blocks + all
    of T.  Type II: v_a + such a 2k-set lying entirely above v_a + all of T.
    Every facet has exactly d vertices.
    """
    _check_params(k, d, n, a)
    m = _c_top(k, d, n)
    tset = _t_labels(k, d)
    out = []
    for S in _even_block_sets(2 * k, m - 1, m):
        verts = frozenset(cvert(i) for i in S)
        out.append(ClassifiedFace(verts | {APEX} | tset, FACET_I))
        if S[0] > a:
            out.append(ClassifiedFace(verts | {cvert(a)} | tset, FACET_II))
    return sorted(out, key=lambda cf: (cf.tag, sorted(cf.vertices)))


def oracle_stacked_facets(
    complex_: SimplicialComplex, d: int, k: int
) -> list[frozenset[Label]]:
    """d-subsets of the diamond's vertices all of whose small subsets are faces.

    The criterion is literal: every subset of size <= k+2 must be a face of
    the boundary complex.
    """
    support = sorted(complex_.vertices)
    faces = complex_.faces
    out = []
    for S in combinations(support, d):
        ok = True
        for size in range(1, k + 3):
            for sub in combinations(S, size):
                if frozenset(sub) not in faces:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(frozenset(S))
    return sorted(out, key=lambda f: sorted(f))


def classify_face(face: Iterable[Label], k: int, d: int, n: int, a: int) -> str:
    """Classify a vertex subset against the four predicted patterns for D_a."""
    _check_params(k, d, n, a)
    fs = frozenset(face)
    m = _c_top(k, d, n)
    tset = _t_labels(k, d)
    has_apex = APEX in fs
    t_part = fs & tset
    c_kind = cvert(1)[0]
    c_positions = sorted(idx for (kind, idx) in fs if kind == c_kind)
    stray = fs - tset - {APEX} - {cvert(i) for i in c_positions}
    if stray:
        return UNCLASSIFIED
    c_ok = bool(c_positions) and c_positions[-1] <= m - 1

    if not t_part and c_ok:
        dec = block_decomposition(c_positions, m)
        if len(c_positions) == k + 1 and dec.isolated:
            if has_apex and c_positions[0] == a:
                return MISSING_1
            if not has_apex and c_positions[0] != a:
                return MISSING_2

    if t_part == tset and len(fs) == d and c_ok:
        if has_apex and len(c_positions) == 2 * k:
            if block_decomposition(c_positions, m).all_blocks_even():
                return FACET_I
        if not has_apex and c_positions and c_positions[0] == a:
            rest = c_positions[1:]
            if len(rest) == 2 * k and rest and rest[0] > a:
                if block_decomposition(rest, m).all_blocks_even():
                    return FACET_II
    return UNCLASSIFIED


def incompatibility_witness(k: int, d: int, n: int) -> IncompatibilityWitness:
    """Construct the witness blocking a compatible family of stacked triangulations.

    Takes the sign vector with a single leading plus (diamond index a = 1),
    flips that coordinate to land in the diamond with index b = n-d+1 > a,
    and picks the lexicographically smallest type II facet: v_a, the
    following 2k consecutive cyclic vertices, and all of T.  The face is
    type II in the a-th diamond yet matches neither facet type in the b-th.
    """
    _check_params(k, d, n)
    if n == d:
        raise ValueError("no diamond index a < n-d+1 exists when n == d")
    sigma = "+" + "-" * (n - 1)
    a = diamond_index_of_sign_vector(sigma, n, d)
    flipped = "-" + sigma[1:]
    b = diamond_index_of_sign_vector(flipped, n, d)
    candidates = [
        cf.vertices for cf in predicted_stacked_facets(k, d, n, a) if cf.tag == FACET_II
    ]
    face = min(candidates, key=lambda f: sorted(f))
    tag_a = classify_face(face, k, d, n, a)
    tag_b = classify_face(face, k, d, n, b)
    if tag_a != FACET_II or tag_b != UNCLASSIFIED:
        raise AssertionError(
            f"witness construction failed for (k={k}, d={d}, n={n}): {tag_a}, {tag_b}"
        )
    return IncompatibilityWitness(k, d, n, sigma, a, b, face, tag_a, tag_b)


# -- the cube-graph rigidity fact ---------------------------------------------


def _cube_graph(n: int) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(range(1 << n))
    for v in range(1 << n):
        for i in range(n):
            w = v ^ (1 << i)
            if w > v:
                g.add_edge(v, w)
    return g


def cube_subgraph_images(n: int, m: int) -> set[frozenset[int]]:
    """Vertex sets of all subgraphs of the n-cube graph isomorphic to the m-cube graph."""
    big, small = _cube_graph(n), _cube_graph(m)
    matcher = isomorphism.GraphMatcher(big, small)
    return {frozenset(mapping) for mapping in matcher.subgraph_monomorphisms_iter()}


def cube_graph_face_check(n: int, m: int) -> bool:
    """True when every m-cube subgraph of the n-cube is the skeleton of an m-face.

    A vertex set spans an axis-aligned m-face exactly when the XOR offsets
    from any base vertex use only m coordinate bits.  Exhaustive search,
    restricted to n <= 4.
    """
    if not 1 <= m <= n <= 4:
        raise ValueError(f"search range limited to 1 <= m <= n <= 4, got ({n}, {m})")
    for image in cube_subgraph_images(n, m):
        base = min(image)
        mask = 0
        for v in image:
            mask |= v ^ base
        if mask.bit_count() != m:
            return False
    return True


def cube_face_count(n: int, m: int) -> int:
    """Number of m-faces of the n-cube."""
    return comb(n, m) * 2 ** (n - m)
