"""Exact integer face-vector calculus: f/h/g transforms, simplicial and cubical.

All values are arbitrary-precision Python integers; no operation rounds.
Vectors carry their dimension context explicitly and transforms reject
mismatches instead of inferring, since off-by-one hazards between the
simplicial dimension D, the complex dimension d-1, and the cubical
dimension d are the main source of bugs in this calculus.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

__all__ = [
    "FVector",
    "HVector",
    "GVector",
    "ShortCubicalH",
    "CubicalH",
    "ShortCubicalG",
    "CubicalG",
    "mchoose",
    "f_to_h",
    "h_to_g",
    "h_from_g_palindromic",
    "check_simplicial_DS",
    "check_cubical_DS",
    "f_to_hsc",
    "hsc_to_hc",
    "hc_to_gc",
    "hsc_to_gsc",
    "gc_from_gsc",
    "gc_entry_from_gsc",
    "gsc_gc_consistent",
]


def mchoose(m: int, i: int) -> int:
    """Multichoose number C(m+i-1, i): multisets of size i drawn from m types.

    Total on m >= 0, i >= 0; in particular mchoose(0, 0) == 1 and
    mchoose(0, i) == 0 for i >= 1.
    """
    if m < 0 or i < 0:
        raise ValueError(f"mchoose requires nonnegative arguments, got ({m}, {i})")
    if m == 0:
        return 1 if i == 0 else 0
    return comb(m + i - 1, i)


@dataclass(frozen=True)
class FVector:
    """Face counts (f_{-1}, f_0, ..., f_dim) of a (dim)-dimensional complex."""

    dim: int
    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.counts) != self.dim + 2:
            raise ValueError(
                f"FVector of dim {self.dim} needs {self.dim + 2} entries, got {len(self.counts)}"
            )
        if self.counts[0] != 1:
            raise ValueError("f_{-1} must be 1 for a nonempty complex")
        if any(c < 0 for c in self.counts):
            raise ValueError("face counts must be nonnegative")

    def polynomial(self) -> tuple[int, ...]:
        """Coefficients of f(t) = sum_i f_{i-1} t^i, lowest degree first."""
        return self.counts


@dataclass(frozen=True)
class HVector:
    """Simplicial h-vector (h_0, ..., h_D) of a (D-1)-complex."""

    D: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.D + 1:
            raise ValueError(
                f"HVector with D={self.D} needs {self.D + 1} entries, got {len(self.entries)}"
            )


@dataclass(frozen=True)
class GVector:
    """Simplicial g-vector (g_0, ..., g_{floor(D/2)})."""

    entries: tuple[int, ...]


@dataclass(frozen=True)
class ShortCubicalH:
    """Short cubical h-vector (h^sc_0, ..., h^sc_{d-1}) of a cubical (d-1)-complex."""

    d: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.d:
            raise ValueError(f"ShortCubicalH with d={self.d} needs {self.d} entries")


@dataclass(frozen=True)
class CubicalH:
    """Long cubical h-vector (h^c_0, ..., h^c_d), seeded by h^c_0 = 2^(d-1)."""

    d: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.d + 1:
            raise ValueError(f"CubicalH with d={self.d} needs {self.d + 1} entries")


@dataclass(frozen=True)
class ShortCubicalG:
    """Short cubical g-vector (g^sc_0, ..., g^sc_{floor((d-1)/2)})."""

    d: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        want = (self.d - 1) // 2 + 1
        if len(self.entries) != want:
            raise ValueError(f"ShortCubicalG with d={self.d} needs {want} entries")


@dataclass(frozen=True)
class CubicalG:
    """Long cubical g-vector (g^c_0, ..., g^c_{floor(d/2)}), g^c_0 = 2^(d-1)."""

    d: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        want = self.d // 2 + 1
        if len(self.entries) != want:
            raise ValueError(f"CubicalG with d={self.d} needs {want} entries")


def f_to_h(f: FVector, D: int) -> HVector:
    """h(t) = (1-t)^D f(t/(1-t)), expanded as an exact double sum.

    Requires f.dim == D - 1.  The entries satisfy sum_j h_j = f_{D-1}.
    """
    if f.dim != D - 1:
        raise ValueError(f"f-vector of dim {f.dim} does not match D={D}")
    entries = []
    for j in range(D + 1):
        h_j = 0
        for i in range(j + 1):
            h_j += (-1) ** (j - i) * comb(D - i, j - i) * f.counts[i]
        entries.append(h_j)
    return HVector(D, tuple(entries))


def h_to_g(h: HVector) -> GVector:
    """Successive differences g_0 = h_0, g_i = h_i - h_{i-1}, up to floor(D/2)."""
    out = [h.entries[0]]
    for i in range(1, h.D // 2 + 1):
        out.append(h.entries[i] - h.entries[i - 1])
    return GVector(tuple(out))


def h_from_g_palindromic(g: GVector, D: int) -> HVector:
    """Rebuild the full h-vector from g by cumulative sums plus reflection.

    Only valid for palindromic h (boundary complexes of simplicial polytopes).
    """
    if len(g.entries) != D // 2 + 1:
        raise ValueError(f"g-vector of length {len(g.entries)} does not match D={D}")
    half = []
    acc = 0
    for gi in g.entries:
        acc += gi
        half.append(acc)
    entries = list(half) + [half[D - i] for i in range(D // 2 + 1, D + 1)]
    return HVector(D, tuple(entries))


def check_simplicial_DS(h: HVector) -> bool:
    """Dehn-Sommerville test: h_i == h_{D-i} for all i."""
    return h.entries == h.entries[::-1]


def check_cubical_DS(hc: CubicalH) -> bool:
    """Cubical Dehn-Sommerville test: h^c_i == h^c_{d-i} for all i."""
    return hc.entries == hc.entries[::-1]


def f_to_hsc(f: FVector, d: int) -> ShortCubicalH:
    """h^sc(t) = sum_j f_j (2t)^j (1-t)^(d-1-j) for a cubical (d-1)-complex.

    The f_{-1} entry is ignored; the sum runs over j >= 0.
    """
    if f.dim != d - 1:
        raise ValueError(f"f-vector of dim {f.dim} does not match cubical d={d}")
    entries = []
    for i in range(d):
        v = 0
        for j in range(i + 1):
            v += f.counts[j + 1] * 2**j * (-1) ** (i - j) * comb(d - 1 - j, i - j)
        entries.append(v)
    return ShortCubicalH(d, tuple(entries))


def hsc_to_hc(hsc: ShortCubicalH, d: int) -> CubicalH:
    """Unroll h^sc_i = h^c_i + h^c_{i+1} from the seed h^c_0 = 2^(d-1)."""
    if hsc.d != d:
        raise ValueError(f"short cubical h with d={hsc.d} does not match d={d}")
    entries = [2 ** (d - 1)]
    for i in range(d):
        entries.append(hsc.entries[i] - entries[i])
    return CubicalH(d, tuple(entries))


def hc_to_gc(hc: CubicalH) -> CubicalG:
    """g^c_0 = h^c_0, g^c_i = h^c_i - h^c_{i-1} up to floor(d/2)."""
    out = [hc.entries[0]]
    for i in range(1, hc.d // 2 + 1):
        out.append(hc.entries[i] - hc.entries[i - 1])
    return CubicalG(hc.d, tuple(out))


def hsc_to_gsc(hsc: ShortCubicalH) -> ShortCubicalG:
    """g^sc_0 = h^sc_0, g^sc_i = h^sc_i - h^sc_{i-1} up to floor((d-1)/2)."""
    out = [hsc.entries[0]]
    for i in range(1, (hsc.d - 1) // 2 + 1):
        out.append(hsc.entries[i] - hsc.entries[i - 1])
    return ShortCubicalG(hsc.d, tuple(out))


def gc_entry_from_gsc(gsc: ShortCubicalG, d: int, i: int) -> int:
    """Entry g^c_i recovered from the short cubical g-vector.

    g^c_i = sum_{j=1..i} (-1)^(j-1) g^sc_{i-j} + (-1)^i 2^d, valid for any
    i >= 1 with i - 1 within gsc's index range.
    """
    if i == 0:
        return 2 ** (d - 1)
    if i - 1 >= len(gsc.entries):
        raise ValueError(f"g^c_{i} needs g^sc up to index {i - 1}")
    total = sum((-1) ** (j - 1) * gsc.entries[i - j] for j in range(1, i + 1))
    return total + (-1) ** i * 2**d


def gc_from_gsc(gsc: ShortCubicalG, d: int) -> CubicalG:
    """Invert the pairwise sums relating short and long cubical g-vectors."""
    if gsc.d != d:
        raise ValueError(f"short cubical g with d={gsc.d} does not match d={d}")
    return CubicalG(d, tuple(gc_entry_from_gsc(gsc, d, i) for i in range(d // 2 + 1)))


def gsc_gc_consistent(gsc: ShortCubicalG, gc: CubicalG) -> bool:
    """Re-substitution check: g^sc_0 = 2 g^c_0 + g^c_1 and g^sc_i = g^c_i + g^c_{i+1}.

    Indices past floor(d/2) are recovered through gc_entry_from_gsc, so the
    identity is verified over the whole short range even for odd d.
    """
    if gsc.d != gc.d:
        return False
    d = gc.d

    def gc_at(i: int) -> int:
        if i < len(gc.entries):
            return gc.entries[i]
        return gc_entry_from_gsc(gsc, d, i)

    if gsc.entries[0] != 2 * gc_at(0) + gc_at(1):
        return False
    for i in range(1, (d - 1) // 2 + 1):
        if gsc.entries[i] != gc_at(i) + gc_at(i + 1):
            return False
    return True
