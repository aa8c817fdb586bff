"""Verification suites: every module invariant, runnable at two grid sizes.

Suites map to library modules: transforms (vector calculus), constructions
(complex engine plus builders), qvectors, stackedness.  Each check returns
a CheckResult; the CLI turns them into pass/fail lines and an exit code.
Independent grid points may be evaluated in parallel, capped by the
POLYGV_THREADS environment variable (0 or unset picks the CPU count).
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Callable, Iterable, Sequence

from . import complexes as cx
from . import constructions as cons
from . import qvectors as qv
from . import stackedness as st
from . import vectors as vec

__all__ = [
    "CheckResult",
    "GridBounds",
    "SMALL",
    "FULL",
    "SUITES",
    "run_suite",
    "grid_map",
]


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class GridBounds:
    name: str
    mw_K: int
    mw_D: int
    mw_N: int
    link_k: int
    link_D: int
    link_N: int
    gale_K: int
    gale_m: int
    dia_k: int
    dia_d: int
    dia_n: int
    q_k: int
    q_d: int
    q_n: int
    hist_brute_n: int
    bin_k: int
    bin_m: int
    ray_n_extra: int
    stack_d: tuple[int, ...]
    stack_n_extra: int
    witness_k: int
    witness_d: int
    witness_n: int
    blind_d: int


SMALL = GridBounds(
    name="small",
    mw_K=4, mw_D=6, mw_N=10,
    link_k=2, link_D=6, link_N=9,
    gale_K=4, gale_m=10,
    dia_k=2, dia_d=8, dia_n=10,
    q_k=2, q_d=8, q_n=12,
    hist_brute_n=12,
    bin_k=4, bin_m=12,
    ray_n_extra=24,
    stack_d=(6,), stack_n_extra=3,
    witness_k=2, witness_d=8, witness_n=12,
    blind_d=10,
)

FULL = GridBounds(
    name="full",
    mw_K=5, mw_D=8, mw_N=12,
    link_k=2, link_D=7, link_N=11,
    gale_K=6, gale_m=12,
    dia_k=3, dia_d=10, dia_n=12,
    q_k=3, q_d=10, q_n=14,
    hist_brute_n=14,
    bin_k=6, bin_m=30,
    ray_n_extra=24,
    stack_d=(6, 8), stack_n_extra=4,
    witness_k=2, witness_d=10, witness_n=14,
    blind_d=12,
)

GRIDS = {"small": SMALL, "full": FULL}


def thread_count() -> int:
    raw = os.environ.get("POLYGV_THREADS", "0")
    try:
        v = int(raw)
    except ValueError:
        v = 0
    if v <= 0:
        return os.cpu_count() or 1
    return v


def grid_map(fn: Callable, items: Iterable) -> list:
    """Order-preserving map over independent grid points, optionally threaded."""
    items = list(items)
    t = thread_count()
    if t <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=min(t, len(items))) as ex:
        return list(ex.map(fn, items))


def _result(name: str, failures: list[str], tested: int) -> CheckResult:
    if failures:
        return CheckResult(name, False, "; ".join(failures[:4]))
    return CheckResult(name, True, f"{tested} cases")


# --------------------------------------------------------------------------
# shared grids
# --------------------------------------------------------------------------


def mw_specs(K_max: int, D_max: int, N_max: int, K_min: int = 2) -> list[cons.MWSpec]:
    out = []
    for K in range(K_min, K_max + 1):
        for D in range(K, D_max + 1):
            for N in range(D + 1, N_max + 1):
                out.append(cons.MWSpec(K, D, N))
    return out


def diamond_specs(k_max: int, d_max: int, n_max: int) -> list[cons.DiamondSpec]:
    out = []
    for k in range(1, k_max + 1):
        for d in range(2 * k + 2, d_max + 1):
            for n in range(d, n_max + 1):
                for a in range(1, n - d + 2):
                    out.append(cons.DiamondSpec(k, d, n, a))
    return out


def q_specs(k_max: int, d_max: int, n_max: int) -> list[qv.QSpec]:
    out = []
    for k in range(1, k_max + 1):
        for d in range(2 * k + 2, d_max + 1):
            for n in range(d, n_max + 1):
                out.append(qv.QSpec(k, d, n))
    return out


# --------------------------------------------------------------------------
# transforms suite
# --------------------------------------------------------------------------


def check_transform_named_examples() -> CheckResult:
    fails: list[str] = []

    def expect(cond: bool, what: str) -> None:
        if not cond:
            fails.append(what)

    expect(vec.mchoose(0, 0) == 1, "mchoose(0,0)")
    expect(vec.mchoose(0, 3) == 0, "mchoose(0,3)")
    expect(vec.mchoose(3, 2) == 6, "mchoose(3,2)")

    h = vec.f_to_h(vec.FVector(2, (1, 4, 6, 4)), 3)
    expect(h.entries == (1, 1, 1, 1), "h of simplex boundary")
    expect(vec.f_to_h(vec.FVector(0, (1, 2)), 1).entries == (1, 1), "h of two points")
    h47 = vec.f_to_h(vec.FVector(3, (1, 7, 21, 28, 14)), 4)
    expect(h47.entries == (1, 3, 6, 3, 1), "h of C(4,7)")
    expect(vec.h_to_g(h).entries == (1, 0), "g of simplex boundary")
    expect(vec.h_to_g(h47).entries == (1, 2, 3), "g of C(4,7)")
    expect(vec.check_simplicial_DS(h47), "DS C(4,7)")
    expect(not vec.check_simplicial_DS(vec.HVector(3, (1, 2, 1, 1))), "DS non-palindrome")
    expect(vec.check_simplicial_DS(vec.HVector(3, (1, 1, 1, 1))), "DS palindrome")

    hsc3 = vec.f_to_hsc(vec.FVector(2, (1, 8, 12, 6)), 3)
    expect(hsc3.entries == (8, 8, 8), "hsc of 3-cube")
    expect(vec.f_to_hsc(vec.FVector(1, (1, 4, 4)), 2).entries == (4, 4), "hsc of square")
    hsc4 = vec.f_to_hsc(vec.FVector(3, (1, 16, 32, 24, 8)), 4)
    expect(hsc4.entries == (16, 16, 16, 16), "hsc of 4-cube")

    hc3 = vec.hsc_to_hc(hsc3, 3)
    expect(hc3.entries == (4, 4, 4, 4), "hc of 3-cube")
    expect(vec.hc_to_gc(hc3).entries == (4, 0), "gc of 3-cube")
    gsc = vec.ShortCubicalG(6, (512, 1536, 1088))
    expect(vec.gc_from_gsc(gsc, 6).entries == (32, 448, 1088, 0), "gc from gsc at d=6")
    hc2 = vec.hsc_to_hc(vec.f_to_hsc(vec.FVector(1, (1, 4, 4)), 2), 2)
    expect(hc2.entries == (2, 2, 2), "hc of square")

    for bad in (
        lambda: vec.f_to_h(vec.FVector(2, (1, 4, 6, 4)), 4),
        lambda: vec.f_to_hsc(vec.FVector(2, (1, 8, 12, 6)), 4),
        lambda: vec.mchoose(-1, 0),
    ):
        try:
            bad()
            fails.append("expected ValueError")
        except ValueError:
            pass
    return _result("transforms: named examples", fails, 20)


def check_sum_h_equals_top(bounds: GridBounds) -> CheckResult:
    specs = mw_specs(bounds.mw_K, min(bounds.mw_D, 6), min(bounds.mw_N, 9))
    fails = []
    for spec in specs:
        fv = cons.mw_boundary(spec).f_vector()
        h = vec.f_to_h(fv, spec.D)
        if sum(h.entries) != fv.counts[-1]:
            fails.append(f"sum h != top f at {spec}")
    return _result("transforms: sum of h equals facet count", fails, len(specs))


def check_palindromic_roundtrip(bounds: GridBounds) -> CheckResult:
    fails = []
    tested = 0
    rng_entries = range(0, 4)
    for D in range(1, 7):
        width = D // 2 + 1
        for tail in _tuples(rng_entries, width - 1):
            g = vec.GVector((1,) + tail)
            h = vec.h_from_g_palindromic(g, D)
            tested += 1
            if not vec.check_simplicial_DS(h):
                fails.append(f"reflection not palindromic D={D} g={g.entries}")
            if vec.h_to_g(h) != g:
                fails.append(f"roundtrip failed D={D} g={g.entries}")
    return _result("transforms: palindromic h/g round trip", fails, tested)


def _tuples(values: Sequence[int], length: int):
    if length == 0:
        yield ()
        return
    for head in values:
        for rest in _tuples(values, length - 1):
            yield (head,) + rest


def check_cubical_ds_cubes(bounds: GridBounds) -> CheckResult:
    fails = []
    top = max(bounds.q_d, 8)
    for d in range(2, top + 1):
        counts = (1,) + tuple(comb(d, j) * 2 ** (d - j) for j in range(d))
        hsc = vec.f_to_hsc(vec.FVector(d - 1, counts), d)
        hc = vec.hsc_to_hc(hsc, d)
        if not vec.check_cubical_DS(hc):
            fails.append(f"cubical DS fails for the {d}-cube")
        gc = vec.hc_to_gc(hc)
        if gc.entries != (2 ** (d - 1),) + (0,) * (d // 2):
            fails.append(f"gc of the {d}-cube is {gc.entries}")
    return _result("transforms: cubical DS on cube boundaries", fails, top - 1)


def check_resubstitution(bounds: GridBounds) -> CheckResult:
    fails = []
    specs = q_specs(bounds.q_k, bounds.q_d, bounds.q_n)
    for spec in specs:
        gsc = qv.gsc_q_closed(spec)
        gc = vec.gc_from_gsc(gsc, spec.d)
        if not vec.gsc_gc_consistent(gsc, gc):
            fails.append(f"resubstitution fails for {spec}")
    # arbitrary vectors: the inversion is algebraic, not family-specific
    for d in (4, 5, 6, 7):
        for tail in _tuples(range(-2, 3), (d - 1) // 2):
            gsc = vec.ShortCubicalG(d, (7,) + tail)
            gc = vec.gc_from_gsc(gsc, d)
            if not vec.gsc_gc_consistent(gsc, gc):
                fails.append(f"resubstitution fails for arbitrary d={d} {gsc.entries}")
    return _result("transforms: short/long g re-substitution", fails, len(specs))


def check_mchoose_recurrence(bounds: GridBounds) -> CheckResult:
    fails = []
    for m in range(1, 20):
        for i in range(1, 20):
            if vec.mchoose(m, i) != vec.mchoose(m - 1, i) + vec.mchoose(m, i - 1):
                fails.append(f"recurrence fails at ({m},{i})")
    for k in range(1, 10):
        if vec.mchoose(0, k) != 0:
            fails.append(f"mchoose(0,{k})")
    return _result("transforms: multichoose recurrence", fails, 361)


# --------------------------------------------------------------------------
# constructions suite (includes the complex-engine invariants)
# --------------------------------------------------------------------------


def check_construction_named_examples() -> CheckResult:
    fails: list[str] = []

    def expect(cond: bool, what: str) -> None:
        if not cond:
            fails.append(what)

    pent = cons.cyclic_facets(2, 5)
    want = {frozenset({cx.cvert(a), cx.cvert(b)}) for a, b in [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)]}
    expect(pent.facets == frozenset(want), "pentagon facets")
    expect(pent.f_vector().counts == (1, 5, 5), "pentagon f-vector")

    c47 = cons.cyclic_facets(4, 7)
    expect(len(c47.facets) == 14, "C(4,7) facet count")
    expect(c47.f_vector().counts == (1, 7, 21, 28, 14), "C(4,7) f-vector")
    expect(c47.euler_characteristic() == 1 + (-1) ** 3, "C(4,7) Euler")

    c46 = cons.cyclic_facets(4, 6)
    expect(frozenset(map(cx.cvert, (1, 2, 4, 5))) in c46.facets, "{1,2,4,5} facet of C(4,6)")

    expect(not cons.cyclic_is_face({2, 4}, 2, 6), "{2,4} non-face of C(2,6)")
    expect(cons.cyclic_is_face({1, 6}, 2, 6), "{1,6} face of C(2,6)")
    expect(cons.cyclic_is_face({2, 3}, 2, 6), "{2,3} face of C(2,6)")
    try:
        cons.cyclic_is_face({1, 2, 3}, 2, 6)
        fails.append("oversized subset accepted")
    except ValueError:
        pass

    mw = cons.mw_boundary(cons.MWSpec(2, 4, 7))
    expect(len(mw.vertices) == 7, "MW(2,4,7) vertex count")
    expect(len(mw.facets) == 11, "MW(2,4,7) facet count")
    expect(mw.f_vector().counts == (1, 7, 18, 22, 11), "MW(2,4,7) f-vector")
    h = vec.f_to_h(mw.f_vector(), 4)
    expect(h.entries == (1, 3, 3, 3, 1), "MW(2,4,7) h-vector")
    expect(vec.h_to_g(h).entries == (1, 2, 0), "MW(2,4,7) g-vector")
    g348 = vec.h_to_g(vec.f_to_h(cons.mw_boundary(cons.MWSpec(3, 4, 8)).f_vector(), 4))
    expect(g348.entries == (1, 3, 0), "MW(3,4,8) g-vector")

    lex1 = cons.lex_subdivision(cons.CyclicSpec(2, 5), 1)
    expect(
        lex1.facets
        == frozenset(
            frozenset(map(cx.cvert, t)) for t in [(1, 2, 3), (1, 3, 4), (1, 4, 5)]
        ),
        "Lex_1 of the pentagon",
    )
    lex2 = cons.lex_subdivision(cons.CyclicSpec(2, 5), 2)
    expect(
        lex2.facets
        == frozenset(
            frozenset(map(cx.cvert, t)) for t in [(1, 2, 5), (2, 3, 4), (2, 4, 5)]
        ),
        "Lex_2 of the pentagon",
    )

    for a, want_g in [(1, (1, 3, 3)), (2, (1, 3, 2)), (4, (1, 3, 0))]:
        dia = cons.diamond_boundary(cons.DiamondSpec(1, 6, 9, a))
        got = vec.h_to_g(vec.f_to_h(dia.f_vector(), 5))
        expect(got.entries == want_g, f"g of diamond a={a} at (1,6,9)")
        expect(cons.diamond_g_closed(1, 6, 9, a).entries == want_g, f"closed g a={a}")

    ast = pent.antistar([cx.cvert(5)])
    want_path = frozenset(
        frozenset(map(cx.cvert, t)) for t in [(1, 2), (2, 3), (3, 4)]
    )
    expect(ast.facets == want_path, "antistar of the last pentagon vertex")

    tetra = cx.simplex_boundary([cx.plain(i) for i in range(1, 5)])
    lk = tetra.link([cx.plain(1)])
    expect(lk == cx.simplex_boundary([cx.plain(i) for i in range(2, 5)]), "vertex link in a 3-simplex boundary")

    s0a = cx.SimplicialComplex([[cx.plain(1)], [cx.plain(2)]])
    s0b = cx.SimplicialComplex([[cx.plain(3)], [cx.plain(4)]])
    square = s0a.join(s0b)
    expect(len(square.facets) == 4 and square.dim == 1, "join of two 0-spheres")
    cone = cx.SimplicialComplex([[cx.plain(9)]]).join(pent)
    expect(len(cone.facets) == 5 and cone.dim == 2, "cone over the pentagon")
    try:
        pent.join(pent)
        fails.append("join with shared vertices accepted")
    except ValueError:
        pass

    cyc4 = cx.SimplicialComplex(
        [[cx.plain(1), cx.plain(2)], [cx.plain(2), cx.plain(3)], [cx.plain(3), cx.plain(4)], [cx.plain(4), cx.plain(1)]]
    )
    tri = cyc4.contract_edge(cx.plain(1), cx.plain(2))
    expect(len(tri.facets) == 3 and tri.dim == 1, "contract 4-cycle to triangle")
    try:
        cyc4.contract_edge(cx.plain(1), cx.plain(3))
        fails.append("contraction of a non-edge accepted")
    except ValueError:
        pass

    return _result("constructions: named examples", fails, 30)


def check_gale_crosscheck(bounds: GridBounds) -> CheckResult:
    fails = []
    tested = 0
    for K in range(1, bounds.gale_K + 1):
        for m in range(K + 1, bounds.gale_m + 1):
            closure = cons.cyclic_facets(K, m).faces
            for size in range(0, K + 1):
                for S in combinations(range(1, m + 1), size):
                    tested += 1
                    in_closure = frozenset(cx.cvert(i) for i in S) in closure
                    if in_closure != cons.cyclic_is_face(S, K, m):
                        fails.append(f"criterion mismatch K={K} m={m} S={S}")
    return _result("constructions: Gale face criterion vs downward closure", fails, tested)


def _mw_spec_ok(spec: cons.MWSpec) -> list[str]:
    fails = []
    b = cons.mw_boundary(spec)
    if not b.is_pure() or b.dim != spec.D - 1:
        fails.append(f"{spec}: not a pure (D-1)-complex")
    fv = b.f_vector()
    if b.euler_characteristic() != 1 + (-1) ** (spec.D - 1):
        fails.append(f"{spec}: Euler relation fails")
    h = vec.f_to_h(fv, spec.D)
    if not vec.check_simplicial_DS(h):
        fails.append(f"{spec}: Dehn-Sommerville fails")
    if vec.h_to_g(h) != cons.mw_g_closed(spec):
        fails.append(f"{spec}: enumerated g differs from closed form")
    return fails


def check_mw_closed_form(bounds: GridBounds) -> CheckResult:
    specs = mw_specs(bounds.mw_K, bounds.mw_D, bounds.mw_N)
    fails = [msg for msgs in grid_map(_mw_spec_ok, specs) for msg in msgs]
    return _result("constructions: MW closed-form g and DS", fails, len(specs))


def check_mw_vertex_link(bounds: GridBounds) -> CheckResult:
    specs = []
    for k in range(1, bounds.link_k + 1):
        for D in range(2 * k, bounds.link_D + 1):
            for N in range(D + 1, bounds.link_N + 1):
                specs.append((k, D, N))

    def one(args: tuple[int, int, int]) -> list[str]:
        k, D, N = args
        big = cons.mw_boundary(cons.MWSpec(2 * k, D, N))
        link = big.link([cx.cvert(1)])
        shifted = link.relabel(
            {cx.cvert(i): cx.cvert(i - 1) for i in range(2, N - D + 2 * k + 1)}
        )
        small = cons.mw_boundary(cons.MWSpec(2 * k - 1, D - 1, N - 1))
        if shifted != small:
            return [f"vertex-link reduction fails at (2k={2*k}, D={D}, N={N})"]
        return []

    fails = [msg for msgs in grid_map(one, specs) for msg in msgs]
    return _result("constructions: vertex link is the lower MW polytope", fails, len(specs))


def _lex_props_for(spec: cons.DiamondSpec) -> list[str]:
    fails = []
    base = spec.base
    direct = cons.lex_subdivision(base, spec.a)
    if direct != cons.lex_mw_via_cyclic(base, spec.a):
        fails.append(f"{spec}: cyclic-factor route differs from push/pull route")
    if not direct.is_pure() or direct.dim != base.D:
        fails.append(f"{spec}: subdivision is not pure of the base dimension")
    rim = cons.mw_boundary(base)
    if set(direct.vertices) != set(rim.vertices):
        fails.append(f"{spec}: subdivision does not use every vertex")
    if cons.ball_boundary(direct) != rim:
        fails.append(f"{spec}: subdivision boundary differs from the base boundary")
    return fails


def check_lex_properties(bounds: GridBounds) -> CheckResult:
    specs = diamond_specs(bounds.dia_k, bounds.dia_d, bounds.dia_n)
    fails = [msg for msgs in grid_map(_lex_props_for, specs) for msg in msgs]
    return _result("constructions: lexicographic subdivisions (both routes)", fails, len(specs))


def _diamond_relations_for(spec: cons.DiamondSpec) -> list[str]:
    fails = []
    base = spec.base
    dia = cons.diamond_boundary(spec)
    ball = cons.lex_subdivision(base, spec.a)
    rim = cons.mw_boundary(base)
    if not dia.is_pure() or dia.dim != spec.d - 2:
        fails.append(f"{spec}: boundary not a pure (d-2)-complex")
    if dia.euler_characteristic() != 1 + (-1) ** (spec.d - 2):
        fails.append(f"{spec}: Euler relation fails")
    fd, fb, fr = dia.f_vector().counts, ball.f_vector().counts, rim.f_vector().counts
    for j in range(len(fd)):
        lhs = fd[j]
        rhs = (fb[j] if j < len(fb) else 0) + (fr[j - 1] if 1 <= j <= len(fr) else 0)
        if lhs != rhs:
            fails.append(f"{spec}: f-polynomial relation fails at degree {j}")
            break
    got = vec.h_to_g(vec.f_to_h(dia.f_vector(), spec.d - 1))
    if got != cons.diamond_g_closed(spec.k, spec.d, spec.n, spec.a):
        fails.append(f"{spec}: enumerated g differs from closed form")
    return fails


def check_diamond_relations(bounds: GridBounds) -> CheckResult:
    specs = diamond_specs(bounds.dia_k, bounds.dia_d, bounds.dia_n)
    fails = [msg for msgs in grid_map(_diamond_relations_for, specs) for msg in msgs]
    return _result("constructions: diamond f-relation and closed-form g", fails, len(specs))


def _contraction_for(spec: cons.DiamondSpec) -> list[str]:
    fails = []
    dia = cons.diamond_boundary(spec)
    if spec.a == 1:
        try:
            dia.contract_edge(cx.cvert(1), cx.APEX)
            fails.append(f"{spec}: contraction succeeded where the link condition fails")
        except cx.LinkConditionError:
            pass
        return fails
    contracted = dia.contract_edge(cx.cvert(1), cx.APEX)
    m = spec.n - spec.d + 2 * spec.k + 1
    relabeled = contracted.relabel(
        {cx.cvert(1): cx.APEX, **{cx.cvert(i): cx.cvert(i - 1) for i in range(2, m + 1)}}
    )
    target = cons.diamond_boundary(
        cons.DiamondSpec(spec.k, spec.d, spec.n - 1, spec.a - 1)
    )
    if relabeled != target:
        fails.append(f"{spec}: contraction is not the previous diamond")
    h_dia = vec.f_to_h(dia.f_vector(), spec.d - 1).entries
    h_con = vec.f_to_h(contracted.f_vector(), spec.d - 1).entries
    rim = cons.mw_boundary(spec.base)
    h_lk = vec.f_to_h(rim.link([cx.cvert(1)]).f_vector(), spec.d - 3).entries
    for j in range(len(h_dia)):
        rhs = h_con[j] + (h_lk[j - 1] if 1 <= j <= len(h_lk) else 0)
        if h_dia[j] != rhs:
            fails.append(f"{spec}: h-polynomial contraction relation fails at {j}")
            break
    return fails


def check_contraction(bounds: GridBounds) -> CheckResult:
    specs = diamond_specs(bounds.dia_k, bounds.dia_d, bounds.dia_n)
    fails = [msg for msgs in grid_map(_contraction_for, specs) for msg in msgs]
    return _result("constructions: edge contraction onto the previous diamond", fails, len(specs))


def check_join_f_polynomial(bounds: GridBounds) -> CheckResult:
    pent = cons.cyclic_facets(2, 5)
    tetra = cx.simplex_boundary([cx.tvert(i) for i in range(1, 5)])
    edge = cx.simplex_complex([cx.plain(1), cx.plain(2)])
    s0 = cx.SimplicialComplex([[cx.plain(3)], [cx.plain(4)]])
    pairs = [(pent, tetra), (pent, edge), (tetra, s0), (edge, s0)]
    fails = []
    for a, b in pairs:
        joined = a.join(b)
        pa, pb = a.f_vector().counts, b.f_vector().counts
        prod = [0] * (len(pa) + len(pb) - 1)
        for i, va in enumerate(pa):
            for j, vb in enumerate(pb):
                prod[i + j] += va * vb
        got = list(joined.f_vector().counts)
        got += [0] * (len(prod) - len(got))
        if got != prod:
            fails.append("join f-polynomial product fails")
    return _result("constructions: join multiplies f-polynomials", fails, len(pairs))


def check_face_monotonicity(bounds: GridBounds) -> CheckResult:
    complexes = [
        cons.mw_boundary(cons.MWSpec(2, 4, 7)),
        cons.cyclic_facets(2, 6),
        cons.cyclic_facets(3, 6),
    ]
    fails = []
    tested = 0
    for c in complexes:
        base_counts = c.f_vector().counts
        for facet in c.canonical_facets():
            rest = [f for f in c.facets if f != frozenset(facet)]
            smaller = cx.SimplicialComplex(rest)
            small_counts = smaller.f_vector().counts
            tested += 1
            for idx in range(len(base_counts)):
                lo = small_counts[idx] if idx < len(small_counts) else 0
                if lo > base_counts[idx]:
                    fails.append("face count grew after removing a facet")
                    break
    return _result("constructions: removing a facet never adds faces", fails, tested)


# --------------------------------------------------------------------------
# qvectors suite
# --------------------------------------------------------------------------


def check_q_named_examples() -> CheckResult:
    fails: list[str] = []

    def expect(cond: bool, what: str) -> None:
        if not cond:
            fails.append(what)

    hist = qv.vertex_figure_histogram(9, 6).as_dict()
    expect(hist == {1: 256, 2: 128, 3: 64, 4: 64}, "histogram (9,6)")
    expect(qv.vertex_figure_histogram(6, 6).as_dict() == {1: 64}, "histogram n=d")

    expect(qv.gsc_q(qv.QSpec(1, 6, 9)).entries == (512, 1536, 1088), "gsc (1,6,9)")
    expect(qv.gsc_q(qv.QSpec(1, 6, 6)).entries == (64, 0, 0), "gsc (1,6,6)")
    expect(qv.gsc_q(qv.QSpec(2, 6, 9)).entries == (512, 1536, 3072), "gsc (2,6,9)")

    expect(qv.gc_q(qv.QSpec(1, 6, 9)).entries == (32, 448, 1088, 0), "gc (1,6,9)")
    expect(qv.gc_q(qv.QSpec(1, 6, 6)).entries == (32, 0, 0, 0), "gc (1,6,6)")
    expect(qv.gc_q(qv.QSpec(1, 8, 10)).entries == (128, 768, 1280, 0, 0), "gc (1,8,10)")

    for (k, m, expected) in [(1, 0, 0), (1, 3, 17)]:
        r = qv.binomial_identity_check(k, m)
        expect(r.equal and r.left == expected, f"identity ({k},{m})")
    expect(qv.binomial_identity_check(3, 5).equal, "identity (3,5)")

    rows = qv.ray_convergence_report(1, 6, [30])
    row = rows[0]
    expect(row.normalized is not None and row.normalized[1] >= Fraction(95, 100), "ray (1,6,30) dominant mass")
    expect(all(x <= Fraction(5, 100) for i, x in enumerate(row.normalized) if i != 1), "ray (1,6,30) small mass")
    expect(row.dominant_index == 2, "ray (1,6,30) dominant index")
    degenerate = qv.ray_convergence_report(1, 6, [6])[0]
    expect(degenerate.normalized is None and degenerate.dominant_index is None, "ray degenerate row flagged")
    expect(qv.ray_convergence_report(2, 8, [40])[0].dominant_index == 3, "ray (2,8,40) dominant index")

    expect(qv.blind_blind_gc(6, 2).entries[1:] == (48, 16, 0), "elementary (6,2)")
    expect(qv.blind_blind_gc(4, 1).entries[1:] == (8, 0), "elementary (4,1)")
    expect(qv.blind_blind_gc(12, 5).entries[5] == 2**7, "elementary (12,5) at k")

    detector = qv.clbc_scan([("bad", vec.CubicalG(6, (32, 5, -1, 0)))])
    expect(not detector.ok and detector.violations[0] == ("bad", -1), "clbc detector")
    return _result("qvectors: named examples", fails, 20)


def check_q_routes(bounds: GridBounds) -> CheckResult:
    specs = q_specs(bounds.q_k, bounds.q_d, bounds.q_n)

    def one(spec: qv.QSpec) -> list[str]:
        fails = []
        a, b = qv.gsc_q_from_diamonds(spec), qv.gsc_q_closed(spec)
        if a != b:
            fails.append(f"{spec}: gsc routes disagree")
        ga, gb = qv.gc_q_via_gsc(spec), qv.gc_q_closed(spec)
        if ga != gb:
            fails.append(f"{spec}: gc routes disagree")
        if spec.d >= 2 * spec.k + 4 and gb.entries[spec.k + 2] != 0:
            fails.append(f"{spec}: g^c_(k+2) is nonzero")
        hsc = qv.full_hsc_q(spec)
        if vec.hsc_to_gsc(hsc) != b:
            fails.append(f"{spec}: full h^sc disagrees with gsc")
        hc = vec.hsc_to_hc(hsc, spec.d)
        if not vec.check_cubical_DS(hc):
            fails.append(f"{spec}: cubical DS fails")
        if vec.hc_to_gc(hc) != gb:
            fails.append(f"{spec}: full h^c disagrees with gc")
        return fails

    fails = [msg for msgs in grid_map(one, specs) for msg in msgs]
    return _result("qvectors: route agreement and cubical DS", fails, len(specs))


def check_q_route_c(bounds: GridBounds) -> CheckResult:
    specs = [
        qv.QSpec(k, d, n)
        for k in (1,)
        for d in (4, 6)
        for n in range(d, min(bounds.q_n, d + 3) + 1)
    ]

    def one(spec: qv.QSpec) -> list[str]:
        if qv.gsc_q_from_complexes(spec) != qv.gsc_q_closed(spec):
            return [f"{spec}: complex route disagrees with closed form"]
        return []

    fails = [msg for msgs in grid_map(one, specs) for msg in msgs]
    return _result("qvectors: explicit-complex route", fails, len(specs))


def check_histogram(bounds: GridBounds) -> CheckResult:
    fails = []
    tested = 0
    for d in range(2, bounds.q_d + 1):
        for n in range(d, bounds.q_n + 1):
            tested += 1
            hist = qv.vertex_figure_histogram(n, d)
            if hist.total() != 2**n:
                fails.append(f"histogram ({n},{d}) does not partition 2^n")
            for a, count in hist.counts:
                want = 2**d if a == n - d + 1 else 2 ** (n - a)
                if count != want:
                    fails.append(f"histogram ({n},{d}) wrong count at a={a}")
            if n <= bounds.hist_brute_n:
                if qv.vertex_figure_histogram_brute(n, d).counts != hist.counts:
                    fails.append(f"histogram ({n},{d}) differs from enumeration")
    return _result("qvectors: vertex-figure histogram", fails, tested)


def check_binomial_identity(bounds: GridBounds) -> CheckResult:
    fails = []
    tested = 0
    for k in range(1, bounds.bin_k + 1):
        for m in range(0, bounds.bin_m + 1):
            tested += 1
            r = qv.binomial_identity_check(k, m)
            if not r.equal:
                fails.append(f"identity fails at (k={k}, m={m})")
    return _result("qvectors: closing binomial identity", fails, tested)


def check_ray_monotonic(bounds: GridBounds) -> CheckResult:
    fails = []
    pairs = [(1, 6), (1, 8), (2, 8), (2, 10), (3, 10)]
    pairs = [(k, d) for (k, d) in pairs if k <= bounds.q_k and d <= max(bounds.q_d, 10)]
    for k, d in pairs:
        rows = qv.ray_convergence_report(k, d, range(d + 1, d + bounds.ray_n_extra + 1))
        values = [r.normalized[k] for r in rows]
        if any(b < a for a, b in zip(values, values[1:])):
            fails.append(f"dominant coordinate not monotone for (k={k}, d={d})")
        if values and values[-1] > 1:
            fails.append(f"dominant coordinate exceeds 1 for (k={k}, d={d})")
    return _result("qvectors: dominant ray coordinate is monotone", fails, len(pairs))


def check_clbc(bounds: GridBounds) -> CheckResult:
    report = qv.clbc_scan(
        qv.clbc_default_items(bounds.q_k, bounds.q_d, bounds.q_n, bounds.blind_d)
    )
    fails = [] if report.ok else [f"violations: {report.violations[:3]}"]
    return _result("qvectors: g^c_2 nonnegative across families", fails, report.checked)


def check_blind_blind(bounds: GridBounds) -> CheckResult:
    fails = []
    tested = 0
    for d in range(2, bounds.blind_d + 1):
        for k in range(1, d // 2 + 1):
            tested += 1
            gc = qv.blind_blind_gc(d, k)
            if gc.entries[k] != 2 ** (d - k):
                fails.append(f"elementary ({d},{k}): wrong value at index k")
            if any(gc.entries[i] != 0 for i in range(k + 1, d // 2 + 1)):
                fails.append(f"elementary ({d},{k}): tail not zero")
            if gc.entries[0] != 2 ** (d - 1):
                fails.append(f"elementary ({d},{k}): wrong constant term")
    return _result("qvectors: elementary cubical family", fails, tested)


# --------------------------------------------------------------------------
# stackedness suite
# --------------------------------------------------------------------------


def _stack_specs(bounds: GridBounds) -> list[tuple[int, int, int, int]]:
    out = []
    for d in bounds.stack_d:
        for n in range(d, d + bounds.stack_n_extra + 1):
            for a in range(1, n - d + 2):
                out.append((1, d, n, a))
    return out


def check_stack_named_examples() -> CheckResult:
    fails: list[str] = []

    def expect(cond: bool, what: str) -> None:
        if not cond:
            fails.append(what)

    def cset(*idx: int) -> frozenset:
        return frozenset(cx.cvert(i) for i in idx)

    miss1 = st.predicted_missing_faces(1, 6, 9, 1)
    want1 = {
        (st.MISSING_1, cset(1, 3) | {cx.APEX}),
        (st.MISSING_1, cset(1, 4) | {cx.APEX}),
        (st.MISSING_1, cset(1, 5) | {cx.APEX}),
        (st.MISSING_2, cset(2, 4)),
        (st.MISSING_2, cset(2, 5)),
        (st.MISSING_2, cset(3, 5)),
    }
    expect({(cf.tag, cf.vertices) for cf in miss1} == want1, "missing faces (1,6,9,a=1)")

    miss2 = st.predicted_missing_faces(1, 6, 9, 2)
    want2 = {
        (st.MISSING_1, cset(2, 4) | {cx.APEX}),
        (st.MISSING_1, cset(2, 5) | {cx.APEX}),
        (st.MISSING_2, cset(1, 3)),
        (st.MISSING_2, cset(1, 4)),
        (st.MISSING_2, cset(1, 5)),
        (st.MISSING_2, cset(3, 5)),
    }
    expect({(cf.tag, cf.vertices) for cf in miss2} == want2, "missing faces (1,6,9,a=2)")

    tset = frozenset(cx.tvert(j) for j in (1, 2, 3))
    fac2 = st.predicted_stacked_facets(1, 6, 9, 2)
    want_f2 = {
        (st.FACET_I, cset(1, 2) | {cx.APEX} | tset),
        (st.FACET_I, cset(2, 3) | {cx.APEX} | tset),
        (st.FACET_I, cset(3, 4) | {cx.APEX} | tset),
        (st.FACET_I, cset(4, 5) | {cx.APEX} | tset),
        (st.FACET_II, cset(2, 3, 4) | tset),
        (st.FACET_II, cset(2, 4, 5) | tset),
    }
    expect({(cf.tag, cf.vertices) for cf in fac2} == want_f2, "stacked facets (1,6,9,a=2)")
    fac1 = st.predicted_stacked_facets(1, 6, 9, 1)
    expect(len(fac1) == 7, "stacked facet count (1,6,9,a=1)")
    expect(all(len(cf.vertices) == 6 for cf in fac1 + fac2), "facet arity d")

    dia = cons.diamond_boundary(cons.DiamondSpec(1, 6, 9, 2))
    oracle = st.oracle_stacked_facets(dia, 6, 1)
    expect(len(oracle) == 6, "oracle facet count (1,6,9,a=2)")
    brute = st.brute_missing_faces(dia, 3)
    expect(len(brute) == 6, "brute missing count (1,6,9,a=2)")

    tetra = cx.simplex_boundary([cx.plain(i) for i in range(1, 5)])
    expect(st.brute_missing_faces(tetra, 3) == [], "simplex boundary has no small missing faces")
    cyc4 = cx.SimplicialComplex(
        [[cx.plain(1), cx.plain(2)], [cx.plain(2), cx.plain(3)], [cx.plain(3), cx.plain(4)], [cx.plain(4), cx.plain(1)]]
    )
    expect(
        st.brute_missing_faces(cyc4, 2)
        == [frozenset({cx.plain(1), cx.plain(3)}), frozenset({cx.plain(2), cx.plain(4)})],
        "diagonals of the 4-cycle",
    )

    w = st.incompatibility_witness(1, 6, 9)
    expect(w.sigma == "+" + "-" * 8 and w.a == 1 and w.b == 4, "witness indices (1,6,9)")
    expect(w.face == cset(1, 2, 3) | tset, "witness face (1,6,9)")
    expect(w.face_type_in_a == st.FACET_II and w.face_type_in_b == st.UNCLASSIFIED, "witness tags")
    expect(st.incompatibility_witness(2, 8, 12) is not None, "witness (2,8,12)")
    try:
        st.incompatibility_witness(1, 6, 6)
        fails.append("witness produced with n=d")
    except ValueError:
        pass
    return _result("stackedness: named examples", fails, 14)


def check_stack_missing(bounds: GridBounds) -> CheckResult:
    specs = _stack_specs(bounds)

    def one(args: tuple[int, int, int, int]) -> list[str]:
        k, d, n, a = args
        dia = cons.diamond_boundary(cons.DiamondSpec(k, d, n, a))
        predicted = {cf.vertices for cf in st.predicted_missing_faces(k, d, n, a)}
        brute = set(st.brute_missing_faces(dia, k + 2))
        if predicted != brute:
            return [f"missing faces differ at (k={k}, d={d}, n={n}, a={a})"]
        small = [f for f in brute if len(f) <= k]
        if small:
            return [f"neighborliness violated at (k={k}, d={d}, n={n}, a={a})"]
        return []

    fails = [msg for msgs in grid_map(one, specs) for msg in msgs]
    return _result("stackedness: predicted vs brute missing faces", fails, len(specs))


def check_stack_facets(bounds: GridBounds) -> CheckResult:
    specs = _stack_specs(bounds)

    def one(args: tuple[int, int, int, int]) -> list[str]:
        k, d, n, a = args
        fails = []
        dia = cons.diamond_boundary(cons.DiamondSpec(k, d, n, a))
        predicted = {cf.vertices for cf in st.predicted_stacked_facets(k, d, n, a)}
        oracle = set(st.oracle_stacked_facets(dia, d, k))
        if predicted != oracle:
            fails.append(f"stacked facets differ at (k={k}, d={d}, n={n}, a={a})")
        missing = {cf.vertices for cf in st.predicted_missing_faces(k, d, n, a)}
        for facet in predicted:
            if any(miss <= facet for miss in missing):
                fails.append(f"facet contains a missing face at (k={k}, d={d}, n={n}, a={a})")
                break
        closure: set[frozenset] = set()
        for facet in oracle:
            t = tuple(facet)
            for r in range(d - k - 1, d + 1):
                closure.update(map(frozenset, combinations(t, r)))
        for face in dia.faces:
            if len(face) - 1 >= d - k - 2 and face not in closure:
                fails.append(f"boundary face not covered at (k={k}, d={d}, n={n}, a={a})")
                break
        return fails

    fails = [msg for msgs in grid_map(one, specs) for msg in msgs]
    return _result("stackedness: predicted vs oracle stacked facets", fails, len(specs))


def check_stack_witness(bounds: GridBounds) -> CheckResult:
    specs = []
    for k in range(1, bounds.witness_k + 1):
        for d in range(2 * k + 4, bounds.witness_d + 1):
            for n in range(d + 1, bounds.witness_n + 1):
                specs.append((k, d, n))
    fails = []
    for k, d, n in specs:
        w = st.incompatibility_witness(k, d, n)
        if not (w.a < w.b and w.face_type_in_a == st.FACET_II and w.face_type_in_b == st.UNCLASSIFIED):
            fails.append(f"witness invalid at (k={k}, d={d}, n={n})")
    return _result("stackedness: incompatibility witness on the grid", fails, len(specs))


def check_cube_graph(bounds: GridBounds) -> CheckResult:
    fails = []
    for n, m in [(3, 2), (4, 2), (4, 3)]:
        if not st.cube_graph_face_check(n, m):
            fails.append(f"cube graph check fails at ({n},{m})")
        if len(st.cube_subgraph_images(n, m)) != st.cube_face_count(n, m):
            fails.append(f"subcube image count differs at ({n},{m})")
    return _result("stackedness: cube subgraphs are faces", fails, 3)


# --------------------------------------------------------------------------
# suite registry
# --------------------------------------------------------------------------


def suite_transforms(bounds: GridBounds) -> list[CheckResult]:
    return [
        check_transform_named_examples(),
        check_sum_h_equals_top(bounds),
        check_palindromic_roundtrip(bounds),
        check_cubical_ds_cubes(bounds),
        check_resubstitution(bounds),
        check_mchoose_recurrence(bounds),
    ]


def suite_constructions(bounds: GridBounds) -> list[CheckResult]:
    return [
        check_construction_named_examples(),
        check_gale_crosscheck(bounds),
        check_mw_closed_form(bounds),
        check_mw_vertex_link(bounds),
        check_lex_properties(bounds),
        check_diamond_relations(bounds),
        check_contraction(bounds),
        check_join_f_polynomial(bounds),
        check_face_monotonicity(bounds),
    ]


def suite_qvectors(bounds: GridBounds) -> list[CheckResult]:
    return [
        check_q_named_examples(),
        check_q_routes(bounds),
        check_q_route_c(bounds),
        check_histogram(bounds),
        check_binomial_identity(bounds),
        check_ray_monotonic(bounds),
        check_blind_blind(bounds),
        check_clbc(bounds),
    ]


def suite_stackedness(bounds: GridBounds) -> list[CheckResult]:
    return [
        check_stack_named_examples(),
        check_stack_missing(bounds),
        check_stack_facets(bounds),
        check_stack_witness(bounds),
        check_cube_graph(bounds),
    ]


SUITES: dict[str, Callable[[GridBounds], list[CheckResult]]] = {
    "transforms": suite_transforms,
    "constructions": suite_constructions,
    "qvectors": suite_qvectors,
    "stackedness": suite_stackedness,
}


def run_suite(name: str, bounds: GridBounds) -> list[CheckResult]:
    if name == "all":
        out = []
        for key in ("transforms", "constructions", "qvectors", "stackedness"):
            out.extend(SUITES[key](bounds))
        return out
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}")
    return SUITES[name](bounds)
