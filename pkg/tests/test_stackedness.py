import pytest

from polygv.complexes import APEX, SimplicialComplex, cvert, plain, simplex_boundary, tvert
from polygv.constructions import DiamondSpec, diamond_boundary
from polygv.stackedness import (
    FACET_I,
    FACET_II,
    MISSING_1,
    MISSING_2,
    UNCLASSIFIED,
    brute_missing_faces,
    classify_face,
    cube_face_count,
    cube_graph_face_check,
    cube_subgraph_images,
    incompatibility_witness,
    oracle_stacked_facets,
    predicted_missing_faces,
    predicted_stacked_facets,
)


def cset(*idx):
    return frozenset(cvert(i) for i in idx)


TSET = frozenset(tvert(j) for j in (1, 2, 3))


def test_predicted_missing_169_a1():
    got = {(cf.tag, cf.vertices) for cf in predicted_missing_faces(1, 6, 9, 1)}
    assert got == {
        (MISSING_1, cset(1, 3) | {APEX}),
        (MISSING_1, cset(1, 4) | {APEX}),
        (MISSING_1, cset(1, 5) | {APEX}),
        (MISSING_2, cset(2, 4)),
        (MISSING_2, cset(2, 5)),
        (MISSING_2, cset(3, 5)),
    }


def test_predicted_missing_169_a2():
    got = {(cf.tag, cf.vertices) for cf in predicted_missing_faces(1, 6, 9, 2)}
    assert got == {
        (MISSING_1, cset(2, 4) | {APEX}),
        (MISSING_1, cset(2, 5) | {APEX}),
        (MISSING_2, cset(1, 3)),
        (MISSING_2, cset(1, 4)),
        (MISSING_2, cset(1, 5)),
        (MISSING_2, cset(3, 5)),
    }


def test_missing_type1_count_is_isolated_sets_with_min_a():
    for a in range(1, 5):
        faces = predicted_missing_faces(1, 6, 9, a)
        type1 = [cf for cf in faces if cf.tag == MISSING_1]
        assert all(APEX in cf.vertices and min(cf.vertices & cset(*range(1, 6))) == cvert(a) for cf in type1)


def test_parameter_validation():
    with pytest.raises(ValueError):
        predicted_missing_faces(1, 5, 9, 1)  # d < 2k+4
    with pytest.raises(ValueError):
        predicted_missing_faces(1, 6, 9, 5)  # a out of range


def test_brute_missing_trivial_cases():
    assert brute_missing_faces(simplex_boundary([plain(i) for i in range(1, 5)]), 3) == []
    cyc4 = SimplicialComplex(
        [[plain(1), plain(2)], [plain(2), plain(3)], [plain(3), plain(4)], [plain(4), plain(1)]]
    )
    assert brute_missing_faces(cyc4, 2) == [
        frozenset({plain(1), plain(3)}),
        frozenset({plain(2), plain(4)}),
    ]
    with pytest.raises(ValueError):
        brute_missing_faces(cyc4, 5)


def test_brute_equals_predicted_169():
    for a in range(1, 5):
        dia = diamond_boundary(DiamondSpec(1, 6, 9, a))
        predicted = {cf.vertices for cf in predicted_missing_faces(1, 6, 9, a)}
        assert predicted == set(brute_missing_faces(dia, 3)), a


def test_predicted_facets_169_a2():
    got = {(cf.tag, cf.vertices) for cf in predicted_stacked_facets(1, 6, 9, 2)}
    assert got == {
        (FACET_I, cset(1, 2) | {APEX} | TSET),
        (FACET_I, cset(2, 3) | {APEX} | TSET),
        (FACET_I, cset(3, 4) | {APEX} | TSET),
        (FACET_I, cset(4, 5) | {APEX} | TSET),
        (FACET_II, cset(2, 3, 4) | TSET),
        (FACET_II, cset(2, 4, 5) | TSET),
    }


def test_predicted_facets_169_a1_count():
    faces = predicted_stacked_facets(1, 6, 9, 1)
    assert len(faces) == 7
    assert sum(1 for cf in faces if cf.tag == FACET_II) == 3
    assert all(len(cf.vertices) == 6 for cf in faces)


def test_oracle_equals_predicted_169():
    for a in range(1, 5):
        dia = diamond_boundary(DiamondSpec(1, 6, 9, a))
        predicted = {cf.vertices for cf in predicted_stacked_facets(1, 6, 9, a)}
        assert predicted == set(oracle_stacked_facets(dia, 6, 1)), a


def test_oracle_rejects_subsets_with_missing_pairs():
    # {c1, c3} is a missing face of the a=2 diamond, so no oracle facet holds it
    dia = diamond_boundary(DiamondSpec(1, 6, 9, 2))
    facets = oracle_stacked_facets(dia, 6, 1)
    assert facets and all(not cset(1, 3) <= f for f in facets)


def test_facets_avoid_missing_faces():
    for a in range(1, 5):
        missing = {cf.vertices for cf in predicted_missing_faces(1, 6, 9, a)}
        for cf in predicted_stacked_facets(1, 6, 9, a):
            assert not any(m <= cf.vertices for m in missing)


def test_classify_face():
    assert classify_face(cset(2, 4) | {APEX}, 1, 6, 9, 2) == MISSING_1
    assert classify_face(cset(1, 3), 1, 6, 9, 2) == MISSING_2
    assert classify_face(cset(1, 2) | {APEX} | TSET, 1, 6, 9, 2) == FACET_I
    assert classify_face(cset(2, 3, 4) | TSET, 1, 6, 9, 2) == FACET_II
    # same face, judged in another diamond
    assert classify_face(cset(1, 2, 3) | TSET, 1, 6, 9, 4) == UNCLASSIFIED
    # faces through x or with stray labels never classify
    assert classify_face(cset(2, 6), 1, 6, 9, 2) == UNCLASSIFIED
    assert classify_face({plain(1)} | cset(2, 4), 1, 6, 9, 2) == UNCLASSIFIED


def test_witness_169():
    w = incompatibility_witness(1, 6, 9)
    assert w.sigma == "+" + "-" * 8
    assert (w.a, w.b) == (1, 4)
    assert w.face == cset(1, 2, 3) | TSET
    assert w.face_type_in_a == FACET_II
    assert w.face_type_in_b == UNCLASSIFIED
    obj = w.to_json_obj()
    assert obj["face"] == ["c1", "c2", "c3", "t1", "t2", "t3"]
    assert set(obj) == {"k", "d", "n", "sigma", "a", "b", "face", "face_type_in_a", "face_type_in_b"}


def test_witness_2_8_12():
    w = incompatibility_witness(2, 8, 12)
    assert w.a < w.b
    assert w.face_type_in_a == FACET_II
    assert w.face_type_in_b == UNCLASSIFIED


def test_witness_degenerate():
    with pytest.raises(ValueError):
        incompatibility_witness(1, 6, 6)


@pytest.mark.parametrize("n,m", [(3, 2), (4, 2), (4, 3)])
def test_cube_graph_face_check(n, m):
    assert cube_graph_face_check(n, m) is True


def test_cube_subgraph_images_are_exactly_faces():
    images = cube_subgraph_images(3, 2)
    assert len(images) == 6 == cube_face_count(3, 2)
    assert len(cube_subgraph_images(4, 3)) == 8 == cube_face_count(4, 3)


def test_cube_graph_range_guard():
    with pytest.raises(ValueError):
        cube_graph_face_check(5, 2)
    with pytest.raises(ValueError):
        cube_graph_face_check(3, 0)
