from __future__ import annotations

import pytest

from triblock.constructions import (
    Gadget,
    GluingMismatch,
    build_skeleton,
    gadget_a,
    gadget_b,
    substitute_b5a,
    verify_extremal,
)
from triblock.patterns import THETA6_2, cycle_graph, is_free
from triblock.plane_graph import normalize_edge


def edge_face_lengths(pg, edge):
    return sorted(pg.faces[f].length for f in pg.faces_of_edge(edge))


def test_gadget_a_counts_and_regularity():
    pg = gadget_a().plane_graph
    assert (pg.n, pg.m, pg.face_count) == (30, 60, 32)
    assert all(pg.graph.degree(v) == 4 for v in range(pg.n))


def test_gadget_a_edge_face_types():
    pg = gadget_a().plane_graph
    for edge in pg.graph.edges:
        assert edge_face_lengths(pg, edge) == [3, 5]


def test_gadget_b_counts_and_regularity():
    pg = gadget_b().plane_graph
    assert (pg.n, pg.m, pg.face_count) == (50, 100, 52)
    assert all(pg.graph.degree(v) == 4 for v in range(pg.n))


def test_gadget_b_edge_face_types():
    # The two junction pentagons are bounded by pentagon rings on both
    # sides while the gadget stands alone; every other edge shows the
    # one-triangle-one-pentagon pattern that survives gluing.
    g = gadget_b()
    pg = g.plane_graph
    junction = set()
    for pent in (g.red_pentagon, g.blue_pentagon):
        ring = list(pent)
        junction.update(
            normalize_edge(ring[i], ring[(i + 1) % 5]) for i in range(5)
        )
    assert len(junction) == 10
    for edge in pg.graph.edges:
        expected = [5, 5] if edge in junction else [3, 5]
        assert edge_face_lengths(pg, edge) == expected, edge


def test_gadgets_have_no_four_cycles():
    c4 = cycle_graph(4)
    assert is_free(gadget_a().plane_graph, c4)
    assert is_free(gadget_b().plane_graph, c4)


def test_gadget_pentagons_are_faces():
    for g in (gadget_a(), gadget_b()):
        for pent in (g.red_pentagon, g.blue_pentagon):
            ring = frozenset(
                normalize_edge(pent[i], pent[(i + 1) % 5]) for i in range(5)
            )
            assert any(face.edge_set == ring for face in g.plane_graph.faces)
        assert not set(g.red_pentagon) & set(g.blue_pentagon)


def test_gadget_rejects_fake_pentagon():
    good = gadget_a()
    with pytest.raises(GluingMismatch):
        Gadget(
            plane_graph=good.plane_graph,
            red_pentagon=(0, 1, 2, 3, 7),
            blue_pentagon=good.blue_pentagon,
        )


@pytest.mark.parametrize("k", [0, 1, 2])
def test_skeleton_counts(k: int):
    skeleton = build_skeleton(k)
    pg = skeleton.plane_graph
    assert skeleton.k == k
    assert (pg.n, pg.m) == (70 * k + 30, 150 * k + 60)
    lengths = sorted(f.length for f in pg.faces)
    assert lengths.count(3) == 50 * k + 20
    assert lengths.count(5) == 30 * k + 12
    assert len(lengths) == 80 * k + 32
    assert len(skeleton.triangle_face_ids()) == 50 * k + 20


def test_skeleton_edge_face_types_are_strict():
    pg = build_skeleton(1).plane_graph
    for edge in pg.graph.edges:
        assert edge_face_lengths(pg, edge) == [3, 5]


def test_skeleton_is_c4_free():
    assert is_free(build_skeleton(1).plane_graph, cycle_graph(4))


def test_skeleton_rejects_negative_k():
    with pytest.raises(ValueError):
        build_skeleton(-1)


@pytest.mark.parametrize("k", [0, 1])
def test_substitution_counts(k: int):
    graph = substitute_b5a(build_skeleton(k))
    assert (graph.n, graph.m) == (170 * k + 70, 450 * k + 180)
    lengths = sorted(f.length for f in graph.faces)
    # every skeleton triangle becomes five triangles; pentagons survive
    assert lengths.count(3) == 5 * (50 * k + 20)
    assert lengths.count(5) == 30 * k + 12
    assert lengths.count(3) + lengths.count(5) == len(lengths)


def test_substitution_hits_the_bound_exactly():
    graph = substitute_b5a(build_skeleton(0))
    assert 17 * graph.m == 45 * (graph.n - 2)


def test_substituted_graph_contains_the_short_chord_theta():
    # Tightness is specific to the long chord: the family is far above the
    # 18/7 bound, so it cannot be free of the distance-2 variant.
    graph = substitute_b5a(build_skeleton(0))
    assert 7 * graph.m > 18 * (graph.n - 2)
    assert not is_free(graph, THETA6_2)


@pytest.mark.parametrize("k", [0, 1, 2])
def test_verify_extremal(k: int):
    report = verify_extremal(k)
    assert report.ok
    assert report.failures == ()
    assert report.counts_ok
    assert report.pattern_free is True
    assert report.blocks_all_b5a
    assert report.all_g_zero
    assert report.bound_equality
    cert = report.certificate
    assert cert.identities_ok and cert.all_nonpositive and cert.bound_holds
    assert all(c.g_c == 0 for c in cert.clusters)
    assert len(cert.clusters) == 50 * k + 20


def test_verify_extremal_report_json():
    report = verify_extremal(0, check_freeness=False)
    data = report.to_json_dict()
    assert data["k"] == 0
    assert data["n"] == 70 and data["m"] == 180
    assert data["pattern_free"] is None
    assert data["failures"] == []
    assert data["ok"] is True
    assert data["certificate"]["spec"] == "theta6-1"


def test_skeleton_extends_the_previous_one():
    # Nesting only adds outer rings: the k=0 gadget sits unchanged inside
    # the k=1 skeleton with the same vertex ids.
    small = build_skeleton(0).plane_graph
    large = build_skeleton(1).plane_graph
    assert small.graph.edges <= large.graph.edges
