import pytest

from lplan import samples
from lplan.graph import (
    EmbeddedGraph,
    InconsistentEmbedding,
    common_neighbors,
    cyclic_eq,
    edge_key,
    find_separating_triangles,
    is_biconnected,
    rotate_min,
    validate_ptpg,
    vertices_inside_cycle,
)
from lplan.oracle import GenSpec, generate_ptpg

from oracles import brute_separating_triangles, brute_triangles, walk_faces

ALL_SAMPLES = (
    samples.pentagon_with_pocket,
    samples.two_fan_hexagon,
    samples.chorded_hexagon,
    samples.hexagon_ring,
    samples.four_cip_eleven_gon,
    samples.five_cip_thirteen_gon,
    samples.six_cip_twelve_gon,
    samples.octagon_with_fan,
    samples.nested_triangle,
    samples.wheel4,
)


def test_edge_key_and_cyclic_helpers():
    assert edge_key(4, 2) == (2, 4)
    assert rotate_min((3, 1, 2)) == (1, 2, 3)
    assert cyclic_eq((1, 2, 3), (2, 3, 1))
    assert not cyclic_eq((1, 2, 3), (1, 3, 2))


@pytest.mark.parametrize("make", ALL_SAMPLES, ids=lambda f: f.__name__)
def test_euler_formula_holds(make):
    g = make()
    v = len(g.vertices)
    e = len(g.edges)
    f = len(g.faces)
    assert v - e + f == 2


@pytest.mark.parametrize("make", ALL_SAMPLES, ids=lambda f: f.__name__)
def test_faces_match_naive_dart_walk(make):
    g = make()
    ours = {rotate_min(f) for f in g.faces} | {rotate_min(f[::-1]) for f in g.faces}
    naive = {rotate_min(f) for f in walk_faces(g)}
    assert naive <= ours
    assert len(walk_faces(g)) == len(g.faces)
    # every dart sits in exactly one face
    assert sum(len(f) for f in g.faces) == 2 * len(g.edges)


def test_outer_face_is_the_boundary():
    g = samples.pentagon_with_pocket()
    outer = g.faces[g.outer_face_index]
    assert cyclic_eq(outer, g.outer) or cyclic_eq(outer, g.outer[::-1])


def test_inconsistent_rotation_rejected():
    with pytest.raises(InconsistentEmbedding):
        EmbeddedGraph(rotation={1: (2,), 2: (), 3: (1,)}, outer=(1, 2, 3))


def test_tiny_outer_cycle_rejected():
    with pytest.raises(InconsistentEmbedding):
        EmbeddedGraph(rotation={1: (2,), 2: (1,)}, outer=(1, 2))


@pytest.mark.parametrize("make", ALL_SAMPLES, ids=lambda f: f.__name__)
def test_common_neighbors_equal_set_intersection(make):
    g = make()
    verts = sorted(g.vertices)
    for u in verts:
        for v in verts:
            if u < v:
                assert set(common_neighbors(g, u, v)) == g.adj[u] & g.adj[v]


@pytest.mark.parametrize("make", ALL_SAMPLES, ids=lambda f: f.__name__)
def test_separating_triangles_match_oracle(make):
    g = make()
    ours = {frozenset(t) for t in find_separating_triangles(g)}
    assert ours == brute_separating_triangles(g)


@pytest.mark.parametrize("seed", range(12))
def test_separating_triangles_match_oracle_generated(seed):
    g = generate_ptpg(GenSpec(n=10 + seed, seed=seed))
    assert {frozenset(t) for t in find_separating_triangles(g)} == set()
    assert brute_separating_triangles(g) == set()


def test_nested_triangle_flagged():
    g = samples.nested_triangle()
    rep = validate_ptpg(g)
    assert not rep.verdict
    assert (2, 4, 6) in rep.separating_triangles
    assert vertices_inside_cycle(g, (2, 4, 6))


def test_wheel_is_a_valid_ptpg():
    assert validate_ptpg(samples.wheel4()).verdict


@pytest.mark.parametrize(
    "make",
    (
        samples.pentagon_with_pocket,
        samples.chorded_hexagon,
        samples.hexagon_ring,
        samples.four_cip_eleven_gon,
        samples.octagon_with_fan,
    ),
    ids=lambda f: f.__name__,
)
def test_plannable_samples_are_ptpgs(make):
    rep = validate_ptpg(make())
    assert rep.verdict, rep


def test_biconnectivity_negative():
    # pendant vertex 4 hangs inside the triangle, so 1 is a cut vertex
    g = EmbeddedGraph(
        rotation={1: (2, 4, 3), 2: (3, 1), 3: (1, 2), 4: (1,)},
        outer=(1, 2, 3),
    )
    assert not is_biconnected(g)
    assert not validate_ptpg(g).verdict


def test_triangle_bruteforcer_sees_all_faces():
    g = samples.pentagon_with_pocket()
    tri_sets = {frozenset(t) for t in brute_triangles(g)}
    for f in g.inner_faces:
        assert frozenset(f) in tri_sets
