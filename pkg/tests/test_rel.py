"""Labeling construction, validity checking, and the local moves."""

from __future__ import annotations

import pytest

from completions import tiny_completions
from oracles import canonical_labeling, rel_filter_enumeration

from lplan import samples
from lplan.graph import edge_key
from lplan.oracle import CapExceeded, enumerate_rels
from lplan.pipeline import plan
from lplan.rel import (
    T1,
    T2,
    FourCycle,
    NotAlternating,
    NotFlippable,
    _block_feasible,
    construct_rel,
    flip_edge,
    flip_vertex,
    is_flippable_edge,
    is_flippable_vertex,
    is_valid_rel,
    rotate_four_cycle,
)

PLANNABLE = (
    samples.pentagon_with_pocket,
    samples.hexagon_ring,
    samples.four_cip_eleven_gon,
    samples.two_fan_hexagon,
    samples.chorded_hexagon,
    samples.octagon_with_fan,
)


def _completion(make):
    res = plan(make())
    assert res.ok, res.outcome
    return res.completion


@pytest.mark.parametrize("make", PLANNABLE, ids=lambda f: f.__name__)
def test_construct_rel_is_valid(make):
    ag = _completion(make)
    r = construct_rel(ag)
    v = is_valid_rel(r)
    assert v.ok, v.defect


@pytest.mark.parametrize("make", PLANNABLE, ids=lambda f: f.__name__)
def test_construct_rel_is_deterministic(make):
    ag = _completion(make)
    a = construct_rel(ag)
    b = construct_rel(ag)
    assert a.color == b.color and a.orient == b.orient


def test_pole_rows_follow_the_fixed_pattern():
    ag = _completion(samples.pentagon_with_pocket)
    r = construct_rel(ag)
    poles = set(ag.pole_ids)
    rules = {"N": (T1, "in"), "E": (T2, "in"), "S": (T1, "out"), "W": (T2, "out")}
    for name, (col, sense) in rules.items():
        p = ag.poles[name]
        for w in ag.base.adj[p]:
            if w in poles:
                continue
            assert r.label(p, w) == col
            tail, _ = r.direction(p, w)
            assert (tail == p) == (sense == "out")


# -- the ring-word filter ------------------------------------------------------


def test_block_feasible_rejects_small_rings():
    assert _block_feasible([0b1111] * 3) is None


def test_block_feasible_fixed_ring_is_kept():
    # one dart per class, already in clockwise order: the unique word
    assert _block_feasible([0b0001, 0b0010, 0b0100, 0b1000]) == [1, 2, 4, 8]


def test_block_feasible_missing_class_is_infeasible():
    # no position may take class 2 (T1 incoming), so no ring word exists
    assert _block_feasible([0b1011] * 5) is None


def test_block_feasible_narrows_wide_masks():
    # rotated fixed word: the filter must keep exactly the rotation
    out = _block_feasible([0b1000, 0b0001, 0b0010, 0b0100])
    assert out == [8, 1, 2, 4]


def test_block_feasible_all_open():
    out = _block_feasible([0b1111] * 4)
    assert out == [0b1111] * 4


# -- local moves ---------------------------------------------------------------


def _some_flippable_edge(r):
    poles = set(r.pole_ids)
    for e in sorted(r.color):
        if e[0] in poles or e[1] in poles:
            continue
        if is_flippable_edge(r, *e):
            return e
    return None


def test_flip_edge_twice_restores_the_labeling():
    r = construct_rel(_completion(samples.pentagon_with_pocket))
    e = _some_flippable_edge(r)
    assert e is not None
    before = (dict(r.color), dict(r.orient))
    flip_edge(r, *e)
    assert is_valid_rel(r).ok
    assert r.color[e] != before[0][e]
    flip_edge(r, *e)
    assert (r.color, r.orient) == before


def test_flip_edge_rejects_unlabeled_and_stuck_edges():
    ag = _completion(samples.pentagon_with_pocket)
    r = construct_rel(ag)
    with pytest.raises(NotFlippable):
        flip_edge(r, ag.poles["N"], ag.poles["E"])
    poles = set(r.pole_ids)
    stuck = [e for e in sorted(r.color) if not is_flippable_edge(r, *e)]
    assert stuck, "expected at least one unflippable edge"
    e = stuck[0]
    before = (dict(r.color), dict(r.orient))
    with pytest.raises(NotFlippable):
        flip_edge(r, *e)
    assert (r.color, r.orient) == before  # failed flip must roll back


def test_flip_vertex_twice_restores_the_labeling():
    done = False
    for make in PLANNABLE:
        r = construct_rel(_completion(make))
        poles = set(r.pole_ids)
        for v in r.graph.vertices:
            if v in poles or len(r.graph.rotation[v]) != 4:
                continue
            if not is_flippable_vertex(r, v):
                continue
            before = (dict(r.color), dict(r.orient))
            flip_vertex(r, v)
            assert is_valid_rel(r).ok
            flip_vertex(r, v)
            assert (r.color, r.orient) == before
            done = True
            break
        if done:
            break
    assert done, "no degree-4 flippable vertex in any sample"


def test_flip_vertex_requires_degree_four():
    ag = _completion(samples.pentagon_with_pocket)
    r = construct_rel(ag)
    high = next(
        v
        for v in r.graph.vertices
        if v not in set(r.pole_ids) and len(r.graph.rotation[v]) != 4
    )
    with pytest.raises(NotFlippable):
        flip_vertex(r, high)
    with pytest.raises(NotFlippable):
        flip_vertex(r, ag.poles["N"])


def test_rotate_four_cycle_needs_alternating_labels():
    r = construct_rel(_completion(samples.pentagon_with_pocket))
    # a face of the completion is a triangle, so any 4-tuple with a repeat
    with pytest.raises(NotAlternating):
        rotate_four_cycle(r, FourCycle((1, 2, 3, 2)))


def test_rotate_four_cycle_round_trip():
    # find an alternating 4-cycle in some sample's labeling and rotate it
    for make in PLANNABLE:
        r = construct_rel(_completion(make))
        g = r.graph
        poles = set(r.pole_ids)
        hit = None
        for a in g.vertices:
            if a in poles:
                continue
            for b in g.adj[a]:
                for c in g.adj[b]:
                    if c == a:
                        continue
                    for d in g.adj[c]:
                        if d == b or d == a or a not in g.adj[d]:
                            continue
                        if poles & {b, c, d}:
                            continue
                        cyc = FourCycle((a, b, c, d))
                        try:
                            probe = r.clone()
                            sense = rotate_four_cycle(probe, cyc)
                        except (NotAlternating, NotFlippable):
                            continue
                        if sense != "empty":
                            hit = (cyc, sense)
                            break
                    if hit:
                        break
                if hit:
                    break
            if hit:
                break
        if hit is None:
            continue
        cyc, sense = hit
        before = (dict(r.color), dict(r.orient))
        assert rotate_four_cycle(r, cyc) == sense
        assert is_valid_rel(r).ok
        assert (r.color, r.orient) != before
        back = rotate_four_cycle(r, cyc)
        assert back in ("cw", "ccw") and back != sense
        assert (r.color, r.orient) == before
        return
    pytest.skip("no rotatable interior 4-cycle in the sample labelings")


# -- validity negatives --------------------------------------------------------


def test_is_valid_rel_catches_corruption():
    r = construct_rel(_completion(samples.pentagon_with_pocket))
    poles = set(r.pole_ids)
    inner_edge = next(e for e in sorted(r.color) if not (set(e) & poles))

    bad = r.clone()
    del bad.color[inner_edge]
    del bad.orient[inner_edge]
    assert not is_valid_rel(bad).ok

    bad = r.clone()
    bad.color[inner_edge] = "T3"
    assert not is_valid_rel(bad).ok

    bad = r.clone()
    tail, head = bad.orient[inner_edge]
    bad.orient[inner_edge] = (tail, tail)
    assert not is_valid_rel(bad).ok

    pole_edge = next(
        e for e in sorted(r.color) if len(set(e) & poles) == 1
    )
    bad = r.clone()
    bad.color[pole_edge] = T2 if bad.color[pole_edge] == T1 else T1
    assert not is_valid_rel(bad).ok


# -- exhaustive enumeration at desk scale ---------------------------------------


def test_enumerate_rels_matches_the_filter_oracle():
    for ag in tiny_completions():
        got = {canonical_labeling(r.color, r.orient) for r in enumerate_rels(ag)}
        assert got == rel_filter_enumeration(ag)
        assert canonical_labeling(*(lambda r: (r.color, r.orient))(construct_rel(ag))) in got


def test_enumerate_rels_enforces_its_cap():
    ag = _completion(samples.octagon_with_fan)
    with pytest.raises(CapExceeded):
        enumerate_rels(ag, cap=2)
