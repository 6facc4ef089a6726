"""Test-support generators and brute-force references.

Nothing here is needed to produce a plan; these exist so the
production algorithms can be checked against exhaustive or randomized
counterparts at desk scale.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass

from .graph import EmbeddedGraph, VertexId, edge_key, find_separating_triangles, validate_ptpg
from .layout import FloorPlan, Rect, _share_wall
from .paths import AugmentedGraph, attach_outside
from .rel import _BLOCK_ORDER, Rel, T1, T2, is_valid_rel

_GEN_ATTEMPTS = 128
_REPAIR_ROUNDS = 64
_STRETCH_CAP = 400_000


class GenerationFailed(RuntimeError):
    pass


class CapExceeded(RuntimeError):
    pass


class ScaleExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class GenSpec:
    n: int
    seed: int
    cip_target: int | None = None


# -- random PTPG generation ---------------------------------------------------


def _triangle() -> EmbeddedGraph:
    return EmbeddedGraph(
        rotation={1: (2, 3), 2: (3, 1), 3: (1, 2)}, outer=(1, 2, 3), labels={}
    )


def _grow_once(g: EmbeddedGraph, rng: random.Random) -> EmbeddedGraph:
    n = len(g.outer)
    arcs = []
    for start in range(n):
        for length in (2, 3, 4):
            if length > n:
                continue
            arc = tuple(g.outer[(start + k) % n] for k in range(length))
            # Skip arcs whose non-consecutive vertices are already adjacent:
            # the new apex would close a separating triangle over the arc.
            clean = all(
                arc[j] not in g.adj[arc[i]]
                for i in range(length)
                for j in range(i + 2, length)
            )
            if clean:
                arcs.append(arc)
    arc = arcs[rng.randrange(len(arcs))]
    return attach_outside(g, arc, max(g.vertices) + 1)


def flip_interior_edge(g: EmbeddedGraph, u: VertexId, v: VertexId) -> EmbeddedGraph | None:
    """Replace diagonal (u, v) of its two incident triangles by the other one.

    Returns None when the flip is not available: boundary edge, shared
    apex, apex pair already adjacent, or an endpoint that would drop
    below triangulation degree.
    """
    e = edge_key(u, v)
    if e not in g.edges:
        return None
    pos = g.outer_pos
    if u in pos and v in pos:
        n = len(g.outer)
        if (pos[u] + 1) % n == pos[v] or (pos[v] + 1) % n == pos[u]:
            return None
    faces = g.faces
    f1 = faces[g.dart_face[(u, v)]]
    f2 = faces[g.dart_face[(v, u)]]
    if g.outer_face_index in (g.dart_face[(u, v)], g.dart_face[(v, u)]):
        return None
    p = next(w for w in f1 if w not in (u, v))
    q = next(w for w in f2 if w not in (u, v))
    if p == q or q in g.adj[p]:
        return None
    for end in (u, v):
        # An interior vertex of degree 3 would sit inside the triangle of
        # its own neighbours, so never flip below degree 4 there.
        floor = 2 if end in g.outer_set else 4
        if len(g.adj[end]) - 1 < floor:
            return None
    rot = {w: list(ns) for w, ns in g.rotation.items()}
    rot[u].remove(v)
    rot[v].remove(u)
    rot[p].insert(rot[p].index(v) + 1, q)
    rot[q].insert(rot[q].index(u) + 1, p)
    return EmbeddedGraph(
        rotation={w: tuple(ns) for w, ns in rot.items()}, outer=g.outer, labels=g.labels
    )


def _repair(g: EmbeddedGraph) -> EmbeddedGraph | None:
    for _ in range(_REPAIR_ROUNDS):
        bad = find_separating_triangles(g)
        if not bad:
            return g
        tri = bad[0]
        pairs = [(tri[0], tri[1]), (tri[0], tri[2]), (tri[1], tri[2])]
        for u, v in pairs:
            g2 = flip_interior_edge(g, u, v)
            if g2 is not None:
                g = g2
                break
        else:
            return None
    return None


def _generate_once(n: int, seed: int) -> EmbeddedGraph | None:
    rng = random.Random(seed)
    g = _triangle()
    while len(g.vertices) < n:
        g = _grow_once(g, rng)
    g = _repair(g)
    if g is None or not validate_ptpg(g).verdict:
        return None
    return g


def generate_ptpg(spec: GenSpec) -> EmbeddedGraph:
    """Deterministic random PTPG with spec.n vertices.

    With cip_target set, nearby derived seeds are scanned for a graph
    with exactly that many corner implying paths.
    """
    if spec.n < 3:
        raise ValueError("need at least three vertices")
    from .boundary import find_cips

    for attempt in range(_GEN_ATTEMPTS):
        g = _generate_once(spec.n, (spec.seed + 0x9E3779B1 * attempt) & 0x7FFFFFFF)
        if g is None:
            continue
        if spec.cip_target is None or len(find_cips(g)) == spec.cip_target:
            return g
    raise GenerationFailed(f"no graph for n={spec.n} seed={spec.seed} cips={spec.cip_target}")


# -- exhaustive REL enumeration -----------------------------------------------


def _partial_block_ok(r: Rel, v: VertexId) -> bool:
    ring = r.graph.rotation[v]
    seq = []
    for u in ring:
        e = edge_key(u, v)
        if e not in r.color:
            continue
        tail, _ = r.orient[e]
        seq.append(_BLOCK_ORDER.index(r.color[e] + ("out" if tail == v else "in")))
    descents = sum(1 for i in range(len(seq)) if seq[i] > seq[(i + 1) % len(seq)])
    return descents <= 1


def enumerate_rels(ag: AugmentedGraph, cap: int = 12) -> list[Rel]:
    """Every valid label/direction assignment on ag, by brute force.

    Pole-incident edges are forced by the pole rules, so the search
    space is the interior edges only: 4 states each.
    """
    poles = set(ag.pole_ids)
    g = ag.base
    free = sorted(e for e in g.edges if e[0] not in poles and e[1] not in poles)
    if len(free) > cap:
        raise CapExceeded(f"{len(free)} interior edges exceed cap {cap}")
    r = Rel(graph=g, poles=dict(ag.poles), color={}, orient={})
    for name, p in ag.poles.items():
        color = T1 if name in ("N", "S") else T2
        for w in g.adj[p]:
            if w in poles:
                continue
            e = edge_key(w, p)
            r.color[e] = color
            r.orient[e] = (w, p) if name in ("N", "E") else (p, w)

    out: list[Rel] = []
    inner = set(g.vertices) - poles

    def rec(i: int) -> None:
        if i == len(free):
            if is_valid_rel(r).ok:
                out.append(r.clone())
            return
        e = free[i]
        u, v = e
        for color, orient in (
            (T1, (u, v)), (T1, (v, u)), (T2, (u, v)), (T2, (v, u)),
        ):
            r.color[e] = color
            r.orient[e] = orient
            if all(_partial_block_ok(r, w) for w in e if w in inner):
                rec(i + 1)
            del r.color[e]
            del r.orient[e]

    rec(0)
    return out


# -- brute-force stretcher ----------------------------------------------------


_SIDES = ("W", "E", "S", "N")


def _cover_cells(state: dict[VertexId, Rect]) -> set[tuple[int, int]]:
    cells = set()
    for rc in state.values():
        for x in range(rc.x1, rc.x2):
            for y in range(rc.y1, rc.y2):
                cells.add((x, y))
    return cells


def _concave_corners(cells: set[tuple[int, int]], w: int, h: int) -> int | None:
    """Count of 3-covered lattice points; None on a diagonal point pinch."""
    count = 0
    for x in range(w + 1):
        for y in range(h + 1):
            quad = [
                (x - 1, y - 1) in cells,
                (x, y - 1) in cells,
                (x - 1, y) in cells,
                (x, y) in cells,
            ]
            k = sum(quad)
            if k == 3:
                count += 1
            elif k == 2 and quad[0] == quad[3]:
                return None
    return count


def _adjacency(state: dict[VertexId, Rect]) -> dict[tuple[VertexId, VertexId], str]:
    out = {}
    ids = sorted(state)
    for i, a in enumerate(ids):
        for b in ids[i + 1 :]:
            w = _share_wall(state[a], state[b])
            if w:
                out[(a, b)] = w
    return out


def _disjoint(state: dict[VertexId, Rect]) -> bool:
    ids = sorted(state)
    for i, a in enumerate(ids):
        ra = state[a]
        for b in ids[i + 1 :]:
            rb = state[b]
            if ra.x1 < rb.x2 and rb.x1 < ra.x2 and ra.y1 < rb.y2 and rb.y1 < ra.y2:
                return False
    return True


def _wall_on_outline(state: dict[VertexId, Rect], cells, w: int, h: int, m: VertexId, side: str) -> bool:
    rc = state[m]
    if side == "E":
        probe = [(rc.x2, y) for y in range(rc.y1, rc.y2)]
    elif side == "W":
        probe = [(rc.x1 - 1, y) for y in range(rc.y1, rc.y2)]
    elif side == "N":
        probe = [(x, rc.y2) for x in range(rc.x1, rc.x2)]
    else:
        probe = [(x, rc.y1 - 1) for x in range(rc.x1, rc.x2)]
    return any(not (0 <= x < w and 0 <= y < h) or (x, y) not in cells for x, y in probe)


def _moved(rc: Rect, side: str, d: int) -> Rect | None:
    x1, y1, x2, y2 = rc.x1, rc.y1, rc.x2, rc.y2
    if side == "E":
        x2 += d
    elif side == "W":
        x1 -= d
    elif side == "N":
        y2 += d
    else:
        y1 -= d
    if x2 - x1 < 1 or y2 - y1 < 1:
        return None
    return Rect(x1, y1, x2, y2)


def stretcher_is_trivial(fp: FloorPlan) -> bool:
    """True when some sequence of outer-wall unit moves loses a concave corner.

    Exhaustive search over whole-wall stretch/shrink moves that keep
    every module inside the original bounding box and preserve the
    module adjacency relation exactly.
    """
    if len(fp.rects) > 10:
        raise ScaleExceeded(f"{len(fp.rects)} modules exceed the oracle scale")
    w, h = fp.width, fp.height
    init = dict(fp.rects)
    target_adj = _adjacency(init)
    init_cells = _cover_cells(init)
    init_corners = _concave_corners(init_cells, w, h)
    if init_corners is None:
        raise ValueError("initial plan has a point pinch")
    if init_corners == 0:
        return False

    ids = sorted(init)
    start = tuple(init[m] for m in ids)
    seen = {start}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        state = dict(zip(ids, cur))
        cells = _cover_cells(state)
        for m in ids:
            for side in _SIDES:
                if not _wall_on_outline(state, cells, w, h, m, side):
                    continue
                for d in (1, -1):
                    rc = _moved(state[m], side, d)
                    if rc is None or rc.x1 < 0 or rc.y1 < 0 or rc.x2 > w or rc.y2 > h:
                        continue
                    nxt = dict(state)
                    nxt[m] = rc
                    key = tuple(nxt[i] for i in ids)
                    if key in seen:
                        continue
                    seen.add(key)
                    if len(seen) > _STRETCH_CAP:
                        raise ScaleExceeded("stretch state space exceeds the oracle cap")
                    if not _disjoint(nxt) or _adjacency(nxt) != target_adj:
                        continue
                    corners = _concave_corners(_cover_cells(nxt), w, h)
                    if corners is None:
                        continue
                    if corners < init_corners:
                        return True
                    queue.append(key)
    return False
