"""Rectangular floor plans from regular edge labelings.

Every interior vertex becomes an axis-aligned rectangle.  The wall
segments of the plan correspond to faces of the two color subgraphs:
faces of the T2 subgraph are the horizontal segments, faces of the T1
subgraph the vertical ones.  A module's bottom wall is the T2 face
entered just after its last outgoing T2 edge, its top wall the face
after its last incoming T2 edge; left and right walls come from the
T1 subgraph the same way.  Coordinates are longest-path depths of
those segment nodes, which yields the unique compact integer drawing.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .graph import EmbeddedGraph, VertexId, edge_key, rotate_min
from .rel import T1, T2, Rel

FLOOR = "FLOOR"
CEILING = "CEILING"
WEST = "WEST"
EAST = "EAST"


class NotCornerModule(ValueError):
    pass


class PointContactAmbiguity(ValueError):
    pass


@dataclass(frozen=True)
class Rect:
    x1: int
    y1: int
    x2: int
    y2: int

    @property
    def width(self) -> int:
        return self.x2 - self.x1

    @property
    def height(self) -> int:
        return self.y2 - self.y1

    def contains_point(self, x: int, y: int) -> bool:
        return self.x1 <= x <= self.x2 and self.y1 <= y <= self.y2


@dataclass(frozen=True)
class FloorPlan:
    rects: Mapping[VertexId, Rect]
    width: int
    height: int
    labels: Mapping[VertexId, str]


@dataclass(frozen=True)
class CornerProfile:
    """Concave corner left by removing the north-east module."""

    nx: int
    ny: int
    notch: Rect


@dataclass(frozen=True)
class NonTrivialityVerdict:
    nontrivial: bool
    walk: tuple[VertexId, ...]
    witness: tuple[VertexId, VertexId, VertexId] | None


# -- segment faces -----------------------------------------------------------


def _sub_rotation(r: Rel, color: str) -> dict[VertexId, tuple[VertexId, ...]]:
    out: dict[VertexId, tuple[VertexId, ...]] = {}
    for v, nbrs in r.graph.rotation.items():
        kept = tuple(u for u in nbrs if r.color.get(edge_key(u, v)) == color)
        if kept:
            out[v] = kept
    return out


def _face_from_dart(rot: dict[VertexId, tuple[VertexId, ...]], u: VertexId, v: VertexId):
    start = (u, v)
    cur = start
    walk = []
    limit = 2 * sum(len(ns) for ns in rot.values()) + 2
    while True:
        walk.append(cur)
        a, b = cur
        ring = rot[b]
        nxt = ring[(ring.index(a) + 1) % len(ring)]
        cur = (b, nxt)
        if cur == start:
            return rotate_min(tuple(walk))
        if len(walk) > limit:
            raise ValueError("segment face walk does not close")


def _last_of_block(r: Rel, v: VertexId, block: str) -> VertexId:
    ring = r.graph.rotation[v]
    states = []
    for u in ring:
        e = edge_key(u, v)
        tail, _ = r.orient[e]
        states.append(r.color[e] + ("out" if tail == v else "in"))
    d = len(ring)
    for i in range(d):
        if states[i] == block and states[(i + 1) % d] != block:
            return ring[i]
    raise ValueError(f"vertex {v} has no {block} edge")


def _longest_paths(edges: list[tuple[object, object]], source: object) -> dict[object, int]:
    incoming: dict[object, list[object]] = {}
    nodes = {source}
    for u, v in edges:
        incoming.setdefault(v, []).append(u)
        nodes.add(u)
        nodes.add(v)
    depth: dict[object, int] = {}
    state: dict[object, int] = {}

    def visit(n) -> int:
        if n in depth:
            return depth[n]
        if state.get(n) == 1:
            raise ValueError("segment graph has a cycle")
        state[n] = 1
        best = 0
        for u in incoming.get(n, ()):
            best = max(best, visit(u) + 1)
        state[n] = 2
        depth[n] = best
        return best

    for n in nodes:
        visit(n)
    return depth


def rfp_from_rel(r: Rel) -> FloorPlan:
    g = r.graph
    pn, pe, ps, pw = (r.poles[k] for k in ("N", "E", "S", "W"))
    pole_set = {pn, pe, ps, pw}
    modules = [v for v in g.vertices if v not in pole_set]
    d1 = _sub_rotation(r, T1)
    d2 = _sub_rotation(r, T2)

    bottom: dict[VertexId, object] = {}
    top: dict[VertexId, object] = {}
    left: dict[VertexId, object] = {}
    right: dict[VertexId, object] = {}
    for v in modules:
        adj = g.adj[v]
        bottom[v] = FLOOR if ps in adj else _face_from_dart(d2, _last_of_block(r, v, "T2out"), v)
        top[v] = CEILING if pn in adj else _face_from_dart(d2, _last_of_block(r, v, "T2in"), v)
        left[v] = WEST if pw in adj else _face_from_dart(d1, _last_of_block(r, v, "T1in"), v)
        right[v] = EAST if pe in adj else _face_from_dart(d1, _last_of_block(r, v, "T1out"), v)

    # Module thickness alone leaves side-by-side walls free to align into a
    # cross, losing the contact; adjacent pairs must overlap across the wall.
    y_edges = [(bottom[v], top[v]) for v in modules]
    x_edges = [(left[v], right[v]) for v in modules]
    for e, (tail, head) in r.orient.items():
        if tail in pole_set or head in pole_set:
            continue
        if r.color[e] == T2:
            y_edges.append((bottom[tail], top[head]))
            y_edges.append((bottom[head], top[tail]))
        else:
            x_edges.append((left[tail], right[head]))
            x_edges.append((left[head], right[tail]))
    ys = _longest_paths(y_edges, FLOOR)
    xs = _longest_paths(x_edges, WEST)
    rects = {
        v: Rect(xs[left[v]], ys[bottom[v]], xs[right[v]], ys[top[v]]) for v in modules
    }
    width = max(xs[right[v]] for v in modules)
    height = max(ys[top[v]] for v in modules)
    for v, rc in rects.items():
        if not (0 <= rc.x1 < rc.x2 <= width and 0 <= rc.y1 < rc.y2 <= height):
            raise ValueError(f"module {v} has a degenerate rectangle {rc}")
    fp = FloorPlan(
        rects=rects,
        width=width,
        height=height,
        labels={v: g.labels[v] for v in modules if v in g.labels},
    )
    _paint(fp, require_full=True)
    return fp


def _paint(fp: FloorPlan, require_full: bool) -> list[list[VertexId | None]]:
    """Unit-cell ownership grid; checks exact cover of the bounding box."""
    grid: list[list[VertexId | None]] = [
        [None] * fp.height for _ in range(fp.width)
    ]
    for v, rc in fp.rects.items():
        for x in range(rc.x1, rc.x2):
            for y in range(rc.y1, rc.y2):
                if grid[x][y] is not None:
                    raise ValueError(f"modules {grid[x][y]} and {v} overlap at cell {(x, y)}")
                grid[x][y] = v
    if require_full:
        for x in range(fp.width):
            for y in range(fp.height):
                if grid[x][y] is None:
                    raise ValueError(f"cell {(x, y)} is uncovered")
    return grid


# -- the corner notch --------------------------------------------------------


def corner_profile(fp: FloorPlan, ne: VertexId) -> CornerProfile:
    rc = fp.rects[ne]
    if rc.y2 != fp.height or rc.x2 != fp.width:
        raise NotCornerModule(f"module {ne} does not sit in the north-east corner")
    return CornerProfile(nx=rc.x1, ny=rc.y1, notch=rc)


def remove_ne(fp: FloorPlan, ne: VertexId) -> tuple[FloorPlan, CornerProfile]:
    profile = corner_profile(fp, ne)
    rest = {v: rc for v, rc in fp.rects.items() if v != ne}
    labels = {v: s for v, s in fp.labels.items() if v != ne}
    return FloorPlan(rects=rest, width=fp.width, height=fp.height, labels=labels), profile


def profile_from_outline(fp: FloorPlan) -> CornerProfile:
    """Read the concave corner off a plan whose north-east notch is empty."""
    grid = _paint(fp, require_full=False)
    holes = [
        (x, y)
        for x in range(fp.width)
        for y in range(fp.height)
        if grid[x][y] is None
    ]
    if not holes:
        raise NotCornerModule("plan has no notch")
    nx = min(x for x, _ in holes)
    ny = min(y for _, y in holes)
    notch = Rect(nx, ny, fp.width, fp.height)
    want = {(x, y) for x in range(nx, fp.width) for y in range(ny, fp.height)}
    if set(holes) != want:
        raise NotCornerModule("uncovered cells are not a north-east rectangle")
    return CornerProfile(nx=nx, ny=ny, notch=notch)


def _share_wall(a: Rect, b: Rect) -> str | None:
    """'H' when side by side, 'V' when stacked; None without positive contact."""
    if a.x2 == b.x1 or b.x2 == a.x1:
        lo, hi = max(a.y1, b.y1), min(a.y2, b.y2)
        if hi - lo > 0:
            return "H"
    if a.y2 == b.y1 or b.y2 == a.y1:
        lo, hi = max(a.x1, b.x1), min(a.x2, b.x2)
        if hi - lo > 0:
            return "V"
    return None


def verify_nontrivial_L(fp: FloorPlan, profile: CornerProfile) -> NonTrivialityVerdict:
    """Walk the two notch walls; a bend in the walk certifies non-triviality.

    The walk lists the modules carrying the vertical wall above the
    concave corner (top to bottom) and then the horizontal wall right of
    it (left to right).  The plan is a proper L exactly when some module
    meets its two walk neighbors in different orientations.
    """
    nx, ny, H, W = profile.nx, profile.ny, fp.height, fp.width
    w1 = [
        v
        for v, rc in fp.rects.items()
        if rc.x2 == nx and min(rc.y2, H) - max(rc.y1, ny) > 0
    ]
    w1.sort(key=lambda v: -fp.rects[v].y2)
    w2 = [
        v
        for v, rc in fp.rects.items()
        if rc.y2 == ny and min(rc.x2, W) - max(rc.x1, nx) > 0
    ]
    w2.sort(key=lambda v: fp.rects[v].x1)
    both = set(w1) & set(w2)
    if both:
        raise ValueError(f"modules {sorted(both)} lie on both notch walls")
    at_corner = [
        v for v, rc in fp.rects.items() if rc.contains_point(nx, ny)
    ]
    if len(at_corner) != 2:
        raise ValueError(f"{len(at_corner)} modules meet the concave corner, need 2")
    walk = tuple(w1 + w2)
    if len(walk) < 3:
        return NonTrivialityVerdict(False, walk, None)
    orients = []
    for i in range(len(walk) - 1):
        o = _share_wall(fp.rects[walk[i]], fp.rects[walk[i + 1]])
        if o is None:
            raise ValueError(f"walk neighbors {walk[i]},{walk[i + 1]} do not touch")
        orients.append(o)
    for i in range(len(orients) - 1):
        if orients[i] != orients[i + 1]:
            return NonTrivialityVerdict(True, walk, (walk[i], walk[i + 1], walk[i + 2]))
    return NonTrivialityVerdict(False, walk, None)


# -- dual graph of a plan ----------------------------------------------------


def dual_graph(fp: FloorPlan) -> EmbeddedGraph:
    """Adjacency-of-modules graph with the embedding read off the drawing."""
    grid = _paint(fp, require_full=False)
    # A lattice point where four distinct modules meet leaves the diagonal
    # contacts undecidable.
    for x in range(1, fp.width):
        for y in range(1, fp.height):
            owners = {
                grid[x - 1][y - 1],
                grid[x][y - 1],
                grid[x - 1][y],
                grid[x][y],
            }
            owners.discard(None)
            if len(owners) == 4:
                raise PointContactAmbiguity(f"four modules meet at point {(x, y)}")

    items = sorted(fp.rects.items())
    rotation: dict[VertexId, tuple[VertexId, ...]] = {}
    for v, rc in items:
        above = sorted(
            (u for u, ru in items if u != v and ru.y1 == rc.y2 and _overlap(ru.x1, ru.x2, rc.x1, rc.x2)),
            key=lambda u: fp.rects[u].x1,
        )
        rightn = sorted(
            (u for u, ru in items if u != v and ru.x1 == rc.x2 and _overlap(ru.y1, ru.y2, rc.y1, rc.y2)),
            key=lambda u: -fp.rects[u].y1,
        )
        below = sorted(
            (u for u, ru in items if u != v and ru.y2 == rc.y1 and _overlap(ru.x1, ru.x2, rc.x1, rc.x2)),
            key=lambda u: -fp.rects[u].x1,
        )
        leftn = sorted(
            (u for u, ru in items if u != v and ru.x2 == rc.x1 and _overlap(ru.y1, ru.y2, rc.y1, rc.y2)),
            key=lambda u: fp.rects[u].y1,
        )
        rotation[v] = tuple(above + rightn + below + leftn)

    outer = _outline_modules(fp, grid)
    return EmbeddedGraph(rotation=rotation, outer=outer, labels=dict(fp.labels))


def _overlap(a1: int, a2: int, b1: int, b2: int) -> bool:
    return min(a2, b2) - max(a1, b1) > 0


def plan_outline(fp: FloorPlan) -> tuple[tuple[int, int], ...]:
    """Corner points of the covered region, clockwise from its top-left."""
    grid = _paint(fp, require_full=False)
    pts = _boundary_walk(fp, grid)
    corners = []
    m = len(pts)
    for i in range(m):
        (x0, y0), (x1, y1), (x2, y2) = pts[i - 1], pts[i], pts[(i + 1) % m]
        if (x1 - x0, y1 - y0) != (x2 - x1, y2 - y1):
            corners.append(pts[i])
    start = min(range(len(corners)), key=lambda i: (corners[i][0], -corners[i][1]))
    return tuple(corners[start:] + corners[:start])


def _covered(grid, x: int, y: int) -> VertexId | None:
    if 0 <= x < len(grid) and 0 <= y < len(grid[0]):
        return grid[x][y]
    return None


def _boundary_walk(fp: FloorPlan, grid) -> list[tuple[int, int]]:
    """Lattice points around the covered region, clockwise."""
    # Start at the top-left covered corner and keep the region on the right.
    start = None
    for y in range(fp.height - 1, -1, -1):
        for x in range(fp.width):
            if grid[x][y] is not None:
                start = (x, y + 1)
                break
        if start:
            break
    if start is None:
        raise ValueError("empty plan")
    pts = [start]
    pos = start
    heading = (1, 0)  # eastwards along the top edge keeps the region right
    while True:
        x, y = pos
        nxt = (x + heading[0], y + heading[1])
        pts.append(nxt)
        pos = nxt
        if pos == start:
            pts.pop()
            return pts
        x, y = pos
        hx, hy = heading
        # cells to the right and left of the incoming heading at this point
        right_cell = {
            (1, 0): (x, y - 1),
            (-1, 0): (x - 1, y),
            (0, 1): (x, y),
            (0, -1): (x - 1, y - 1),
        }[heading]
        left_cell = {
            (1, 0): (x, y),
            (-1, 0): (x - 1, y - 1),
            (0, 1): (x - 1, y),
            (0, -1): (x, y - 1),
        }[heading]
        r_cov = _covered(grid, *right_cell) is not None
        l_cov = _covered(grid, *left_cell) is not None
        if r_cov and l_cov:
            heading = (-hy, hx)  # concave corner: turn left
        elif r_cov:
            pass  # straight on
        else:
            heading = (hy, -hx)  # convex corner: turn right
        if len(pts) > 4 * (fp.width + 2) * (fp.height + 2):
            raise ValueError("boundary walk does not close")


def _outline_modules(fp: FloorPlan, grid) -> tuple[VertexId, ...]:
    pts = _boundary_walk(fp, grid)
    owners: list[VertexId] = []
    m = len(pts)
    for i in range(m):
        (x0, y0), (x1, y1) = pts[i], pts[(i + 1) % m]
        hx, hy = x1 - x0, y1 - y0
        cell = {
            (1, 0): (x0, y0 - 1),
            (-1, 0): (x0 - 1, y0),
            (0, 1): (x0, y0),
            (0, -1): (x0 - 1, y0 - 1),
        }[(hx, hy)]
        v = _covered(grid, *cell)
        if v is None:
            raise ValueError("outline step without an owning module")
        if not owners or owners[-1] != v:
            owners.append(v)
    if len(owners) > 1 and owners[0] == owners[-1]:
        owners.pop()
    if len(set(owners)) != len(owners):
        raise PointContactAmbiguity("a module meets the outline on separated stretches")
    return tuple(owners)
