"""Combinatorial embeddings of planar graphs and the PTPG validity checks.

A graph is given by clockwise rotation lists plus the outer cycle in
clockwise order.  Faces are recovered by the usual dart-walk: the dart
(u, v) continues with (v, w) where w follows u in the rotation at v.
With clockwise rotations this walks interior faces counterclockwise and
the outer face clockwise.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence


VertexId = int
Edge = tuple[VertexId, VertexId]


class InconsistentEmbedding(ValueError):
    """Rotation system, outer cycle and sphere topology disagree."""


def edge_key(u: VertexId, v: VertexId) -> Edge:
    return (u, v) if u < v else (v, u)


def rotate_min(seq: Sequence[VertexId]) -> tuple[VertexId, ...]:
    """Canonical cyclic form: rotate so the smallest element is first."""
    if not seq:
        return ()
    k = min(range(len(seq)), key=lambda i: seq[i])
    return tuple(seq[k:]) + tuple(seq[:k])


def cyclic_eq(a: Sequence[VertexId], b: Sequence[VertexId]) -> bool:
    return len(a) == len(b) and rotate_min(a) == rotate_min(b)


@dataclass(frozen=True)
class EmbeddedGraph:
    """Immutable embedded planar graph.

    rotation maps every vertex to its neighbors in clockwise order,
    outer is the outer face in clockwise order.  labels are optional
    display names kept for round-tripping documents; algorithms only
    ever see the integer ids.
    """

    rotation: Mapping[VertexId, tuple[VertexId, ...]]
    outer: tuple[VertexId, ...]
    labels: Mapping[VertexId, str] = field(default_factory=dict)

    def __post_init__(self) -> None:
        rot = {int(v): tuple(int(u) for u in nbrs) for v, nbrs in self.rotation.items()}
        object.__setattr__(self, "rotation", rot)
        object.__setattr__(self, "outer", tuple(int(v) for v in self.outer))
        object.__setattr__(self, "labels", dict(self.labels))
        self._check()

    def _check(self) -> None:
        rot = self.rotation
        for v, nbrs in rot.items():
            if v in nbrs:
                raise InconsistentEmbedding(f"loop at vertex {v}")
            if len(set(nbrs)) != len(nbrs):
                raise InconsistentEmbedding(f"repeated neighbor at vertex {v}")
            for u in nbrs:
                if u not in rot or v not in rot[u]:
                    raise InconsistentEmbedding(f"edge ({v},{u}) is not symmetric")
        if len(self.outer) < 3:
            raise InconsistentEmbedding("outer cycle needs at least 3 vertices")
        if len(set(self.outer)) != len(self.outer):
            raise InconsistentEmbedding("outer cycle repeats a vertex")
        for i, v in enumerate(self.outer):
            u = self.outer[(i + 1) % len(self.outer)]
            if v not in rot or u not in rot[v]:
                raise InconsistentEmbedding(f"outer edge ({v},{u}) missing")
        # Sphere condition via Euler; this also rejects disconnected input.
        n, m = len(rot), len(self.edges)
        if n - m + len(self.faces) != 2:
            raise InconsistentEmbedding("rotation system is not planar (Euler check)")
        hits = [f for f in self.faces if cyclic_eq(f, self.outer)]
        if len(hits) != 1:
            raise InconsistentEmbedding("outer cycle does not bound exactly one face")

    # -- derived structure ------------------------------------------------

    @cached_property
    def vertices(self) -> tuple[VertexId, ...]:
        return tuple(sorted(self.rotation))

    @cached_property
    def adj(self) -> dict[VertexId, frozenset[VertexId]]:
        return {v: frozenset(nbrs) for v, nbrs in self.rotation.items()}

    @cached_property
    def edges(self) -> frozenset[Edge]:
        return frozenset(edge_key(u, v) for u, nbrs in self.rotation.items() for v in nbrs)

    @cached_property
    def _pos(self) -> dict[VertexId, dict[VertexId, int]]:
        return {v: {u: i for i, u in enumerate(nbrs)} for v, nbrs in self.rotation.items()}

    def next_dart(self, u: VertexId, v: VertexId) -> tuple[VertexId, VertexId]:
        nbrs = self.rotation[v]
        return v, nbrs[(self._pos[v][u] + 1) % len(nbrs)]

    @cached_property
    def faces(self) -> tuple[tuple[VertexId, ...], ...]:
        seen: set[tuple[VertexId, VertexId]] = set()
        out: list[tuple[VertexId, ...]] = []
        for v0, nbrs in sorted(self.rotation.items()):
            for u0 in nbrs:
                if (v0, u0) in seen:
                    continue
                walk: list[VertexId] = []
                u, v = v0, u0
                while (u, v) not in seen:
                    seen.add((u, v))
                    walk.append(u)
                    u, v = self.next_dart(u, v)
                if (u, v) != (v0, u0):
                    raise InconsistentEmbedding("face walk did not close")
                out.append(rotate_min(walk))
        return tuple(out)

    @cached_property
    def outer_face_index(self) -> int:
        for i, f in enumerate(self.faces):
            if cyclic_eq(f, self.outer):
                return i
        raise InconsistentEmbedding("no outer face")  # pragma: no cover - _check guards

    @cached_property
    def inner_faces(self) -> tuple[tuple[VertexId, ...], ...]:
        k = self.outer_face_index
        return tuple(f for i, f in enumerate(self.faces) if i != k)

    @cached_property
    def dart_face(self) -> dict[tuple[VertexId, VertexId], int]:
        """Face index on the left of each dart walk (trace containing the dart)."""
        idx: dict[tuple[VertexId, VertexId], int] = {}
        for fi, face in enumerate(self.faces):
            k = len(face)
            for i in range(k):
                idx[(face[i], face[(i + 1) % k])] = fi
        return idx

    def degree(self, v: VertexId) -> int:
        return len(self.rotation[v])

    @cached_property
    def outer_set(self) -> frozenset[VertexId]:
        return frozenset(self.outer)

    @cached_property
    def outer_pos(self) -> dict[VertexId, int]:
        return {v: i for i, v in enumerate(self.outer)}


def trace_faces(g: EmbeddedGraph) -> tuple[tuple[tuple[VertexId, ...], ...], int]:
    """All face walks of the embedding plus the index of the outer face."""
    return g.faces, g.outer_face_index


def common_neighbors(g: EmbeddedGraph, u: VertexId, v: VertexId) -> tuple[VertexId, ...]:
    return tuple(sorted(g.adj[u] & g.adj[v]))


def is_biconnected(g: EmbeddedGraph) -> bool:
    verts = g.vertices
    if len(verts) < 3:
        return False
    root = verts[0]
    disc: dict[VertexId, int] = {}
    low: dict[VertexId, int] = {}
    parent: dict[VertexId, VertexId | None] = {root: None}
    order = 0
    root_children = 0
    stack: list[tuple[VertexId, Iterable[VertexId]]] = [(root, iter(g.rotation[root]))]
    disc[root] = low[root] = order
    order += 1
    while stack:
        v, it = stack[-1]
        advanced = False
        for w in it:
            if w not in disc:
                parent[w] = v
                disc[w] = low[w] = order
                order += 1
                if v == root:
                    root_children += 1
                stack.append((w, iter(g.rotation[w])))
                advanced = True
                break
            elif w != parent[v]:
                low[v] = min(low[v], disc[w])
        if not advanced:
            stack.pop()
            p = parent[v]
            if p is not None:
                low[p] = min(low[p], low[v])
                if p != root and low[v] >= disc[p]:
                    return False
    if len(disc) != len(verts):
        return False
    return root_children <= 1


def faces_inside_cycle(g: EmbeddedGraph, cycle: Sequence[VertexId]) -> frozenset[int]:
    """Indices of faces strictly inside a simple cycle of the embedding."""
    cyc_edges = {edge_key(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle))}
    # Flood fill over faces; crossing is allowed through any edge not on the cycle.
    edge_faces: dict[Edge, list[int]] = {}
    for fi, face in enumerate(g.faces):
        k = len(face)
        for i in range(k):
            edge_faces.setdefault(edge_key(face[i], face[(i + 1) % k]), []).append(fi)
    reached = {g.outer_face_index}
    frontier = [g.outer_face_index]
    while frontier:
        fi = frontier.pop()
        face = g.faces[fi]
        k = len(face)
        for i in range(k):
            e = edge_key(face[i], face[(i + 1) % k])
            if e in cyc_edges:
                continue
            for fj in edge_faces[e]:
                if fj not in reached:
                    reached.add(fj)
                    frontier.append(fj)
    return frozenset(fi for fi in range(len(g.faces)) if fi not in reached)


def vertices_inside_cycle(g: EmbeddedGraph, cycle: Sequence[VertexId]) -> frozenset[VertexId]:
    """Vertices strictly inside a simple cycle (outer face side counts as outside)."""
    inside: set[VertexId] = set()
    for fi in faces_inside_cycle(g, cycle):
        inside.update(g.faces[fi])
    return frozenset(inside - set(cycle))


def _triangles(g: EmbeddedGraph) -> list[tuple[VertexId, VertexId, VertexId]]:
    out = []
    for u, v in sorted(g.edges):
        for w in common_neighbors(g, u, v):
            if w > v:
                out.append((u, v, w))
    return out


def find_separating_triangles(g: EmbeddedGraph) -> tuple[tuple[VertexId, VertexId, VertexId], ...]:
    """3-cycles with at least one vertex strictly inside, sorted ascending."""
    face_set = {f for f in g.faces if len(f) == 3}
    bad = []
    for tri in _triangles(g):
        if rotate_min(tri) in face_set or rotate_min(tri[::-1]) in face_set:
            continue
        if vertices_inside_cycle(g, tri):
            bad.append(tri)
    return tuple(bad)


@dataclass(frozen=True)
class PtpgReport:
    is_biconnected: bool
    nontriangular_interior_faces: tuple[tuple[VertexId, ...], ...]
    separating_triangles: tuple[tuple[VertexId, VertexId, VertexId], ...]

    @property
    def verdict(self) -> bool:
        return (
            self.is_biconnected
            and not self.nontriangular_interior_faces
            and not self.separating_triangles
        )


def validate_ptpg(g: EmbeddedGraph) -> PtpgReport:
    """Check the properly-triangulated-planar conditions on an embedded graph."""
    bad_faces = tuple(f for f in g.inner_faces if len(f) != 3)
    return PtpgReport(
        is_biconnected=is_biconnected(g),
        nontriangular_interior_faces=bad_faces,
        separating_triangles=find_separating_triangles(g),
    )
