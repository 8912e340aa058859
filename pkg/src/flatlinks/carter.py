"""Closed-surface realization of a signed Gauss code.

The diagram of a code is a 4-valent graph: vertices are crossings, edges
are the arcs between consecutive passages.  Thickening the graph according
to the rotation system below and capping every boundary circle with a disk
yields a closed oriented surface on which the components realize the code;
all complementary faces are disks by construction.

Rotation rule at a crossing (counterclockwise order of the four half-edges,
each half-edge taken at its outward-pointing attachment direction):

    sign +1:  first-out, second-out, first-in, second-in
    sign -1:  first-out, second-in, first-in, second-out

which is the planar model with the first passage running along +x and the
second along +y (sign +1) or -y (sign -1).  The genus of each connected
piece follows from V - E + F = 2 - 2g.  Crossingless components are carried
by sphere pieces of their own.

Darts are pairs (arc, direction): an arc is (ci, pi), the arc leaving the
passage at position pi of component ci; direction +1 is the dart at the
arc's start, -1 the dart at its end.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class SurfacePiece:
    """One connected piece of the realization surface."""

    crossings: tuple       # crossing labels on this piece, sorted
    component_names: tuple  # components realized on this piece, sorted
    n_vertices: int
    n_edges: int
    n_faces: int

    @property
    def euler(self):
        return self.n_vertices - self.n_edges + self.n_faces

    @property
    def genus(self):
        chi = self.euler
        assert chi % 2 == 0, "odd Euler characteristic: broken face trace"
        g = (2 - chi) // 2
        assert g >= 0
        return g


@dataclass(frozen=True)
class CarterSurface:
    """Realization data: rotation system, traced faces, and piece summary."""

    code: object
    pieces: tuple           # SurfacePiece, diagram pieces first then spheres
    faces: tuple            # each face: tuple of darts in boundary order
    rotation: dict          # dart -> next dart ccw at its vertex
    dart_vertex: dict       # dart -> crossing label

    def total_genus(self):
        return sum(p.genus for p in self.pieces)

    def genus_multiset(self):
        return tuple(sorted(p.genus for p in self.pieces))

    def face_arc_sets(self):
        """For each face, the multiset of arcs in its boundary."""
        return [tuple(sorted(arc for arc, _d in face)) for face in self.faces]

    def report(self):
        return [
            {
                "genus": p.genus,
                "components": list(p.component_names),
                "faces": p.n_faces,
                "euler": p.euler,
            }
            for p in self.pieces
        ]


def _arcs_of(code):
    """All arcs (ci, pi) and the passage structure of each crossing."""
    arcs = []
    for ci, (_, passages) in enumerate(code.components):
        arcs += [(ci, pi) for pi in range(len(passages))]
    return arcs


def rotation_system(code):
    """Dart successor map (ccw) plus dart location, per the rotation rule."""
    occ = code.occurrences()
    sigma = {}
    dart_vertex = {}
    for label, (first, second) in occ.items():
        quads = []
        for (ci, pi) in (first, second):
            n = len(code.components[ci][1])
            out_dart = ((ci, pi), +1)
            in_dart = ((ci, (pi - 1) % n), -1)
            quads.append((out_dart, in_dart))
        (out1, in1), (out2, in2) = quads
        if code.sign(label) > 0:
            order = [out1, out2, in1, in2]
        else:
            order = [out1, in2, in1, out2]
        for i, dart in enumerate(order):
            sigma[dart] = order[(i + 1) % 4]
            dart_vertex[dart] = label
    return sigma, dart_vertex


def trace_faces(sigma):
    """Orbits of d -> sigma[alpha(d)]; each orbit bounds one disk face."""
    faces = []
    seen = set()
    for start in sorted(sigma):
        if start in seen:
            continue
        face = []
        d = start
        while d not in seen:
            seen.add(d)
            face.append(d)
            arc, direction = d
            d = sigma[(arc, -direction)]
        faces.append(tuple(face))
    return faces


def build_carter(code):
    """Realize the code on its closed oriented surface."""
    sigma, dart_vertex = rotation_system(code)
    faces = trace_faces(sigma)

    # connected pieces of the diagram graph: crossings joined by arcs
    parent = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    for label in code.crossings():
        parent[label] = label
    occ = code.occurrences()
    arc_piece = {}
    for ci, (_, passages) in enumerate(code.components):
        n = len(passages)
        for pi in range(n):
            a = passages[pi]
            b = passages[(pi + 1) % n]
            union(a, b)

    pieces = []
    if code.crossings():
        groups = {}
        for label in code.crossings():
            groups.setdefault(find(label), []).append(label)
        for root in sorted(groups):
            labels = sorted(groups[root])
            label_set = set(labels)
            comp_names = sorted(
                name
                for name, passages in code.components
                if passages and any(p in label_set for p in passages)
            )
            n_vertices = len(labels)
            n_edges = sum(
                len(passages)
                for name, passages in code.components
                if passages and passages[0] in label_set
            )
            n_faces = sum(
                1 for face in faces if dart_vertex[face[0]] in label_set
            )
            pieces.append(
                SurfacePiece(tuple(labels), tuple(comp_names),
                             n_vertices, n_edges, n_faces)
            )

    # crossingless components: a circle on its own sphere (V=0, E=0, F=2)
    for name, passages in code.components:
        if not passages:
            pieces.append(SurfacePiece((), (name,), 0, 0, 2))

    surface = CarterSurface(code, tuple(pieces), tuple(faces), sigma, dart_vertex)
    for p in surface.pieces:
        p.genus  # assert even Euler characteristic
    return surface


def genus_of(code):
    return build_carter(code).total_genus()
