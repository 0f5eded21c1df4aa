"""Face equation systems over GF(3), spin vectors, and their coloring twins.

Every face of an embedded cubic graph on 2n vertices yields one equation:
the spins of its vertices sum to 0 mod 3.  All 2n face-membership columns
sum to zero over the full face set (each vertex lies on exactly three
faces), so one equation is redundant; dropping a single face leaves the
*main* system of n+1 equations in 2n spin variables.  The dropped face is
the one matching ``outer_face_hint`` when present, else the face with the
lexicographically smallest cycle -- ranks and solution sets do not depend
on the choice.

A Heawood vector is an everywhere-nonzero solution, one spin per vertex,
+1 stored as 1 and -1 as 2.  Spins drive edge colors: walking the three
edges of vertex v in counterclockwise rotation order advances the color by
the constant step sigma(v), which pins down a proper 3-edge-coloring from
a single seeded edge and, conversely, reads a spin vector off any proper
coloring.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import gf3
from .colorings import TaitColoring
from .errors import (
    ContractionError,
    InvalidGraphError,
    ImproperColoringError,
    NotAHeawoodVectorError,
    NotBipartiteError,
)
from .graphs import (
    Bipartition,
    Edge,
    EmbeddedCubicGraph,
    Face,
    edges,
    incident_edges_ccw,
    is_bipartite,
    trace_faces,
    validate,
)

__all__ = [
    "HeawoodSystem",
    "HeawoodVector",
    "build_main_sle",
    "sle_rank",
    "enumerate_heawood_vectors",
    "count_tait_colorings_heawood",
    "heawood_to_tait",
    "tait_to_heawood",
    "bipartite_heawood_vector",
    "contract_triangle",
]


@dataclass(frozen=True, eq=False)
class HeawoodSystem:
    """The main face-equation system of an embedded cubic graph.

    Row i of ``matrix`` is the 0/1 membership vector of the face with id
    ``row_face_ids[i]``; column j belongs to vertex j (the vertex index map
    is the identity).  ``faces`` keeps all n+2 traced faces, including the
    dropped one.
    """

    matrix: np.ndarray
    faces: tuple[Face, ...]
    row_face_ids: tuple[int, ...]
    dropped_face_id: int

    @property
    def n_vertices(self) -> int:
        return int(self.matrix.shape[1])

    @property
    def dropped_face(self) -> Face:
        return self.faces[self.dropped_face_id]

    def row_of_face(self, face_id: int) -> int | None:
        """Matrix row holding this face's equation, or None for the dropped face."""
        try:
            return self.row_face_ids.index(face_id)
        except ValueError:
            return None


@dataclass(frozen=True)
class HeawoodVector:
    """An everywhere-nonzero spin per vertex: +1 stored as 1, -1 as 2."""

    spins: tuple[int, ...]

    def __post_init__(self) -> None:
        spins = tuple(int(s) for s in self.spins)
        if any(s not in (1, 2) for s in spins):
            raise ValueError(f"spins must be nonzero mod 3 (1 or 2), got {spins}")
        object.__setattr__(self, "spins", spins)

    @property
    def signs(self) -> tuple[int, ...]:
        """The spins written as +1 / -1."""
        return tuple(1 if s == 1 else -1 for s in self.spins)

    def negated(self) -> "HeawoodVector":
        return HeawoodVector(tuple(3 - s for s in self.spins))


def _require_valid(g: EmbeddedCubicGraph) -> None:
    report = validate(g)
    if not report.ok:
        raise InvalidGraphError("; ".join(report.problems))


def _default_dropped_face(g: EmbeddedCubicGraph, faces: tuple[Face, ...]) -> int:
    if g.outer_face_hint is None:
        return min(faces, key=lambda f: f.vertex_cycle).face_id
    hint = frozenset(g.outer_face_hint)
    matches = [f for f in faces if f.vertex_set == hint]
    if len(matches) == 1:
        return matches[0].face_id
    if not matches:
        raise InvalidGraphError(f"outer face hint {sorted(hint)} matches no traced face")
    # Several faces share the hint's vertex set: fall back to the exact cycle.
    want = {tuple(g.outer_face_hint), tuple(reversed(g.outer_face_hint))}
    for f in matches:
        cycles = {f.vertex_cycle[k:] + f.vertex_cycle[:k] for k in range(len(f.vertex_cycle))}
        if cycles & {c[k:] + c[:k] for c in want for k in range(len(c))}:
            return f.face_id
    raise InvalidGraphError(f"outer face hint {sorted(hint)} is ambiguous")


def build_main_sle(
    g: EmbeddedCubicGraph, drop_face_id: int | None = None
) -> HeawoodSystem:
    """Build the main system: one row per kept face, one column per vertex."""
    if drop_face_id is None:
        return _cached_main_sle(g)
    return _build_main_sle(g, drop_face_id)


@lru_cache(maxsize=None)
def _cached_main_sle(g: EmbeddedCubicGraph) -> HeawoodSystem:
    return _build_main_sle(g, None)


def _build_main_sle(g: EmbeddedCubicGraph, drop_face_id: int | None) -> HeawoodSystem:
    _require_valid(g)
    faces = trace_faces(g)
    if drop_face_id is None:
        drop_face_id = _default_dropped_face(g, faces)
    elif not 0 <= drop_face_id < len(faces):
        raise ValueError(f"face id {drop_face_id} out of range for {len(faces)} faces")
    matrix = np.zeros((len(faces) - 1, g.n_vertices), dtype=np.uint8)
    row_face_ids: list[int] = []
    for face in faces:
        if face.face_id == drop_face_id:
            continue
        matrix[len(row_face_ids), list(face.vertex_cycle)] = 1
        row_face_ids.append(face.face_id)
    matrix.setflags(write=False)
    return HeawoodSystem(matrix, faces, tuple(row_face_ids), drop_face_id)


def sle_rank(g: EmbeddedCubicGraph, drop_face_id: int | None = None) -> int:
    """Rank of the main system: n+1 when non-bipartite, n when bipartite."""
    system = build_main_sle(g, drop_face_id)
    rank = gf3.rref(system.matrix).rank
    n = g.n_vertices // 2
    expected = n if is_bipartite(g) is not None else n + 1
    if rank != expected:
        # The rank is forced by bipartiteness; a mismatch means the system
        # matrix was built wrong, not that the input is unusual.
        raise AssertionError(f"rank {rank} contradicts the bipartite dichotomy ({expected})")
    return rank


def _sign_patterns(k: int) -> np.ndarray:
    """All 2**k rows over {1, 2}, in lexicographic order."""
    if k == 0:
        return np.ones((1, 0), dtype=np.uint8)
    bits = (np.arange(2**k, dtype=np.int64)[:, None] >> np.arange(k - 1, -1, -1)) & 1
    return (bits + 1).astype(np.uint8)


@lru_cache(maxsize=None)
def enumerate_heawood_vectors(g: EmbeddedCubicGraph) -> tuple[HeawoodVector, ...]:
    """All Heawood vectors, sorted lexicographically by spins (1 before 2).

    Only the 2**(#free) everywhere-nonzero assignments of the free columns
    are tried; assignments whose back-substitution produces any zero spin
    are silently discarded.  Exponential in the number of free variables.
    """
    system = build_main_sle(g)
    solution = gf3.solve_parametric(system.matrix)
    patterns = _sign_patterns(len(solution.free_cols))
    full = solution.substitute_batch(patterns)
    keep = (full != 0).all(axis=1)
    spin_tuples = sorted(tuple(int(x) for x in row) for row in full[keep])
    return tuple(HeawoodVector(s) for s in spin_tuples)


def count_tait_colorings_heawood(g: EmbeddedCubicGraph) -> int:
    """Number of proper 3-edge-colorings: three per Heawood vector."""
    return 3 * len(enumerate_heawood_vectors(g))


def _incidence_tables(g: EmbeddedCubicGraph):
    edge_list = edges(g)
    edge_index = {e: i for i, e in enumerate(edge_list)}
    incident = tuple(incident_edges_ccw(g, v) for v in range(g.n_vertices))
    return edge_list, edge_index, incident


def heawood_to_tait(
    g: EmbeddedCubicGraph,
    vector: HeawoodVector,
    seed_edge: Edge,
    seed_color: int,
) -> TaitColoring:
    """Propagate edge colors from one seeded edge using the vertex spin steps.

    Breadth-first over edges through shared vertices; reaching all 3n edges
    without conflict is exactly what certifies ``vector`` against every
    face equation, so a conflict raises ``NotAHeawoodVectorError``.
    """
    _require_valid(g)
    if len(vector.spins) != g.n_vertices:
        raise ValueError(f"vector has {len(vector.spins)} spins for {g.n_vertices} vertices")
    if seed_color not in (0, 1, 2):
        raise ValueError(f"seed color must be 0, 1 or 2, got {seed_color}")
    edge_list, edge_index, incident = _incidence_tables(g)
    u, v = seed_edge
    seed = (u, v) if u < v else (v, u)
    if seed not in edge_index:
        raise ValueError(f"unknown seed edge {seed_edge}")

    colors: list[int | None] = [None] * len(edge_list)
    colors[edge_index[seed]] = seed_color
    queue: deque[Edge] = deque([seed])
    while queue:
        e = queue.popleft()
        c = colors[edge_index[e]]
        for vertex in e:
            triple = incident[vertex]
            k = triple.index(e)
            step = vector.spins[vertex]
            for j in (1, 2):
                other = triple[(k + j) % 3]
                expected = (c + j * step) % 3
                idx = edge_index[other]
                if colors[idx] is None:
                    colors[idx] = expected
                    queue.append(other)
                elif colors[idx] != expected:
                    raise NotAHeawoodVectorError(
                        f"color propagation conflicts at edge {other}: "
                        "the given spins are not a Heawood vector"
                    )
    if any(c is None for c in colors):
        raise AssertionError("propagation missed an edge of a connected graph")
    return TaitColoring(tuple(colors))


def tait_to_heawood(g: EmbeddedCubicGraph, coloring: TaitColoring) -> HeawoodVector:
    """Read each vertex's constant counterclockwise color step as its spin."""
    _require_valid(g)
    edge_list, edge_index, incident = _incidence_tables(g)
    if len(coloring.colors) != len(edge_list):
        raise ValueError(
            f"coloring has {len(coloring.colors)} entries for {len(edge_list)} edges"
        )
    spins: list[int] = []
    for vertex in range(g.n_vertices):
        c0, c1, c2 = (coloring.colors[edge_index[e]] for e in incident[vertex])
        if len({c0, c1, c2}) != 3:
            raise ImproperColoringError(f"edges at vertex {vertex} repeat a color")
        step = (c1 - c0) % 3
        if step != (c2 - c1) % 3 or step not in (1, 2):
            # Three distinct colors in cyclic order always advance by a
            # constant nonzero step; hitting this means a bug, not bad input.
            raise AssertionError(f"non-constant color step at vertex {vertex}")
        spins.append(step)
    return HeawoodVector(tuple(spins))


def bipartite_heawood_vector(
    g: EmbeddedCubicGraph, parts: Bipartition | None = None
) -> HeawoodVector:
    """Spin +1 on one part, -1 on the other; valid because every face alternates parts."""
    _require_valid(g)
    if parts is None:
        parts = is_bipartite(g)
    if parts is None:
        raise NotBipartiteError("graph is not bipartite")
    return HeawoodVector(tuple(1 if v in parts.part_a else 2 for v in range(g.n_vertices)))


def contract_triangle(g: EmbeddedCubicGraph, face_id: int) -> EmbeddedCubicGraph:
    """Collapse a triangular face to one vertex, keeping a planar embedding.

    Surviving vertices keep their relative order starting at 0; the new
    vertex gets the highest id, 2n-3.  Its rotation lists the triangle's
    three outward edges in reverse traced-cycle order, which is their
    counterclockwise order around the collapsed triangle.  Heawood vectors
    of the input whose triangle spins all equal s correspond to vectors of
    the result whose new-vertex spin is -s.
    """
    _require_valid(g)
    faces = trace_faces(g)
    if not 0 <= face_id < len(faces):
        raise ValueError(f"face id {face_id} out of range for {len(faces)} faces")
    cycle = faces[face_id].vertex_cycle
    if len(cycle) != 3:
        raise ContractionError(f"face {face_id} has {len(cycle)} vertices, not a triangle")
    a, b, c = cycle
    triangle = {a, b, c}
    outward = {}
    for x in (a, b, c):
        outward[x] = next(w for w in g.rotations[x] if w not in triangle)
    if len(set(outward.values())) != 3:
        raise ContractionError(
            "contraction would create parallel edges: two triangle vertices "
            "share the outside neighbor"
        )
    survivors = [v for v in range(g.n_vertices) if v not in triangle]
    new_id = {old: i for i, old in enumerate(survivors)}
    z = len(survivors)
    rotations: list[tuple[int, ...]] = []
    for old in survivors:
        rotations.append(
            tuple(z if w in triangle else new_id[w] for w in g.rotations[old])
        )
    rotations.append((new_id[outward[c]], new_id[outward[b]], new_id[outward[a]]))
    return EmbeddedCubicGraph(tuple(rotations))
