"""Named cubic graph families and the counting formulas they satisfy."""

from __future__ import annotations

from .graphs import CubicGraph, EmbeddedCubicGraph

__all__ = [
    "circular_ladder",
    "mobius_ladder",
    "k4",
    "petersen",
    "catalog",
    "count_zero_sum_sequences",
    "cln_formula",
    "mobius_formula",
]


def circular_ladder(n: int) -> EmbeddedCubicGraph:
    """The prism over an n-cycle: bipartite exactly when n is even.

    Vertices 0..n-1 form the outer rim cycle, n..2n-1 the inner hub cycle,
    with rung i--(n+i).  The rotation system is the standard concentric
    drawing, so the faces are n quadrilaterals (rim i, hub i, hub i+1,
    rim i+1), the hub n-gon, and the rim n-gon marked as the outer face.
    """
    if n < 3:
        raise ValueError(f"circular ladder needs n >= 3, got {n}")
    rotations: list[tuple[int, int, int]] = []
    for i in range(n):
        rotations.append(((i + 1) % n, n + i, (i - 1) % n))
    for i in range(n):
        rotations.append((i, n + (i + 1) % n, n + (i - 1) % n))
    return EmbeddedCubicGraph(tuple(rotations), outer_face_hint=tuple(range(n)))


def mobius_ladder(n: int) -> CubicGraph:
    """The circular ladder with its two closing rim/hub edges crossed.

    Non-planar for n >= 4 (and K_{3,3} for n = 3), so only adjacency is
    built; bipartite exactly when n is odd.
    """
    if n < 3:
        raise ValueError(f"Moebius ladder needs n >= 3, got {n}")
    edge_list = (
        [(i, i + 1) for i in range(n - 1)]
        + [(n + i, n + i + 1) for i in range(n - 1)]
        + [(i, n + i) for i in range(n)]
        + [(2 * n - 1, 0), (n - 1, n)]
    )
    adjacency: list[list[int]] = [[] for _ in range(2 * n)]
    for u, v in edge_list:
        adjacency[u].append(v)
        adjacency[v].append(u)
    return CubicGraph(tuple(tuple(t) for t in adjacency))


def k4() -> EmbeddedCubicGraph:
    """The tetrahedron: vertex 0 drawn inside the outer triangle (1, 2, 3)."""
    return EmbeddedCubicGraph(
        ((1, 2, 3), (2, 0, 3), (3, 0, 1), (1, 0, 2)),
        outer_face_hint=(1, 2, 3),
    )


def petersen() -> CubicGraph:
    """The Petersen graph: outer 5-cycle, inner pentagram, five spokes.

    Non-planar, so only adjacency is built; it has no proper
    3-edge-coloring at all.
    """
    adjacency: list[tuple[int, int, int]] = []
    for i in range(5):
        adjacency.append(((i + 1) % 5, (i + 4) % 5, i + 5))
    for i in range(5):
        adjacency.append((i, 5 + (i + 2) % 5, 5 + (i + 3) % 5))
    return CubicGraph(tuple(adjacency))


def catalog() -> dict[str, EmbeddedCubicGraph | CubicGraph]:
    """The named test menagerie; planar entries carry embeddings."""
    entries: dict[str, EmbeddedCubicGraph | CubicGraph] = {"k4": k4()}
    for n in range(3, 11):
        entries[f"cl_{n}"] = circular_ladder(n)
    for n in range(3, 9):
        entries[f"mobius_{n}"] = mobius_ladder(n)
    entries["petersen"] = petersen()
    return entries


def count_zero_sum_sequences(n: int) -> int:
    """How many length-n sequences over {+1, -1} sum to 0 mod 3.

    Closed form: (2**n + 2) / 3 for even n, (2**n - 2) / 3 for odd n.
    """
    if n < 1:
        raise ValueError(f"sequence length must be positive, got {n}")
    return (2**n + 2) // 3 if n % 2 == 0 else (2**n - 2) // 3


def cln_formula(n: int) -> int:
    """Closed-form count of proper 3-edge-colorings of circular_ladder(n)."""
    if n < 3:
        raise ValueError(f"circular ladder needs n >= 3, got {n}")
    return 2**n + 8 if n % 2 == 0 else 2**n - 2


def mobius_formula(n: int) -> int:
    """Closed-form count of proper 3-edge-colorings of mobius_ladder(n).

    2**n + 4 for odd n, 2**n + 2 for even n.  A rail-pair transfer-matrix
    argument gives 2**n + 2*(-1)**n closed diagonal walks plus 6 swapped
    closures exactly when the twist parity admits them (odd n); exhaustive
    enumeration confirms the values for n = 3..6.  The often-quoted blanket
    2**n + 4 is correct only for odd n, the bipartite cases.
    """
    if n < 3:
        raise ValueError(f"Moebius ladder needs n >= 3, got {n}")
    return 2**n + 4 if n % 2 else 2**n + 2
