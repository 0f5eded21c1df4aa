"""Defining sets and dependence witnesses for the main spin system.

A vertex set S is *linear-defining* when the columns outside S are
linearly independent, i.e. no nonzero kernel vector vanishes on S, so
values on S extend to at most one solution.  It is *Heawood-defining*
when restricting the enumerated Heawood vectors to S is injective; a
linear-defining set is always Heawood-defining, not conversely.

A *zebra witness* for a vertex set T is a nonzero combination of the kept
face equations whose support (vertices with nonzero coefficient in the
combined equation) lies inside T.  One exists exactly when the columns
outside T have rank below the row count; its support is empty only for
bipartite graphs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Literal

import numpy as np

from . import gf3
from .errors import SubsetSearchLimitError
from .graphs import EmbeddedCubicGraph, is_bipartite
from .spins import HeawoodSystem, build_main_sle, enumerate_heawood_vectors

__all__ = [
    "VertexSet",
    "ZebraWitness",
    "FreeVariableSet",
    "combination_support",
    "zebra_witness",
    "is_linear_defining",
    "is_heawood_defining",
    "free_variable_defining_set",
    "minimal_defining_sets",
]

VertexSet = frozenset[int]

MAX_SUBSET_SEARCH_VERTICES = 16


@dataclass(frozen=True)
class ZebraWitness:
    """A nonzero row combination supported inside the queried vertex set."""

    row_coefficients: tuple[int, ...]
    support: frozenset[int]


@dataclass(frozen=True)
class FreeVariableSet:
    """The non-pivot columns of the main system; size n-1, or n when bipartite."""

    members: frozenset[int]
    bipartite: bool


def _checked_members(g: EmbeddedCubicGraph, vertices: Iterable[int]) -> frozenset[int]:
    members = frozenset(int(v) for v in vertices)
    for v in members:
        if not 0 <= v < g.n_vertices:
            raise ValueError(f"unknown vertex id {v}")
    return members


def combination_support(system: HeawoodSystem, coefficients) -> frozenset[int]:
    """Vertices whose column is nonzero in ``coefficients . matrix``."""
    combined = gf3.row_combination(system.matrix, coefficients)
    return frozenset(int(v) for v in np.nonzero(combined)[0])


def zebra_witness(g: EmbeddedCubicGraph, vertices: Iterable[int]) -> ZebraWitness | None:
    """Some witness supported inside ``vertices``, or None when none exists.

    Any valid witness is returned, not a minimal one: the coefficients are
    the first basis vector of the left kernel of the outside columns.
    """
    system = build_main_sle(g)
    members = _checked_members(g, vertices)
    outside = sorted(set(range(system.n_vertices)) - members)
    basis = gf3.nullspace_basis(system.matrix[:, outside].T)
    if not basis:
        return None
    coefficients = tuple(int(x) for x in basis[0])
    support = combination_support(system, coefficients)
    if not support <= members:
        raise AssertionError("witness support leaked outside the queried set")
    if not support and is_bipartite(g) is None:
        raise AssertionError("empty-support combination in a non-bipartite graph")
    return ZebraWitness(coefficients, support)


def is_linear_defining(g: EmbeddedCubicGraph, vertices: Iterable[int]) -> bool:
    """True when the columns outside the set are linearly independent."""
    system = build_main_sle(g)
    members = _checked_members(g, vertices)
    outside = sorted(set(range(system.n_vertices)) - members)
    return gf3.column_submatrix_rank(system.matrix, outside) == len(outside)


def is_heawood_defining(g: EmbeddedCubicGraph, vertices: Iterable[int]) -> bool:
    """True when no two Heawood vectors agree on the set."""
    members = sorted(_checked_members(g, vertices))
    vectors = enumerate_heawood_vectors(g)
    restrictions = [tuple(vec.spins[v] for v in members) for vec in vectors]
    return len(set(restrictions)) == len(restrictions)


def free_variable_defining_set(g: EmbeddedCubicGraph) -> FreeVariableSet:
    """The free columns of the main system; always linear-defining."""
    system = build_main_sle(g)
    pivot = set(gf3.rref(system.matrix).pivot_cols)
    members = frozenset(v for v in range(system.n_vertices) if v not in pivot)
    return FreeVariableSet(members, is_bipartite(g) is not None)


def minimal_defining_sets(
    g: EmbeddedCubicGraph,
    mode: Literal["linear", "heawood"] = "linear",
    max_size: int | None = None,
) -> tuple[frozenset[int], ...]:
    """All inclusion-minimal defining sets of size <= max_size.

    Subsets are enumerated by increasing size; a candidate containing an
    already-found minimal set is skipped, so every defining set that gets
    through is minimal.  Refuses graphs above the supported size instead of
    silently truncating.
    """
    if mode == "linear":
        predicate = is_linear_defining
    elif mode == "heawood":
        predicate = is_heawood_defining
    else:
        raise ValueError(f"mode must be 'linear' or 'heawood', got {mode!r}")
    n_vertices = g.n_vertices
    if n_vertices > MAX_SUBSET_SEARCH_VERTICES:
        raise SubsetSearchLimitError(
            f"subset search supports at most {MAX_SUBSET_SEARCH_VERTICES} vertices, "
            f"got {n_vertices}"
        )
    limit = n_vertices if max_size is None else int(max_size)
    if limit < 0:
        raise ValueError("max_size must be non-negative")
    found: list[frozenset[int]] = []
    for size in range(0, min(limit, n_vertices) + 1):
        for combo in itertools.combinations(range(n_vertices), size):
            candidate = frozenset(combo)
            if any(existing <= candidate for existing in found):
                continue
            if predicate(g, candidate):
                found.append(candidate)
    return tuple(sorted(found, key=lambda s: (len(s), sorted(s))))
