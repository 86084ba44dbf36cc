"""The nine-entry triangular-block catalog.

Abstract graphs plus a standard plane embedding for each entry.  The two
five-vertex/eight-edge entries differ as abstract graphs (K5 minus two
disjoint edges vs. K5 minus two adjacent edges), so isomorphism against
this list classifies every block that has a catalog shape.
"""

from __future__ import annotations

from .plane_graph import Graph, PlaneGraph, from_coordinates

__all__ = [
    "CATALOG_COUNTS",
    "CATALOG_LABELS",
    "catalog_graph",
    "catalog_plane_graph",
    "labels_by_size",
]

#: Catalog order: by vertex count, then edge count descending within it.
CATALOG_LABELS: tuple[str, ...] = (
    "B2",
    "B3",
    "B4a",
    "B4b",
    "B5a",
    "B5b",
    "B5c",
    "B5d",
    "B6",
)

_EDGES: dict[str, tuple[int, tuple[tuple[int, int], ...]]] = {
    # single edge (the trivial block)
    "B2": (2, ((0, 1),)),
    # triangle
    "B3": (3, ((0, 1), (1, 2), (0, 2))),
    # K4
    "B4a": (4, ((0, 1), (1, 2), (2, 3), (0, 3), (0, 2), (1, 3))),
    # 4-cycle plus one chord
    "B4b": (4, ((0, 1), (1, 2), (2, 3), (0, 3), (0, 2))),
    # K5 minus one edge: triangle 0-1-2, vertex 3 joined to 0,1,2,
    # vertex 4 joined to 1,2,3
    "B5a": (
        5,
        (
            (0, 1),
            (0, 2),
            (1, 2),
            (0, 3),
            (1, 3),
            (2, 3),
            (1, 4),
            (2, 4),
            (3, 4),
        ),
    ),
    # wheel: 4-cycle 0-1-2-3 with hub 4
    "B5b": (
        5,
        (
            (0, 1),
            (1, 2),
            (2, 3),
            (0, 3),
            (0, 4),
            (1, 4),
            (2, 4),
            (3, 4),
        ),
    ),
    # 4-cycle 0-1-2-3, diagonal 0-2, apex 4 joined to 0,1,2
    "B5c": (
        5,
        (
            (0, 1),
            (1, 2),
            (2, 3),
            (0, 3),
            (0, 2),
            (0, 4),
            (1, 4),
            (2, 4),
        ),
    ),
    # 5-cycle 0-1-2-3-4 with chords 0-2 and 0-3
    "B5d": (
        5,
        ((0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 2), (0, 3)),
    ),
    # hexagon 0..5 with the inscribed triangle 0-2-4
    "B6": (
        6,
        (
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 5),
            (0, 5),
            (0, 2),
            (2, 4),
            (0, 4),
        ),
    ),
}

_LAYOUTS: dict[str, tuple[tuple[float, float], ...]] = {
    "B2": ((0.0, 0.0), (1.0, 0.0)),
    "B3": ((0.0, 1.0), (-1.0, -1.0), (1.0, -1.0)),
    "B4a": ((0.0, 2.0), (-2.0, -1.0), (2.0, -1.0), (0.0, 0.0)),
    "B4b": ((0.0, 1.0), (1.0, 0.0), (0.0, -1.0), (-1.0, 0.0)),
    # outer triangle 0-1-2, vertex 3 at its centroid, vertex 4 at the
    # centroid of triangle 1-2-3: all six faces come out triangular
    "B5a": (
        (0.0, 2.0),
        (-2.0, -1.0),
        (2.0, -1.0),
        (0.0, 0.0),
        (0.0, -2.0 / 3.0),
    ),
    "B5b": ((-1.0, 1.0), (1.0, 1.0), (1.0, -1.0), (-1.0, -1.0), (0.0, 0.0)),
    "B5c": ((0.0, 1.0), (1.0, 0.0), (0.0, -1.0), (-1.0, 0.0), (0.4, 0.0)),
    "B5d": (
        (0.0, 1.0),
        (-0.951, 0.309),
        (-0.588, -0.809),
        (0.588, -0.809),
        (0.951, 0.309),
    ),
    "B6": (
        (1.0, 0.0),
        (0.5, 0.866),
        (-0.5, 0.866),
        (-1.0, 0.0),
        (-0.5, -0.866),
        (0.5, -0.866),
    ),
}

#: label -> (vertex count, edge count)
CATALOG_COUNTS: dict[str, tuple[int, int]] = {
    label: (n, len(edges)) for label, (n, edges) in _EDGES.items()
}


def catalog_graph(label: str) -> Graph:
    """The abstract catalog graph for a label."""
    try:
        n, edges = _EDGES[label]
    except KeyError:
        raise KeyError(f"unknown catalog label {label!r}") from None
    return Graph.from_edges(n, edges)


def catalog_plane_graph(label: str) -> PlaneGraph:
    """The standard plane embedding of a catalog graph (bounded faces drawn
    as in the usual figures: every bounded face of a non-trivial entry is a
    triangle)."""
    n, edges = _EDGES[label]
    return from_coordinates(_LAYOUTS[label], edges)


def labels_by_size(n: int, m: int) -> tuple[str, ...]:
    """Catalog labels whose graphs have exactly n vertices and m edges."""
    return tuple(
        label for label in CATALOG_LABELS if CATALOG_COUNTS[label] == (n, m)
    )
