"""Chordless-graph recognition, optimal acyclic edge coloring, and
linear-forest extraction."""

from chordless._chordless import (
    Graph,
    GraphLibraryError,
    NotChordlessError,
    brute_force_aci,
    color_graph,
    find_special_split,
    generate_chordless,
    is_chordless,
    is_two_sparse,
    linear_forests,
    optimal_palette,
    verify_coloring,
)

__all__ = [
    "Graph",
    "GraphLibraryError",
    "NotChordlessError",
    "brute_force_aci",
    "color_graph",
    "find_special_split",
    "generate_chordless",
    "is_chordless",
    "is_two_sparse",
    "linear_forests",
    "optimal_palette",
    "verify_coloring",
]
