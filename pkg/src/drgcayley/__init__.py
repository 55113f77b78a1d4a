"""Distance-regular graphs of small valency: constructions, parameter
verification, Cayley-graph machinery, and the census tables."""

__version__ = "0.1.0"

from .catalog import build, census, entries, find_entry, list_names
from .cayley import cayley_graph, coset_quotient, distance_sets
from .cayleyness import automorphism_group, canonical_form, is_cayley
from .drg import (IntersectionArray, check_distance_regular,
                  gh_cayley_feasible, gq_cayley_feasible, parse_array,
                  render_array, spectrum_numeric, spectrum_of_array)
from .graphs import Graph, graph_metrics
from .groups import Group, construct_group

__all__ = [
    "Graph",
    "Group",
    "IntersectionArray",
    "automorphism_group",
    "build",
    "canonical_form",
    "cayley_graph",
    "census",
    "check_distance_regular",
    "construct_group",
    "coset_quotient",
    "distance_sets",
    "entries",
    "find_entry",
    "gh_cayley_feasible",
    "gq_cayley_feasible",
    "graph_metrics",
    "is_cayley",
    "list_names",
    "parse_array",
    "render_array",
    "spectrum_numeric",
    "spectrum_of_array",
    "__version__",
]
