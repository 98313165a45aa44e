"""Saturated subgraphs of complete tripartite graphs.

Patterns and hosts are (a, b, c) tuples; graphs are ``Graph`` objects whose
edges are (i, a, j, b) tuples meaning v_i^a v_j^b.
"""

from ._trisat import (
    Graph,
    construct,
    contains,
    enumerate_optima,
    formula,
    is_saturated,
    iso_equivalent,
    sat_exact,
    sat_exhaustive,
    sat_greedy,
)

__all__ = [
    "Graph",
    "construct",
    "contains",
    "enumerate_optima",
    "formula",
    "is_saturated",
    "iso_equivalent",
    "sat_exact",
    "sat_exhaustive",
    "sat_greedy",
]
