"""Catalan product evaluation of the complete type A graph.

On the complete graph with n+1 vertices, the flow count of the netflow
(1, 2, ..., n, -n(n+1)/2) equals the product C_1 C_2 ... C_n of Catalan
numbers, ``C_k = binom(2k, k) / (k+1)``.  These helpers build that instance
exactly; the comparison itself lives in the CLI and the test suite.
"""

from __future__ import annotations

from math import comb

from .graphs import SignedMultigraph, complete_type_a


def catalan_number(k: int) -> int:
    if k < 0:
        raise ValueError("Catalan numbers need k >= 0")
    return comb(2 * k, k) // (k + 1)


def catalan_product(n: int) -> int:
    out = 1
    for k in range(1, n + 1):
        out *= catalan_number(k)
    return out


def catalan_graph(n: int) -> SignedMultigraph:
    """Complete type A graph on n+1 vertices."""
    if n < 1:
        raise ValueError("need n >= 1")
    return complete_type_a(n + 1)


def catalan_netflow(n: int) -> tuple[int, ...]:
    """The staircase netflow (1, 2, ..., n, -n(n+1)/2)."""
    if n < 1:
        raise ValueError("need n >= 1")
    return tuple(range(1, n + 1)) + (-(n * (n + 1) // 2),)
