"""Exact counting and enumeration of nonnegative integer flows.

The count of a netflow vector ``a`` on a graph G is the number of ways to
write ``a`` as a nonnegative integer combination of the roots attached to
G's edge copies.  Two independent algorithms are provided:

* :func:`brute_force_count` / :func:`enumerate_flows` — certified exhaustive
  enumeration.  Under the vertex weights ``w_i = n+2-i`` every root of either
  type has weight >= 1, so any flow b satisfies ``sum(b) <= w . a``; that
  linear functional bounds the search exactly.
* :func:`count` — a memoized dynamic program over vertices in increasing
  label order that never materializes flows.

All arithmetic is exact (Python integers); counts grow super-exponentially
and must not be truncated.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from math import comb

from .errors import DimensionMismatch, LimitExceeded
from .graphs import NEG, GraphKind, SignedMultigraph, root_of_edge

FlowVector = tuple[int, ...]


def _check_netflow(graph: SignedMultigraph, a: Sequence[int]) -> None:
    if len(a) != graph.n_plus_1:
        raise DimensionMismatch(
            f"netflow has length {len(a)}, graph has {graph.n_plus_1} vertices"
        )
    for x in a:
        if not isinstance(x, int):
            raise DimensionMismatch(f"netflow entries must be integers, got {x!r}")


def vertex_weights(n_plus_1: int) -> tuple[int, ...]:
    """Weights ``w_i = n+2-i``; positive on every type A / type C root."""
    return tuple(n_plus_1 + 1 - i for i in range(1, n_plus_1 + 1))


def weight_bound(graph: SignedMultigraph, a: Sequence[int]) -> int:
    """Budget ``W = sum_i (n+2-i) a_i``.

    Any valid flow b satisfies ``sum(b) <= W``; a negative W certifies that
    the count is zero.
    """
    _check_netflow(graph, a)
    w = vertex_weights(graph.n_plus_1)
    return sum(wi * ai for wi, ai in zip(w, a))


def _conservation_holds(
    graph: SignedMultigraph, f: Sequence[int], a: Sequence[int]
) -> bool:
    """Vertex-local form: negative inflow + a_v equals positive inflow plus
    outflow plus twice the loop flow at v."""
    n1 = graph.n_plus_1
    neg_in = [0] * n1
    pos_in = [0] * n1
    out = [0] * n1
    loop = [0] * n1
    for (i, j, sign), b in zip(graph.edge_slots(), f):
        if i == j:
            loop[i - 1] += b
        elif sign == NEG:
            out[i - 1] += b
            neg_in[j - 1] += b
        else:
            out[i - 1] += b
            pos_in[j - 1] += b
    return all(
        neg_in[v] + a[v] == pos_in[v] + out[v] + 2 * loop[v] for v in range(n1)
    )


def _combination_holds(
    graph: SignedMultigraph, f: Sequence[int], a: Sequence[int]
) -> bool:
    """Defining form: the b-weighted sum of edge roots equals ``a``."""
    n1 = graph.n_plus_1
    acc = [0] * n1
    for (i, j, sign), b in zip(graph.edge_slots(), f):
        root = root_of_edge(i, j, sign, n1)
        acc[i - 1] += b * root[i - 1]
        if j != i:
            acc[j - 1] += b * root[j - 1]
    return all(acc[v] == a[v] for v in range(n1))


def check_flow(
    graph: SignedMultigraph, f: Sequence[int], a: Sequence[int]
) -> bool:
    """True iff ``f`` is a nonnegative integer a-flow on the graph.

    Evaluated through both the vertex-conservation form and the
    root-combination form; the two must agree.
    """
    _check_netflow(graph, a)
    if len(f) != graph.num_edges:
        raise DimensionMismatch(
            f"flow has length {len(f)}, graph has {graph.num_edges} edge copies"
        )
    if any(not isinstance(b, int) or b < 0 for b in f):
        return False
    by_vertex = _conservation_holds(graph, f, a)
    by_roots = _combination_holds(graph, f, a)
    if by_vertex != by_roots:  # pragma: no cover - internal consistency
        raise RuntimeError("flow-check formulations disagree; please report")
    return by_vertex


def _iter_flows(graph: SignedMultigraph, a: Sequence[int]) -> Iterator[FlowVector]:
    """All valid flows in lexicographic order of the flow vector.

    Enumerates edge copies in canonical order; prunes on the weighted budget,
    and on coordinates that no later edge can still touch.
    """
    n1 = graph.n_plus_1
    slots = graph.edge_slots()
    w = vertex_weights(n1)
    entries: list[tuple[tuple[int, int], ...]] = []
    slot_weight: list[int] = []
    for i, j, sign in slots:
        if i == j:
            ent = ((i - 1, 2),)
        elif sign == NEG:
            ent = ((i - 1, 1), (j - 1, -1))
        else:
            ent = ((i - 1, 1), (j - 1, 1))
        entries.append(ent)
        slot_weight.append(sum(cf * w[k] for k, cf in ent))
    budget = sum(wi * ai for wi, ai in zip(w, a))
    if budget < 0:
        return
    residual = list(a)
    buf = [0] * len(slots)

    def rec(t: int, left: int) -> Iterator[FlowVector]:
        if t == len(slots):
            if not any(residual):
                yield tuple(buf)
            return
        first = slots[t][0]
        # coordinates below the current smaller endpoint are final
        if any(residual[u] for u in range(first - 1)):
            return
        wt = slot_weight[t]
        for b in range(left // wt + 1):
            buf[t] = b
            for k, cf in entries[t]:
                residual[k] -= cf * b
            yield from rec(t + 1, left - b * wt)
            for k, cf in entries[t]:
                residual[k] += cf * b
        buf[t] = 0

    yield from rec(0, budget)


def brute_force_count(graph: SignedMultigraph, a: Sequence[int]) -> int:
    """Ground-truth count by exhaustive enumeration; exponential time."""
    _check_netflow(graph, a)
    return sum(1 for _ in _iter_flows(graph, a))


def enumerate_flows(
    graph: SignedMultigraph,
    a: Sequence[int],
    limit: int | None = None,
    require_complete: bool = False,
) -> list[FlowVector]:
    """Valid flows in lexicographic order, truncated at ``limit`` if given.

    With ``require_complete=True`` a truncation raises :class:`LimitExceeded`
    instead of silently dropping flows.
    """
    _check_netflow(graph, a)
    if limit is not None and (not isinstance(limit, int) or limit < 1):
        raise ValueError(f"limit must be a positive integer or None, got {limit!r}")
    out: list[FlowVector] = []
    for f in _iter_flows(graph, a):
        if limit is not None and len(out) == limit:
            if require_complete:
                raise LimitExceeded(
                    f"more than {limit} flows exist but completeness was requested"
                )
            return out
        out.append(f)
    return out


def count(graph: SignedMultigraph, a: Sequence[int]) -> int:
    """Number of nonnegative integer a-flows; equals brute_force_count always.

    Vertices are processed in increasing label order.  At vertex v the
    supply ``a_v`` plus committed negative inflow minus committed positive
    inflow must be split over the outgoing edges (and twice per unit onto
    loops); branches with negative supply die.  States are memoized on the
    vector of contributions committed to the not-yet-processed vertices.
    Parallel copies of one edge are aggregated with a stars-and-bars factor.
    """
    _check_netflow(graph, a)
    n1 = graph.n_plus_1
    total = sum(a)
    if graph.kind is GraphKind.TYPE_A and total != 0:
        return 0
    if graph.kind is GraphKind.TYPE_C and (total < 0 or total % 2):
        return 0

    out_groups: dict[int, list[tuple[int, str, int]]] = {}
    loop_mult: dict[int, int] = {}
    for i, j, sign, m in graph.edges:
        if i == j:
            loop_mult[i] = loop_mult.get(i, 0) + m
        else:
            out_groups.setdefault(i, []).append((j, sign, m))
    for groups in out_groups.values():
        groups.sort(key=lambda g: (g[0], 0 if g[1] == NEG else 1))

    memo: dict[tuple[int, tuple[int, ...]], int] = {}

    def process(v: int, committed: tuple[int, ...]) -> int:
        if v > n1:
            return 1
        key = (v, committed)
        cached = memo.get(key)
        if cached is not None:
            return cached
        supply = a[v - 1] + committed[0]
        rest = committed[1:]
        if supply < 0:
            memo[key] = 0
            return 0
        groups = out_groups.get(v, [])
        loops = loop_mult.get(v, 0)
        acc = 0

        def distribute(idx: int, remaining: int, ways: int, state: tuple[int, ...]) -> None:
            nonlocal acc
            if idx == len(groups):
                if loops:
                    if remaining % 2 == 0:
                        t = remaining // 2
                        acc += ways * comb(t + loops - 1, loops - 1) * process(v + 1, state)
                elif remaining == 0:
                    acc += ways * process(v + 1, state)
                return
            j, sign, m = groups[idx]
            pos = j - v - 1
            step = 1 if sign == NEG else -1
            for t in range(remaining + 1):
                nxt = state[:pos] + (state[pos] + step * t,) + state[pos + 1 :]
                distribute(idx + 1, remaining - t, ways * comb(t + m - 1, m - 1), nxt)

        distribute(0, supply, 1, rest)
        memo[key] = acc
        return acc

    return process(1, (0,) * n1)
