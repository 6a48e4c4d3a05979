"""Why the divisibility happens: the partial-flow fibration, made executable.

Strip the three distinguished edges among the last three vertices to get H.
Partial flows on H (matching the netflow on the early coordinates) extend
uniquely to flows on G - (n-1, n), and in Y_{n-1} + a_{n-1} + 1 ways to
flows on G.  Summing the fiber sizes and averaging the inflow statistic
against the ratio constant c reproduces the identity exactly.
"""

from kpflows import (
    Theorem,
    bv_hypothesis,
    complete_type_a,
    count,
    count_via_partial,
    decompose,
    delete_edges,
    enumerate_flows,
    enumerate_partial_flows,
    extend_unique,
    extend_with_index,
    materialize_fiber,
)

k4 = complete_type_a(4)
a = (3, 1, 0, -4)
print(f"complete graph on 4 vertices, netflow {a}")
print("H = K4 minus edges (2,3), (2,4), (3,4): the star from vertex 1\n")

pfs = enumerate_partial_flows(k4, a)
print(f"{len(pfs)} partial flows (all ways to send 3 units out of vertex 1):")
for pf in pfs:
    fiber = materialize_fiber(k4, pf, a)
    print(
        f"  b_H={pf.values}  inflows Y={pf.inflows}  "
        f"fiber size = Y_2 + a_2 + 1 = {pf.inflows[0]} + 1 + 1 = {len(fiber)}"
    )

total, companion = count_via_partial(k4, a)
print(f"\nsum of fiber sizes:      {total}  == count(K4, a) == {count(k4, a)}")
print(
    f"number of partial flows: {companion}  == count(K4-(2,3), a) == "
    f"{count(delete_edges(k4, [(2, 3, '-')]), a)}"
)

# The unique extension lands exactly on the flows of the reduced graph.
reduced = delete_edges(k4, [(2, 3, "-")])
images = sorted(extend_unique(k4, pf, a) for pf in pfs)
assert images == enumerate_flows(reduced, a)
print("\nunique extensions enumerate the reduced graph's flows exactly")

# Round trips: the fibration is a genuine bijection.
f = extend_with_index(k4, pfs[4], a, 1)
pf_back, k_back = decompose(k4, f, a)
print(f"extend(pf={pfs[4].values}, k=1) = {f}; decompose returns", (pf_back.values, k_back))
for flow in enumerate_flows(k4, a):
    pf, k = decompose(k4, flow, a)
    assert extend_with_index(k4, pf, a, k) == flow
print("decompose / extend round-trip verified on all", count(k4, a), "flows")

# The averaging step: c * sum(Y_2) equals (#partial flows) * (a_1).
cond = bv_hypothesis(k4, Theorem.TYPE_A)
total_y = sum(pf.inflows[0] for pf in pfs)
print(
    f"\naveraging: c * sum(Y_2) = {cond.c} * {total_y} = {cond.c * total_y}"
    f" == #pf * a_1 = {len(pfs)} * {a[0]} = {len(pfs) * a[0]}"
)
print(
    "\nhence count(K4, a) = (a_1/c + a_2 + 1) * count(K4-(2,3), a) ="
    f" ({a[0]}/{cond.c} + {a[1]} + 1) * {companion} = {total}"
)
