"""Counting integer flows on small signed multigraphs.

Walks through the two graph kinds, what a flow is, and the three counting
backends on hand-checkable instances.
"""

from kpflows import (
    build_graph,
    brute_force_count,
    check_flow,
    complete_type_a,
    count,
    enumerate_flows,
    root_multiset,
    weight_bound,
)

# A type A graph: the negative triangle on three vertices.  Each edge (i,j)
# carries the root e_i - e_j, so a flow moves supply from small labels to
# large ones.
g3 = build_graph(3, "A", [(1, 2, "-", 1), (1, 3, "-", 1), (2, 3, "-", 1)])
print("triangle roots:", root_multiset(g3))

a = (1, 0, -1)
print(f"\nnetflow {a}: one unit enters at vertex 1 and leaves at vertex 3")
print("weight bound (max total flow):", weight_bound(g3, a))
for f in enumerate_flows(g3, a):
    print("  flow", f, "valid:", check_flow(g3, f, a))
print("count:", count(g3, a), "— either straight along (1,3) or via vertex 2")

# The complete graph on four vertices; the counts grow quickly.
k4 = complete_type_a(4)
for a in [(3, 1, 0, -4), (1, 2, 3, -6), (5, 5, 5, -15)]:
    print(f"K4 count at {a}:", count(k4, a))

# A type C graph: positive edges leak flow out of the network, and the loop
# at vertex 1 consumes two units of supply per unit of flow.
gc = build_graph(
    4,
    "C",
    [
        (1, 1, "+", 1),
        (1, 2, "-", 1),
        (1, 3, "-", 1),
        (1, 4, "-", 1),
        (2, 3, "-", 1),
        (2, 4, "-", 1),
        (3, 4, "-", 1),
    ],
)
a = (4, 0, 0, -2)
print(f"\ntype C graph at {a}:")
print("  coordinate sum", sum(a), "=> total positive-edge flow is", sum(a) // 2)
print("  dp count:         ", count(gc, a))
print("  exhaustive count: ", brute_force_count(gc, a))
for f in enumerate_flows(gc, a, limit=4):
    print("  flow", f)
print("  ... (first four of", count(gc, a), "flows, lexicographic)")

# Infeasible netflows are counted as zero, never raised on.
print("\nodd total on type C:", count(gc, (4, 0, 0, -1)))
print("prefix violation on type A:", count(g3, (-1, 1, 0)))
