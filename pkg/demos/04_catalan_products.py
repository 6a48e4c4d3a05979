"""The staircase evaluation on complete graphs equals a Catalan product.

Counting flows of (1, 2, ..., n, -n(n+1)/2) on the complete graph with n+1
vertices gives C_1 C_2 ... C_n exactly — a classical evaluation with no
known bijective explanation.  The dynamic program reproduces it in exact
integer arithmetic.
"""

import time

from kpflows import catalan_graph, catalan_netflow, catalan_number, count

print(f"{'n':>2} {'netflow':<28} {'count':>12} {'product C_1..C_n':>16} {'time':>8}")
for n in range(1, 7):
    a = catalan_netflow(n)
    start = time.monotonic()
    value = count(catalan_graph(n), a)
    elapsed = time.monotonic() - start
    product = 1
    for k in range(1, n + 1):
        product *= catalan_number(k)
    label = str(a) if n <= 4 else f"(1,..,{n},{a[-1]})"
    match = "ok" if value == product else "MISMATCH"
    print(f"{n:>2} {label:<28} {value:>12} {product:>16} {elapsed:>7.2f}s {match}")
