"""Exhaustive generation of small bispanning graphs.

Every bispanning graph arises from the one-vertex graph by repeatedly
applying two operations: attaching a new vertex by a doubled edge, or
splitting an edge through a new vertex and attaching that vertex to a
third one. Closing under these operations level by level, with canonical
codes for isomorphism rejection, enumerates everything.
"""

from bispan import canonical_code, count_bispanning, enumerate_bispanning, is_atomic

print("non-isomorphic bispanning graphs by vertex count")
print(f"{'n':>3} {'general':>8} {'simple':>7} {'atomic':>7}")
for n in range(1, 8):
    row = [count_bispanning(n, "general") if n <= 7 else "",
           count_bispanning(n, "simple") if n >= 4 else 0,
           count_bispanning(n, "atomic") if n >= 4 else 0]
    print(f"{n:>3} {row[0]:>8} {row[1]:>7} {row[2]:>7}")

print()
gs = enumerate_bispanning(5, "atomic")
print(f"the single atomic graph on 5 vertices has degree sequence "
      f"{sorted(d for v in range(5) for d in [gs[0].degree(v)])}")

# isomorphism rejection really is canonical: codes are label-independent
g = gs[0]
print("canonical code:", canonical_code(g).hex()[:24], "...")

print()
print("the twelve simple bispanning graphs on 6 vertices, "
      f"{sum(is_atomic(g) for g in enumerate_bispanning(6, 'simple'))} atomic:")
for g in enumerate_bispanning(6, "simple"):
    print(" ", " ".join(f"{u}-{v}" for _, u, v in g.edges))
