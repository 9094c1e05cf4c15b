"""Walk counting with the nilpotent adjacency matrix.

Entry (i, j) of Psi carries zeta_j on every edge i ~ j.  Because each
generator squares to zero, powers of Psi only keep walks that never revisit
a vertex, and the coefficient of zeta_I counts them.  The brute-force DFS
oracle gives the same tables.
"""

from pathlib import Path

from zeonlap import mat_exp, read_graph
from zeonlap.oracle import oracle_all_cycles, oracle_all_paths
from zeonlap.spectra import cycle_census_from_exp, nilpotent_adjacency, walk_census_from_powers

G = read_graph(Path(__file__).with_name("graphs") / "seven.txt")
psi = nilpotent_adjacency(G)

print(f"Graph on {G.m} vertices with {len(G.edges)} edges, degrees {G.degrees()}")
print("\nDiagonal entry (7, 7) of exp(Psi):")
print(" ", mat_exp(psi)[6, 6])

algebra = cycle_census_from_exp(G, 7)
oracle = oracle_all_cycles(G, 7)
print("\nCycles through vertex 7, grouped by vertex set:")
for key, count in algebra.sorted_items()[-5:]:
    print(f"  {sorted(key)}: {count}")
print("  ... agrees with DFS:", algebra.same_counts(oracle))

print("\nSelf-avoiding paths from 1 to 2 of each length:")
for k in range(1, G.m):
    c = walk_census_from_powers(G, k, 1, 2)
    print(f"  length {k}: {c.total()} paths over {len(c)} vertex sets")
print("  DFS total:", oracle_all_paths(G, 1, 2).total())
