"""
Exhaustive search
=================

A budgeted backtracking search gives ground truth for small graphs.
C5 and C6 have no graceful labeling; the search proves it by exhaustion.
"""
from graceful import SearchBudget, find_alpha, find_graceful
from graceful.graph import cycle_graph, grid_graph

budget = SearchBudget(max_nodes=1_000_000)
for n in range(3, 13):
    out = find_graceful(cycle_graph(n), budget)
    print(f"C{n:<2d} {out.status.value:15s} {out.nodes_expanded:>8d} nodes")

# %%
# Alpha labelings need a bipartition; odd cycles are rejected at once.
print(find_alpha(cycle_graph(7), budget).status.value)
out = find_alpha(grid_graph(2, 3), budget)
print(out.status.value, "boundary", out.boundary)
