"""
Certificates and corruption
===========================

The verifier never says just "no": it lists what went wrong.
"""
from graceful import LabeledGraph, complement_labeling, verify_graceful
from graceful.graph import path_graph

g = path_graph(4)
good = LabeledGraph(g, dict(zip(g.vertices, [0, 3, 1, 2])))
print(verify_graceful(good).report())

# %%
# Complementing (f -> q - f) keeps a labeling graceful.
print(verify_graceful(complement_labeling(good)).summary())

# %%
# Swap one label for a repeated value and look at the itemised violations.
bad = LabeledGraph(g, dict(zip(g.vertices, [0, 3, 1, 1])))
print(verify_graceful(bad).report())
