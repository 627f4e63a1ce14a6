"""
Five compound families
======================

Copies of one alpha base, wired together and relabeled so the whole thing
is graceful.  Each labeler verifies its own output before returning it.
"""
from graceful import (
    base_complete_bipartite,
    base_path,
    label_cycle_of,
    label_one_point_union,
    label_open_star,
    label_path_union,
    label_star_of,
)
from graceful.graph import induced_edge_labels

base = base_complete_bipartite(2, 2)  # C4, q0 = 4

# %%
# Path union: copies in a row, one connector between neighbours.
r = label_path_union(base, 3)
print("path union   ", r.certificate.summary())

# %%
# Open star and one-point union: copies hung off a fresh center vertex.
print("open star    ", label_open_star(base, 4).certificate.summary())
print("one-point    ", label_one_point_union(base, 3, 2).certificate.summary())

# %%
# Cycle of graphs uses a formula variant fixed once per process by calibration.
r = label_cycle_of(base, 6)
print("cycle of     ", r.certificate.summary())
print("  variant:", r.formula_variant)

# %%
# Star of G: a central copy plus one outer copy per base vertex.  The spokes
# carry exactly the multiples of q0 + 1.
r = label_star_of(base)
spokes = sorted(abs(r.labeled.labels[c.a] - r.labeled.labels[c.b]) for c in r.compound.connectors)
print("star of      ", r.certificate.summary(), "spokes", spokes)

# %%
# A larger path union: five copies of P14.
r = label_path_union(base_path(14), 5)
print("P(5*P14) q =", r.labeled.q, "labels",
      sorted(induced_edge_labels(r.labeled)) == list(range(1, 70)))
