"""
Alpha-labeled bases
===================

Every compound graph starts from a base with an alpha labeling: the low side
holds the small labels, the high side the large ones.
"""
from graceful import base_complete_bipartite, base_cycle, base_grid, base_path, verify_alpha

# %%
# The zigzag path. Positions alternate between the low and the high side.
p = base_path(6)
print(p.name, "q0 =", p.q0)
print("low side ", p.a)
print("high side", p.b)

# %%
# A cycle of length 8 and a block K_{3,2}.
for b in (base_cycle(8), base_complete_bipartite(3, 2)):
    print(f"{b.name:10s} a={b.a} b={b.b} boundary {b.a[-1]} < {b.b[0]}")

# %%
# Grids are labeled by sweeping columns; the verifier is the only judge.
g = base_grid(3, 4)
print(g.name, verify_alpha(g).summary())
