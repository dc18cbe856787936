"""
Graph transformations that move the indices
===========================================

The extremal proofs rest on local rewrites that push an index in a known
direction. Each rewrite is available as a function that checks its
preconditions and returns the new graph with the edges it touched.
"""

# %%
from multzagreb import Graph, pi1, pi2
from multzagreb.constructors import cycle, join_by_path
from multzagreb.transforms import merge_pendent_paths, slide_path, tree_to_star

# A triangle with a two-edge path hanging from vertex 0.
g = Graph(5, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4)])
out = tree_to_star(g, 0)
print("removed", out.removed, "added", out.added)
print("PI1", pi1(g), "->", pi1(out.result), "  PI2", pi2(g), "->", pi2(out.result))

# %%
# Two pendent edges at different triangle vertices. Gluing one onto the
# end of the other gives a longer tail and shifts the indices the other way.
g = Graph(5, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4)])
out = merge_pendent_paths(g, 3, 1, 4)
print("PI1", pi1(g), "->", pi1(out.result), "  PI2", pi2(g), "->", pi2(out.result))

# %%
# Sliding: everything at one end of a connecting path moves to the other end.
two = join_by_path(cycle(3), 0, cycle(3), 0, 2)
out = slide_path(two, 0, 4)
print(out.result.degrees())

# %%
# Preconditions are enforced. A cycle has no hanging tree to collapse.
from multzagreb.errors import PatternMismatch

try:
    tree_to_star(cycle(5), 0)
except PatternMismatch as exc:
    print("rejected:", exc)

# %%
# The seeded suite runs every rewrite on random instances and reports
# any case where the index moved the wrong way.
from multzagreb import lemma_suite

print(lemma_suite(seed=1, trials=25, exhaustive_add=4, exhaustive_blocks=5).to_text())
