"""
Indices and cut edges of a small graph
======================================

Build a graph from an edge list, read off both multiplicative Zagreb
indices, and see which of its edges are bridges.
"""

# %%
# Two triangles joined by a single edge. Vertex 0 belongs to the first
# triangle and vertex 3 to the second.
from multzagreb import Graph, classify_cut_edges, encode_g6, pi1, pi2
from multzagreb.indices import ln_pi2, m1, m2, pi2_edge_form

g = Graph(6, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (4, 5), (3, 5)])
print("graph6:", encode_g6(g))
print("degrees:", g.degrees())

# %%
# PI1 multiplies squared degrees. PI2 multiplies d(u)d(v) over edges,
# which regroups into d**d over vertices. Both are exact integers.
print("PI1 =", pi1(g))
print("PI2 =", pi2(g), "edge form:", pi2_edge_form(g))
print("ln PI2 = %.4f" % ln_pi2(g))
print("additive versions: M1 =", m1(g), " M2 =", m2(g))

# %%
# The joining edge is the only bridge. It is internal: neither endpoint
# is a leaf. Blocks are listed as vertex tuples.
report = classify_cut_edges(g)
print("bridges:", report.bridges)
print("internal:", report.internal, " pendent:", report.pendent)
print("blocks:", report.blocks)

# %%
# Hanging a leaf on vertex 5 adds a pendent bridge and raises both indices.
h = Graph(7, [*g.edges, (5, 6)])
print("after adding a leaf:", classify_cut_edges(h).pendent)
print("PI1 grew:", pi1(h) > pi1(g), " PI2 grew:", pi2(h) > pi2(g))
