"""
Reading and writing graph6
==========================

graph6 packs a simple graph into one printable line. Files of such lines
can also replace the built-in generator as the source of graphs.
"""

# %%
import io

from multzagreb import decode_g6, encode_g6
from multzagreb.constructors import complete, k_n_s
from multzagreb.enumerate import connected_graphs, ingest_connected
from multzagreb.g6 import iter_records

print(encode_g6(complete(4)), encode_g6(k_n_s((6, 2))))
print(decode_g6("Dhc").edges)

# %%
# Round trip on every connected graph with six vertices.
print(all(decode_g6(encode_g6(g)) == g for g in connected_graphs(6)))

# %%
# Bad records are reported with their line number.
text = io.StringIO("C~\nBw\nD?A\n")
try:
    for lineno, g in iter_records(text):
        print(lineno, g.n, g.m)
except ValueError as exc:
    print("error:", exc)

# %%
# Ingest mode: duplicates and relabelings collapse, disconnected graphs drop out.
lines = ["Bw", "Bg", "BW", "B?", "BG"]
print([encode_g6(g) for g in ingest_connected(lines, 3)])
