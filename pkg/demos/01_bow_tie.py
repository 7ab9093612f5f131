"""Why one small cactus needs four colors.

Two triangles share a vertex and every other triangle vertex carries two
pendant edges. The script lets the exact search try three colors, then
shows the stored four-coloring and what each vertex sees in it.
"""

from liec.coloring import color_degrees, format_coloring, is_liec
from liec.oracle import chromatic_index_irr, find_liec
from liec.reduction import color_cactus
from liec.templates import BOW_TIE

g = BOW_TIE.graph
print(f"bow-tie: {g.n} vertices, {g.m} edges")
print("3-coloring found by exhaustive search:", find_liec(g, 3))
print("irregular chromatic index:", chromatic_index_irr(g))

r = color_cactus(g)
print("verdict:", r.verdict.value)
print("coloring:", format_coloring(r.coloring))
print("valid:", is_liec(g, r.coloring))
degs = color_degrees(g, r.coloring)
for v in sorted(degs):
    print(f"  vertex {v}: degree per color {dict(sorted(degs[v].items()))}")
