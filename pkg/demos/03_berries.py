"""Berries and grapes.

A grape is a vertex with pieces hanging off it; each piece is a berry.
The script names a few berries, prints their flavored colorings, then
colors a grape by summing colorings of its berries.
"""

from liec.berries import BerryError, classify_berry, primary_coloring, secondary_coloring, tertiary_coloring
from liec.coloring import format_coloring, is_liec
from liec.decomp import berries, grape_root, make_berry
from liec.graph import SimpleGraph
from liec.reduction import grape_3liec
from liec.templates import B3, B7

examples = {
    "triangle": SimpleGraph([(0, 1), (0, 2), (1, 2)]),
    "triangle with a 2-path": SimpleGraph([(0, 1), (0, 2), (1, 2), (1, 3), (3, 4)]),
    "square with a tail": SimpleGraph([(0, 1), (1, 2), (2, 3), (0, 3), (2, 4)]),
    "template B3": B3.graph,
    "template B7": B7.graph,
}

for name, g in examples.items():
    b = make_berry(g, 0)
    print(f"{name}: kind {classify_berry(b).tag}")
    for make in (primary_coloring, secondary_coloring, tertiary_coloring):
        try:
            bc = make(b)
        except BerryError as exc:
            print(f"  {make.__name__}: none ({exc})")
            continue
        print(f"  {bc.flavor.value}: {format_coloring(bc.coloring)} liec={bc.liec}")

grape = SimpleGraph([(0, 1), (0, 2), (1, 2), (0, 3), (3, 4), (4, 5), (0, 5), (4, 6), (0, 7)])
u = grape_root(grape)
print(f"\ngrape rooted at {u} with {len(berries(grape, u))} berries")
col = grape_3liec(grape)
print(format_coloring(col), "valid:", is_liec(grape, col))
