"""Coloring a random cactus step by step.

Generates a seeded cactus, prints the reduction steps the engine takes
and verifies the final coloring independently.
"""

import sys

from liec.coloring import is_liec
from liec.generate import gen_random_cactus
from liec.graph import cycle_count
from liec.reduction import color_cactus

seed = int(sys.argv[1]) if len(sys.argv) > 1 else 7
g = gen_random_cactus(30, 6, seed)
print(f"seed {seed}: {g.n} vertices, {g.m} edges, {cycle_count(g)} cycles")
r = color_cactus(g)
print("verdict:", r.verdict.value, "method:", r.method)
for s in r.steps:
    where = f"at {s.root}" if s.root >= 0 else "base"
    print(f"  {where}: colored {s.reduced} by {s.rule}" + (f" ({s.anchor})" if s.anchor else ""))
if r.coloring is not None:
    print(f"{r.colors} colors, valid: {is_liec(g, r.coloring)}")
