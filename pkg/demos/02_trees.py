"""Trees: most need two colors, a handful need three, odd paths need none.

Walks through a few trees, shows the split into shrubs at a max-degree
vertex and checks each answer against the exact search.
"""

from liec.coloring import format_coloring
from liec.graph import SimpleGraph, path_graph
from liec.oracle import chromatic_index_irr
from liec.trees import (
    NonColorableError,
    is_inversion_resistant,
    max_degree_vertices,
    shrub_based_coloring,
    tree_color,
)

trees = {
    "path of length 3": path_graph(3),
    "path of length 4": path_graph(4),
    "spider with legs 2,2,2": SimpleGraph([(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]),
    "needs three colors": SimpleGraph([(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (2, 6), (3, 7), (4, 8), (5, 9)]),
    "star with five leaves": SimpleGraph([(0, i) for i in range(1, 6)]),
}

for name, t in trees.items():
    try:
        res = tree_color(t)
        k, how = res.colors, res.method
    except NonColorableError:
        k, how = None, "odd path"
    print(f"{name}: {k} colors ({how}); exact search says {chromatic_index_irr(t, kmax=3)}")
    if t.max_degree() >= 3:
        u = max_degree_vertices(t)[0]
        sbc = shrub_based_coloring(t, u)
        print(f"  shrubs at {u}: {len(sbc.shrubs)}, color-a degrees {sbc.sequence(t)}, "
              f"inversion resistant: {is_inversion_resistant(t, u, sbc)}")
    if k:
        print("  ", format_coloring(res.coloring))
