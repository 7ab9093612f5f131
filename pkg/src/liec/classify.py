"""Colorability verdicts and recognition of the non-colorable cactus family T."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .graph import GraphError, SimpleGraph, cycle_list, is_cactus, is_connected
from .templates import B_PRIME, BOW_TIE, match_template


class Verdict(enum.Enum):
    NON_COLORABLE_ODD_PATH = "NonColorableOddPath"
    NON_COLORABLE_ODD_CYCLE = "NonColorableOddCycle"
    NON_COLORABLE_T = "NonColorableT"
    BOW_TIE = "BowTieB"
    GRAPE_B_PRIME = "GrapeBPrime"
    COLORABLE = "Colorable"

    @property
    def colorable(self) -> bool:
        return self not in (
            Verdict.NON_COLORABLE_ODD_PATH,
            Verdict.NON_COLORABLE_ODD_CYCLE,
            Verdict.NON_COLORABLE_T,
        )


@dataclass
class TTrace:
    """Build sequence for a member of T.

    ``steps`` use the labelling produced by :func:`replay_T`: the start
    triangle is 0,1,2 and each step numbers its new vertices consecutively.
    ``mapping`` sends that labelling to the recognised graph's vertex ids.
    """

    steps: list[tuple[str, int, int]] = field(default_factory=list)
    mapping: dict[int, int] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.steps)


@dataclass
class Classification:
    verdict: Verdict
    witness: object = None


def replay_T(steps: list[tuple[str, int, int]]) -> SimpleGraph:
    """Rebuild a member of T from its steps (same numbering as ``gen_T``)."""
    g = SimpleGraph([(0, 1), (1, 2), (0, 2)])
    for rule, v, length in steps:
        if g.degree(v) != 2:
            raise GraphError(f"step at {v}: vertex does not have degree 2")
        base = max(g.vertices) + 1
        path = [v] + [base + j for j in range(length)]
        new = [(path[j], path[j + 1]) for j in range(length)]
        if rule == "even-path":
            if length % 2:
                raise GraphError("even-path step with odd length")
        elif rule == "triangle-odd-path":
            if length % 2 == 0:
                raise GraphError("triangle step with even path length")
            t = path[-1]
            x, y = base + length, base + length + 1
            new += [(t, x), (x, y), (t, y)]
        else:
            raise GraphError(f"unknown rule {rule!r}")
        g = g.with_edges(new)
    return g


def is_in_T(g: SimpleGraph) -> TTrace | None:
    """Recognise T structurally and rebuild a trace, or return None."""
    if g.m == 0 or not is_connected(g) or not is_cactus(g):
        return None
    cycles = cycle_list(g)
    if not cycles or any(len(c) != 3 for c in cycles):
        return None
    tri_of: dict[int, int] = {}
    for i, c in enumerate(cycles):
        for x in c:
            if x in tri_of:
                return None
            tri_of[x] = i
    for x in g.vertices:
        if g.degree(x) > (3 if x in tri_of else 2):
            return None

    def walk(x: int, first: int) -> list[int]:
        """Follow the path leaving triangle vertex x through ``first``."""
        out = [x, first]
        while out[-1] not in tri_of and g.degree(out[-1]) == 2:
            nxt = [y for y in g.neighbors(out[-1]) if y != out[-2]]
            out.append(nxt[0])
        return out

    start = min(range(len(cycles)), key=lambda i: min(cycles[i]))
    a, b, c = sorted(cycles[start])
    mapping = {0: a, 1: b, 2: c}
    back = {a: 0, b: 1, c: 2}
    steps: list[tuple[str, int, int]] = []
    queue = [start]
    done = {start}
    counter = 3
    while queue:
        i = queue.pop(0)
        for x in sorted(cycles[i]):
            outside = [y for y in g.neighbors(x) if y not in cycles[i]]
            if not outside:
                continue
            path = walk(x, outside[0])
            end = path[-1]
            length = len(path) - 1
            if end in tri_of:
                j = tri_of[end]
                if j in done:
                    continue  # the edge back toward the parent triangle
                if length % 2 == 0:
                    return None
                steps.append(("triangle-odd-path", back[x], length))
                for k, y in enumerate(path[1:]):
                    mapping[counter + k] = y
                    back[y] = counter + k
                counter += length
                p, q = sorted(set(cycles[j]) - {end})
                mapping[counter], mapping[counter + 1] = p, q
                back[p], back[q] = counter, counter + 1
                counter += 2
                done.add(j)
                queue.append(j)
            else:
                if length % 2:
                    return None
                steps.append(("even-path", back[x], length))
                for k, y in enumerate(path[1:]):
                    mapping[counter + k] = y
                    back[y] = counter + k
                counter += length
    if len(mapping) != g.n:
        return None
    return TTrace(steps, mapping)


def _is_path(g: SimpleGraph) -> bool:
    return g.m == g.n - 1 and g.max_degree() <= 2


def _is_cycle(g: SimpleGraph) -> bool:
    return g.m == g.n and g.m >= 3 and all(g.degree(x) == 2 for x in g.vertices)


def classify(g: SimpleGraph) -> Classification:
    if not is_connected(g):
        raise GraphError("graph is not connected")
    if g.m == 0:
        return Classification(Verdict.COLORABLE, "no edges")
    if _is_path(g):
        if g.m % 2:
            return Classification(Verdict.NON_COLORABLE_ODD_PATH, f"path of length {g.m}")
        return Classification(Verdict.COLORABLE, f"path of length {g.m}")
    # the triangle is both an odd cycle and the seed of T; report it as T
    trace = is_in_T(g)
    if trace is not None:
        return Classification(Verdict.NON_COLORABLE_T, trace)
    if _is_cycle(g):
        if g.m % 2:
            return Classification(Verdict.NON_COLORABLE_ODD_CYCLE, f"cycle of length {g.m}")
        return Classification(Verdict.COLORABLE, f"cycle of length {g.m}")
    iso = match_template(g, BOW_TIE)
    if iso is not None:
        return Classification(Verdict.BOW_TIE, iso)
    iso = match_template(g, B_PRIME)
    if iso is not None:
        return Classification(Verdict.GRAPE_B_PRIME, iso)
    return Classification(Verdict.COLORABLE, None)


def is_colorable(g: SimpleGraph) -> bool:
    return classify(g).verdict.colorable
