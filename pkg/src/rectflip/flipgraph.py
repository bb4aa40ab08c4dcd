"""Typed flip graph over all drawings of a given size, plus verification suites.

The graph's nodes are keyed by the permutations that generate the
drawings; each undirected edge carries the flip kinds connecting its
endpoints with a multiplicity per kind.  The verify_* functions compare
flip-side adjacency against relations computed purely on the
permutation side, so each suite is a genuine cross-check rather than a
tautology.
"""

from __future__ import annotations

import itertools
import json
from collections import Counter, deque
from dataclasses import dataclass
from functools import cache

from .bijection import baxter_of
from .flips import FlipKind, neighbors
from .order import drec_covers, inversion_mask
from .permutation import (
    BAXTER,
    RIGHTMOST,
    TWISTED_BAXTER,
    Word,
    avoids_class,
    consecutive_value_swap,
    enumerate_avoiders,
    format_permutation,
)
from .rectangulation import GridRectangulation, Matrix, rho, staircase_extraction

Pair = tuple[Word, Word]


def _sorted_pair(a: Word, b: Word) -> Pair:
    return (a, b) if a <= b else (b, a)


@dataclass(frozen=True, eq=False)
class FlipGraph:
    """Flip adjacency between all drawings of one size.

    Parallel flips between the same two drawings collapse to a single
    edge per kind with a multiplicity counter.
    """

    n: int
    nodes: tuple[Word, ...]
    grids: dict[Word, GridRectangulation]
    edges: dict[Pair, dict[FlipKind, int]]

    def pairs_tagged(self, kinds: set[FlipKind]) -> set[Pair]:
        return {pair for pair, tags in self.edges.items() if kinds & tags.keys()}


@cache
def build(n: int) -> FlipGraph:
    """Flip graph on every drawing of size n.

    Flip results are mapped back to node keys through their matrices;
    that every result matrix is present is itself part of what the
    verification suites establish.
    """
    words = enumerate_avoiders(n, BAXTER)
    grids = {w: rho(w) for w in words}
    key_of = {grid.matrix: w for w, grid in grids.items()}
    directed: Counter = Counter()
    for w, grid in grids.items():
        for flipped, flip_class, _ in neighbors(grid):
            directed[w, key_of[flipped.matrix], flip_class.kind] += 1
    edges: dict[Pair, dict[FlipKind, int]] = {}
    for (w, w2, kind), count in directed.items():
        assert directed[w2, w, kind] == count
        edges.setdefault(_sorted_pair(w, w2), {})[kind] = count
    return FlipGraph(n, tuple(words), grids, edges)


def _adjacency(
    fg: FlipGraph, kinds: set[FlipKind] | None = None
) -> dict[Word, set[Word]]:
    adj: dict[Word, set[Word]] = {w: set() for w in fg.nodes}
    for (a, b), tags in fg.edges.items():
        if kinds is None or kinds & tags.keys():
            adj[a].add(b)
            adj[b].add(a)
    return adj


def _bfs(adj: dict[Word, set[Word]], source: Word) -> dict[Word, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        w = queue.popleft()
        for v in adj[w]:
            if v not in dist:
                dist[v] = dist[w] + 1
                queue.append(v)
    return dist


def _component_count(adj: dict[Word, set[Word]]) -> int:
    seen: set[Word] = set()
    count = 0
    for w in adj:
        if w not in seen:
            count += 1
            seen.update(_bfs(adj, w))
    return count


def simple_flip_components(n: int) -> int:
    """Connected components of the simple-flips-only subgraph."""
    return _component_count(_adjacency(build(n), {FlipKind.SIMPLE}))


def metrics(fg: FlipGraph) -> dict:
    """Exact BFS metrics.

    Degrees count flip multiplicities, so a node's degree is the number
    of flippable edges of its drawing.  diameter is None when the graph
    is disconnected.
    """
    adj = _adjacency(fg)
    degrees = dict.fromkeys(fg.nodes, 0)
    for (a, b), tags in fg.edges.items():
        m = sum(tags.values())
        degrees[a] += m
        degrees[b] += m
    connected = _component_count(adj) == 1
    diameter = None
    if connected:
        diameter = max(
            max(_bfs(adj, w).values(), default=0) for w in fg.nodes
        )
    values = list(degrees.values())
    return {
        "diameter": diameter,
        "degree_min": min(values),
        "degree_max": max(values),
        "degree_mean": sum(values) / len(values),
        "connected": connected,
    }


@dataclass(frozen=True)
class VerificationReport:
    name: str
    n: int
    checked: int
    failures: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        status = "ok" if self.ok else f"FAILED, {len(self.failures)} counterexamples"
        return f"{self.name} n={self.n}: checked {self.checked}, {status}"


def _fmt_pair(pair: Pair) -> str:
    return f"({format_permutation(pair[0])}, {format_permutation(pair[1])})"


def compare_edge_sets(
    name: str,
    n: int,
    flip_side: set[Pair],
    oracle_side: set[Pair],
    flip_desc: str,
    oracle_desc: str,
) -> VerificationReport:
    """Set equality with one readable failure line per missing pair."""
    failures = []
    for pair in sorted(flip_side - oracle_side):
        failures.append(f"{_fmt_pair(pair)} is {flip_desc} but not {oracle_desc}")
    for pair in sorted(oracle_side - flip_side):
        failures.append(f"{_fmt_pair(pair)} is {oracle_desc} but not {flip_desc}")
    return VerificationReport(name, n, len(flip_side | oracle_side), tuple(failures))


def _swap_pairs(fg: FlipGraph) -> set[Pair]:
    # Baxter pairs one consecutive-value swap apart
    nodes = set(fg.nodes)
    pairs = set()
    for w in fg.nodes:
        for k in range(1, fg.n):
            other = consecutive_value_swap(w, k)
            if other in nodes:
                pairs.add(_sorted_pair(w, other))
    return pairs


def _cover_pairs(n: int) -> set[Pair]:
    return {_sorted_pair(a, b) for a, b in drec_covers(n)}


def verify_theorem_main(n: int) -> VerificationReport:
    """Barcelona-flip adjacency against consecutive-value-swap adjacency."""
    fg = build(n)
    flip_side = fg.pairs_tagged({FlipKind.SIMPLE, FlipKind.ROTATION_BARCELONA})
    return compare_edge_sets(
        "theorem_main",
        n,
        flip_side,
        _swap_pairs(fg),
        "Barcelona-flip adjacent",
        "one consecutive-value swap apart",
    )


def verify_theorem_lr(n: int) -> VerificationReport:
    """Law-Reading-flip adjacency against weak-order covers on Baxter elements."""
    fg = build(n)
    flip_side = fg.pairs_tagged({FlipKind.SIMPLE, FlipKind.ROTATION_LR})
    return compare_edge_sets(
        "theorem_lr",
        n,
        flip_side,
        _cover_pairs(n),
        "Law-Reading-flip adjacent",
        "a cover of the restricted weak order",
    )


def verify_characterization(n: int) -> VerificationReport:
    """Simple flips as the intersection, all flips as the union, of the two relations."""
    fg = build(n)
    swaps = _swap_pairs(fg)
    covers = _cover_pairs(n)
    inter = compare_edge_sets(
        "characterization",
        n,
        fg.pairs_tagged({FlipKind.SIMPLE}),
        swaps & covers,
        "Simple-flip adjacent",
        "in both permutation-side relations",
    )
    union = compare_edge_sets(
        "characterization",
        n,
        set(fg.edges),
        swaps | covers,
        "flip adjacent",
        "in some permutation-side relation",
    )
    return VerificationReport(
        "characterization",
        n,
        inter.checked + union.checked,
        inter.failures + union.failures,
    )


def verify_counts(n: int) -> VerificationReport:
    """Node inventory against the fiber-grouping oracle and the selection map.

    Groups every permutation by drawing; the set of drawings must match
    the nodes exactly, and selecting the Baxter member of each node's
    fiber must return the node's own key.
    """
    fg = build(n)
    failures = []
    distinct = {rho(w).matrix for w in itertools.permutations(range(1, n + 1))}
    node_matrices = {grid.matrix for grid in fg.grids.values()}
    if len(fg.nodes) != len(distinct):
        failures.append(
            f"{len(fg.nodes)} nodes but {len(distinct)} distinct drawings"
        )
    if node_matrices != distinct:
        failures.append("node drawings differ from the drawings of all permutations")
    for w in fg.nodes:
        back = baxter_of(fg.grids[w])
        if back != w:
            failures.append(
                f"{format_permutation(w)} draws a grid whose Baxter member is "
                f"{format_permutation(back)}"
            )
    checked = len(fg.nodes) + len(distinct)
    return VerificationReport("counts", n, checked, tuple(failures))


def verify_inversion(n: int) -> VerificationReport:
    """Fibers are weak-order intervals with the stated extremes and members.

    For every drawing: the leftmost extraction word is the weak-order
    minimum of its fiber, the rightmost the maximum, the fiber is the
    full interval between them, and each of the three pattern classes
    contributes exactly one member.
    """
    groups: dict[Matrix, list[Word]] = {}
    for w in itertools.permutations(range(1, n + 1)):
        groups.setdefault(rho(w).matrix, []).append(w)
    masks = {w: inversion_mask(w) for members in groups.values() for w in members}
    failures = []
    for matrix, members in groups.items():
        grid = GridRectangulation(matrix)
        lo = staircase_extraction(grid, "leftmost")
        hi = staircase_extraction(grid, "rightmost")
        tag = f"fiber of {format_permutation(lo)}"
        if lo not in members or hi not in members:
            failures.append(f"{tag}: extraction words are not members")
            continue
        lo_mask, hi_mask = masks[lo], masks[hi]
        for m in members:
            if lo_mask & ~masks[m] or masks[m] & ~hi_mask:
                failures.append(
                    f"{tag}: {format_permutation(m)} is not between the extremes"
                )
        interval = sum(
            1
            for mask in masks.values()
            if not (lo_mask & ~mask or mask & ~hi_mask)
        )
        if interval != len(members):
            failures.append(
                f"{tag}: {len(members)} members but interval size {interval}"
            )
        for pclass in (BAXTER, TWISTED_BAXTER, RIGHTMOST):
            hits = [m for m in members if avoids_class(m, pclass)]
            if len(hits) != 1:
                failures.append(
                    f"{tag}: {len(hits)} members avoid {pclass.name}"
                )
    return VerificationReport("inversion", n, len(groups), tuple(failures))


def graph_json(fg: FlipGraph) -> str:
    """Deterministic JSON dump: permutation strings and typed edges."""
    edges = []
    for a, b in sorted(fg.edges):
        for kind in sorted(fg.edges[a, b], key=lambda k: k.value):
            edges.append(
                {
                    "a": format_permutation(a),
                    "b": format_permutation(b),
                    "class": kind.value,
                    "multiplicity": fg.edges[a, b][kind],
                }
            )
    doc = {
        "n": fg.n,
        "nodes": [format_permutation(w) for w in fg.nodes],
        "edges": edges,
    }
    return json.dumps(doc, indent=2) + "\n"
