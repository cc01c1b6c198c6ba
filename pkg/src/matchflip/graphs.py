"""Flip graphs over all matchings of a given size.

Vertices are the C_n non-crossing perfect matchings identified by their
canonical rank; edges join matchings one flip apart.  mode="all" keeps
every flip (with a per-edge centered flag), mode="centered" only the
centered ones.  Storage is compact: one offsets array plus one flat sorted
targets array, so neighbor lists are deterministic slices.
"""

from __future__ import annotations

import random
from array import array
from bisect import bisect_left
from dataclasses import dataclass
from math import comb
from typing import Iterator

from .chords import chord_length, is_centrally_symmetric, weight
from .dyck import (_partner_from_word, _suffix_counts, dyck_words, rank,
                   to_dyck, unrank)
from .errors import ResourceLimitError
from .flips import _forest_pairs, _in_chords

MODES = ("all", "centered")


def _partner_rank(n: int, partner, t) -> int:
    u = d = n
    r = 0
    for x in range(1, 2 * n + 1):
        if partner[x] > x:
            u -= 1
        else:
            if u:
                r += t[u - 1][d]
            d -= 1
    return r


def _neighbor_cells(n: int, partner, mode: str, t) -> list[tuple[int, bool]]:
    """(target rank, centered) for every admitted flip, sorted by rank."""
    cells = []
    centered_only = mode == "centered"
    for e, f in _forest_pairs(n, partner):
        g, h = _in_chords(e, f)
        cen = (chord_length(n, e) + chord_length(n, f)
               + chord_length(n, g) + chord_length(n, h)) == n - 2
        if centered_only and not cen:
            continue
        a, b = e
        c, d = f
        g1, g2 = g
        h1, h2 = h
        partner[g1] = g2
        partner[g2] = g1
        partner[h1] = h2
        partner[h2] = h1
        cells.append((_partner_rank(n, partner, t), cen))
        partner[a] = b
        partner[b] = a
        partner[c] = d
        partner[d] = c
    cells.sort()
    return cells


def _chunk_rows(args) -> tuple[int, list[int], array, bytes]:
    """Adjacency rows for ranks [start, stop); multiprocessing worker."""
    n, mode, start, stop = args
    t = _suffix_counts(n)
    counts: list[int] = []
    targets = array("i")
    flags = bytearray()
    r = start
    for w in dyck_words(n, start):
        if r >= stop:
            break
        partner = _partner_from_word(w)
        cells = _neighbor_cells(n, partner, mode, t)
        counts.append(len(cells))
        for tr, cen in cells:
            targets.append(tr)
            flags.append(cen)
        r += 1
    return start, counts, targets, bytes(flags)


def _estimate_bytes(n: int) -> int:
    v = comb(2 * n, n) // (n + 1)
    # every vertex has < 2n flippable pairs; 5 bytes per stored arc end
    return 8 * (v + 1) + 5 * 2 * n * v


class FlipGraph:
    """Immutable flip graph in compressed sparse row form."""

    __slots__ = ("n", "mode", "offsets", "targets", "flags")

    def __init__(self, n: int, mode: str, offsets: array, targets: array,
                 flags: bytes):
        self.n = n
        self.mode = mode
        self.offsets = offsets
        self.targets = targets
        self.flags = flags

    @property
    def vertex_count(self) -> int:
        return len(self.offsets) - 1

    @property
    def edge_count(self) -> int:
        return len(self.targets) // 2

    @property
    def centered_edge_count(self) -> int:
        return sum(self.flags) // 2

    def neighbors(self, r: int) -> array:
        return self.targets[self.offsets[r]:self.offsets[r + 1]]

    def neighbor_flags(self, r: int) -> bytes:
        return self.flags[self.offsets[r]:self.offsets[r + 1]]

    def degree(self, r: int) -> int:
        return self.offsets[r + 1] - self.offsets[r]

    def degrees(self) -> list[int]:
        off = self.offsets
        return [off[i + 1] - off[i] for i in range(self.vertex_count)]

    def has_edge(self, r: int, s: int) -> bool:
        lo, hi = self.offsets[r], self.offsets[r + 1]
        i = bisect_left(self.targets, s, lo, hi)
        return i < hi and self.targets[i] == s

    def edges(self) -> Iterator[tuple[int, int, bool]]:
        """(src, dst, centered) with src < dst, in lexicographic order."""
        for r in range(self.vertex_count):
            for i in range(self.offsets[r], self.offsets[r + 1]):
                s = self.targets[i]
                if r < s:
                    yield r, s, bool(self.flags[i])

    def matching(self, r: int):
        return unrank(self.n, r)

    def word(self, r: int) -> str:
        return to_dyck(unrank(self.n, r))

    def rank_of(self, m) -> int:
        if m.n != self.n:
            raise ValueError(f"matching size {m.n} does not fit graph n={self.n}")
        return rank(m)

    def vertices_with_degree(self, k: int) -> list[int]:
        off = self.offsets
        return [r for r in range(self.vertex_count) if off[r + 1] - off[r] == k]

    def degree_summary(self) -> dict:
        degs = self.degrees()
        lo, hi = min(degs), max(degs)
        hist: dict[int, int] = {}
        for d in degs:
            hist[d] = hist.get(d, 0) + 1
        return {"min": lo, "max": hi, "min_count": hist[lo],
                "max_count": hist[hi],
                "histogram": dict(sorted(hist.items()))}

    def components(self) -> list[list[int]]:
        """Connected components as sorted rank lists, largest first.

        Ties on size break by smallest contained rank, so the order is
        deterministic.
        """
        v = self.vertex_count
        seen = bytearray(v)
        comps = []
        for s in range(v):
            if seen[s]:
                continue
            seen[s] = 1
            queue = [s]
            head = 0
            while head < len(queue):
                x = queue[head]
                head += 1
                for y in self.targets[self.offsets[x]:self.offsets[x + 1]]:
                    if not seen[y]:
                        seen[y] = 1
                        queue.append(y)
            queue.sort()
            comps.append(queue)
        comps.sort(key=lambda c: (-len(c), c[0]))
        return comps

    def component_edge_count(self, comp: list[int]) -> int:
        return sum(self.degree(r) for r in comp) // 2

    def is_connected(self) -> bool:
        return len(self.components()) == 1

    def is_bipartite(self) -> bool:
        v = self.vertex_count
        color = bytearray(v)  # 0 unseen, 1/2 the two sides
        for s in range(v):
            if color[s]:
                continue
            color[s] = 1
            queue = [s]
            head = 0
            while head < len(queue):
                x = queue[head]
                head += 1
                cx = color[x]
                for y in self.targets[self.offsets[x]:self.offsets[x + 1]]:
                    if not color[y]:
                        color[y] = 3 - cx
                        queue.append(y)
                    elif color[y] == cx:
                        return False
        return True


def component_report(g: FlipGraph) -> list[dict]:
    """Structure of every component: size, tree test, symmetry, weights.

    Weight histograms are attached for even n only; signs need antipodal
    point classes that odd n does not have.
    """
    even = g.n % 2 == 0
    report = []
    for comp in g.components():
        edges = g.component_edge_count(comp)
        row: dict = {"size": len(comp), "edges": edges,
                     "is_tree": edges == len(comp) - 1,
                     "min_rank": comp[0]}
        n_sym = 0
        hist: dict[int, int] = {}
        for r in comp:
            m = g.matching(r)
            if is_centrally_symmetric(m):
                n_sym += 1
            if even:
                w = weight(m)
                hist[w] = hist.get(w, 0) + 1
        row["symmetric_count"] = n_sym
        if even:
            row["weights"] = {str(w): hist[w] for w in sorted(hist)}
        report.append(row)
    return report


def build_flip_graph(n: int, mode: str = "all", threads: int = 1,
                     mem_budget: int | None = None) -> FlipGraph:
    """Enumerate all matchings of size n and wire up their flips.

    threads > 1 splits the rank range over worker processes; the result is
    byte-identical for any thread count.  mem_budget (bytes) is checked
    against a size estimate before any allocation.
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")
    if n < 1:
        raise ValueError("n must be >= 1")
    if threads < 1:
        raise ValueError("threads must be >= 1")
    if mem_budget is not None and _estimate_bytes(n) > mem_budget:
        raise ResourceLimitError(
            f"graph for n={n} needs an estimated {_estimate_bytes(n)} bytes, "
            f"over the budget of {mem_budget}")
    v = comb(2 * n, n) // (n + 1)
    offsets = array("q", [0])
    targets = array("i")
    flags = bytearray()
    if threads == 1 or v < 4 * threads:
        _, counts, targets, fl = _chunk_rows((n, mode, 0, v))
        flags = bytearray(fl)
        for c in counts:
            offsets.append(offsets[-1] + c)
    else:
        import multiprocessing as mp

        bounds = [v * i // threads for i in range(threads + 1)]
        jobs = [(n, mode, bounds[i], bounds[i + 1]) for i in range(threads)]
        ctx = mp.get_context("fork")
        with ctx.Pool(threads) as pool:
            for _, counts, tg, fl in pool.imap(_chunk_rows, jobs):
                for c in counts:
                    offsets.append(offsets[-1] + c)
                targets.extend(tg)
                flags.extend(fl)
    return FlipGraph(n, mode, offsets, targets, bytes(flags))


def bfs_distances(g: FlipGraph, src: int) -> array:
    """Distance from src to every vertex; -1 where unreachable."""
    dist = array("i", [-1] * g.vertex_count)
    dist[src] = 0
    queue = [src]
    head = 0
    off, tg = g.offsets, g.targets
    while head < len(queue):
        x = queue[head]
        head += 1
        dx = dist[x] + 1
        for y in tg[off[x]:off[x + 1]]:
            if dist[y] < 0:
                dist[y] = dx
                queue.append(y)
    return dist


def bfs_distance(g: FlipGraph, src: int, dst: int) -> int | None:
    """Flip distance between two ranks, None if in different components."""
    if src == dst:
        return 0
    dist = array("i", [-1] * g.vertex_count)
    dist[src] = 0
    queue = [src]
    head = 0
    off, tg = g.offsets, g.targets
    while head < len(queue):
        x = queue[head]
        head += 1
        dx = dist[x] + 1
        for y in tg[off[x]:off[x + 1]]:
            if dist[y] < 0:
                if y == dst:
                    return dx
                dist[y] = dx
                queue.append(y)
    return None


def bfs_layers(g: FlipGraph, src: int) -> list[list[int]]:
    """Vertices grouped by distance from src, each layer sorted."""
    dist = bfs_distances(g, src)
    depth = max(dist)
    layers: list[list[int]] = [[] for _ in range(depth + 1)]
    for r, d in enumerate(dist):
        if d >= 0:
            layers[d].append(r)
    return layers


def eccentricity(g: FlipGraph, src: int) -> tuple[int, int]:
    """(max distance over the component of src, component size)."""
    dist = bfs_distances(g, src)
    ecc = 0
    reached = 0
    for d in dist:
        if d >= 0:
            reached += 1
            if d > ecc:
                ecc = d
    return ecc, reached


@dataclass(frozen=True)
class DiameterResult:
    connected: bool
    exact: bool
    value: int | None          # None when disconnected (infinite)
    lower: int | None
    upper: int | None
    witness: tuple[int, int] | None


def diameter(g: FlipGraph, exact_limit: int = 6000, samples: int = 32,
             seed: int = 0) -> DiameterResult:
    """Graph diameter; exact via all-pairs BFS up to exact_limit vertices.

    Larger graphs get deterministic bounds: lower from double sweeps and
    sampled eccentricities, upper as twice the smallest eccentricity seen.
    A disconnected graph has infinite diameter (value None).
    """
    v = g.vertex_count
    if v == 0:
        raise ValueError("empty graph")
    first = bfs_distances(g, 0)
    if min(first) < 0:
        return DiameterResult(False, True, None, None, None, None)
    if v == 1:
        return DiameterResult(True, True, 0, 0, 0, (0, 0))
    if v <= exact_limit:
        best = -1
        witness = (0, 0)
        for s in range(v):
            dist = first if s == 0 else bfs_distances(g, s)
            far = max(range(v), key=dist.__getitem__)
            if dist[far] > best:
                best = dist[far]
                witness = (s, far)
        return DiameterResult(True, True, best, best, best, witness)
    # bounds only: double sweep from rank 0 and from sampled starts
    rng = random.Random(seed)
    starts = {0, v - 1}
    starts.update(rng.randrange(v) for _ in range(samples))
    lower = 0
    upper = None
    witness = None
    for s in sorted(starts):
        ecc_s, _ = eccentricity(g, s)
        dist = bfs_distances(g, s)
        far = max(range(v), key=dist.__getitem__)
        if upper is None or 2 * ecc_s < upper:
            upper = 2 * ecc_s
        # sweep once more from the far end
        dist2 = bfs_distances(g, far)
        far2 = max(range(v), key=dist2.__getitem__)
        if dist2[far2] > lower:
            lower = dist2[far2]
            witness = (far, far2)
    return DiameterResult(True, False, None, lower, upper, witness)


def dot_lines(g: FlipGraph) -> Iterator[str]:
    """Graphviz form; centered flips solid, other flips dashed."""
    yield f'graph "flips_n{g.n}_{g.mode}" {{'
    yield "  node [shape=box];"
    for r in range(g.vertex_count):
        yield f'  {r} [label="{g.word(r)}"];'
    for r, s, cen in g.edges():
        style = "solid" if cen else "dashed"
        yield f"  {r} -- {s} [style={style}];"
    yield "}"


def csv_lines(g: FlipGraph) -> Iterator[str]:
    yield "src_rank,dst_rank,centered"
    for r, s, cen in g.edges():
        yield f"{r},{s},{int(cen)}"


def graph_json_obj(g: FlipGraph, include_words: bool = False) -> dict:
    obj: dict = {
        "n": g.n,
        "mode": g.mode,
        "vertex_count": g.vertex_count,
        "edge_count": g.edge_count,
        "edges": [[r, s, int(cen)] for r, s, cen in g.edges()],
    }
    if include_words:
        obj["words"] = [g.word(r) for r in range(g.vertex_count)]
    return obj
