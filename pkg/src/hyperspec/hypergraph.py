"""Uniform hypergraphs on 1-based vertices.

A k-uniform hypergraph on vertices 1..n stores its edges as sorted
k-tuples.  The adjacency tensor has order k and entry 1/(k-1)! at every
arrangement of each edge, so that the tensor's polynomial map sends x to
the edge-neighborhood sums.  Edge sets also travel as bitmasks over the
lexicographic list of all k-subsets, which is what the enumeration and
canonicalization code operates on.

The text format is line-based: optional '#' comments, one "n k" header
line, then one edge per line as k ascending vertex ids.  Formatting a
parsed file reproduces it byte for byte when the edges were sorted.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Iterable, Iterator, Sequence

from .errors import BadEdge, BadSetSize, BadSize, CapExceeded, ParseError
from .tensor import Tensor

VertexSet = tuple[int, ...]

_PERM_TABLE_MAX_N = 7  # cached permutation remaps; beyond this, recompute lazily


@dataclass(frozen=True)
class Hypergraph:
    n: int
    k: int
    edges: frozenset[tuple[int, ...]]

    def __post_init__(self):
        if self.k < 1 or self.n < self.k:
            raise BadSize(f"need 1 <= k <= n, got n={self.n} k={self.k}")
        if self.edges and self.k < 2:
            raise BadSize("edges require k >= 2")
        for edge in self.edges:
            _check_edge(edge, self.n, self.k)

    @classmethod
    def from_edges(
        cls, n: int, k: int, edges: Iterable[Sequence[int]]
    ) -> "Hypergraph":
        normalized = frozenset(tuple(sorted(int(v) for v in e)) for e in edges)
        return cls(n, k, normalized)

    @classmethod
    def empty(cls, n: int, k: int) -> "Hypergraph":
        return cls(n, k, frozenset())

    @classmethod
    def complete(cls, n: int, k: int) -> "Hypergraph":
        return cls(n, k, frozenset(itertools.combinations(range(1, n + 1), k)))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def has_edge(self, vertices: Sequence[int]) -> bool:
        return tuple(sorted(vertices)) in self.edges

    def degree(self, vertex: int) -> int:
        return sum(1 for e in self.edges if vertex in e)

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(self.degree(v) for v in range(1, self.n + 1)))


def _check_edge(edge: tuple[int, ...], n: int, k: int) -> None:
    if len(edge) != k:
        raise BadEdge(f"edge {edge} has {len(edge)} vertices, expected {k}")
    if len(set(edge)) != k:
        raise BadEdge(f"edge {edge} repeats a vertex")
    if list(edge) != sorted(edge):
        raise BadEdge(f"edge {edge} is not sorted")
    if edge[0] < 1 or edge[-1] > n:
        raise BadEdge(f"edge {edge} out of range 1..{n}")


def adjacency_tensor(h: Hypergraph) -> Tensor:
    weight = Fraction(1, factorial(h.k - 1))
    values: dict[tuple[int, ...], Fraction] = {}
    for edge in h.edges:
        zero_based = tuple(v - 1 for v in edge)
        for perm in itertools.permutations(zero_based):
            values[perm] = weight
    return Tensor.from_map(h.k, h.n, values)


def complement(h: Hypergraph) -> Hypergraph:
    every = frozenset(itertools.combinations(range(1, h.n + 1), h.k))
    return Hypergraph(h.n, h.k, every - h.edges)


def count_simplices(h: Hypergraph) -> int:
    """Vertex sets of size k+1 all of whose k-subsets are edges."""
    return sum(1 for _ in simplices(h))


def simplices(h: Hypergraph) -> Iterator[tuple[int, ...]]:
    if h.k + 1 > h.n:
        return
    for group in itertools.combinations(range(1, h.n + 1), h.k + 1):
        if all(sub in h.edges for sub in itertools.combinations(group, h.k)):
            yield group


def neighbors_in(
    h: Hypergraph, core: Iterable[int], pool: Iterable[int]
) -> frozenset[int]:
    """Vertices w in the pool completing the (k-1)-set core to an edge."""
    core_set = frozenset(core)
    if len(core_set) != h.k - 1:
        raise BadSetSize(
            f"core has {len(core_set)} vertices, expected {h.k - 1}"
        )
    base = tuple(sorted(core_set))
    out = set()
    for w in pool:
        if w in core_set:
            continue
        if tuple(sorted(base + (w,))) in h.edges:
            out.add(w)
    return frozenset(out)


# --- bitmask view ------------------------------------------------------------


@lru_cache(maxsize=None)
def subset_order(n: int, k: int) -> tuple[tuple[int, ...], ...]:
    return tuple(itertools.combinations(range(1, n + 1), k))


@lru_cache(maxsize=None)
def _subset_index(n: int, k: int) -> dict[tuple[int, ...], int]:
    return {s: i for i, s in enumerate(subset_order(n, k))}


def edge_bitmask(h: Hypergraph) -> int:
    index = _subset_index(h.n, h.k)
    mask = 0
    for edge in h.edges:
        mask |= 1 << index[edge]
    return mask


def from_bitmask(n: int, k: int, mask: int) -> Hypergraph:
    order = subset_order(n, k)
    if mask < 0 or mask >> len(order):
        raise BadEdge(f"bitmask {mask} out of range for {len(order)} subsets")
    edges = [order[i] for i in range(len(order)) if mask >> i & 1]
    return Hypergraph(n, k, frozenset(edges))


@lru_cache(maxsize=None)
def _perm_remaps(n: int, k: int) -> tuple[tuple[int, ...], ...]:
    """For each vertex permutation, old subset index -> new subset index."""
    index = _subset_index(n, k)
    order = subset_order(n, k)
    remaps = []
    for perm in itertools.permutations(range(1, n + 1)):
        remaps.append(
            tuple(index[tuple(sorted(perm[v - 1] for v in s))] for s in order)
        )
    return tuple(remaps)


def canonical_form(h: Hypergraph, cap: int = 10) -> int:
    """Least edge bitmask over all vertex relabelings; a hashable class key."""
    if h.n > cap:
        raise CapExceeded(f"canonical form capped at {cap} vertices, got {h.n}")
    mask = edge_bitmask(h)
    best = mask
    if h.n <= _PERM_TABLE_MAX_N:
        for remap in _perm_remaps(h.n, h.k):
            image = 0
            rest = mask
            while rest:
                low = rest & -rest
                image |= 1 << remap[low.bit_length() - 1]
                rest ^= low
            if image < best:
                best = image
    else:
        index = _subset_index(h.n, h.k)
        for perm in itertools.permutations(range(1, h.n + 1)):
            image = 0
            for edge in h.edges:
                image |= 1 << index[tuple(sorted(perm[v - 1] for v in edge))]
            if image < best:
                best = image
    return best


def is_isomorphic(g: Hypergraph, h: Hypergraph) -> tuple[int, ...] | None:
    """A relabeling sending g onto h, as images of vertices 1..n, or None."""
    if g.n != h.n or g.k != h.k or g.edge_count != h.edge_count:
        return None
    if g.degree_sequence() != h.degree_sequence():
        return None
    g_degrees = {v: g.degree(v) for v in range(1, g.n + 1)}
    h_degrees = {v: h.degree(v) for v in range(1, h.n + 1)}
    vertex_order = sorted(range(1, g.n + 1), key=lambda v: -g_degrees[v])
    images: dict[int, int] = {}
    used: set[int] = set()

    g_edges_by_last: dict[int, list[tuple[int, ...]]] = {v: [] for v in vertex_order}
    position = {v: i for i, v in enumerate(vertex_order)}
    for edge in g.edges:
        last = max(edge, key=lambda v: position[v])
        g_edges_by_last[last].append(edge)

    def place(i: int) -> bool:
        if i == len(vertex_order):
            return True
        v = vertex_order[i]
        for candidate in range(1, h.n + 1):
            if candidate in used or h_degrees[candidate] != g_degrees[v]:
                continue
            images[v] = candidate
            used.add(candidate)
            ok = all(
                tuple(sorted(images[u] for u in edge)) in h.edges
                for edge in g_edges_by_last[v]
            )
            if ok and place(i + 1):
                return True
            del images[v]
            used.discard(candidate)
        return False

    if place(0):
        return tuple(images[v] for v in range(1, g.n + 1))
    return None


def enumerate_all(
    n: int,
    k: int,
    *,
    edge_count: int | None = None,
    up_to_iso: bool = False,
    cap: int = 63,
) -> Iterator[Hypergraph]:
    """All hypergraphs on labeled vertices, streamed in bitmask order."""
    slots = comb(n, k)
    if slots > cap:
        raise CapExceeded(f"{slots} candidate edges exceed the enumeration cap {cap}")
    for mask in range(1 << slots):
        if edge_count is not None and mask.bit_count() != edge_count:
            continue
        h = from_bitmask(n, k, mask)
        if up_to_iso and canonical_form(h) != mask:
            continue
        yield h


# --- text format --------------------------------------------------------------


def format_hypergraph(h: Hypergraph) -> str:
    lines = [f"{h.n} {h.k}"]
    lines.extend(" ".join(str(v) for v in edge) for edge in sorted(h.edges))
    return "\n".join(lines) + "\n"


def parse_hypergraph(text: str) -> Hypergraph:
    header: tuple[int, int] | None = None
    edges: list[tuple[int, ...]] = []
    seen: set[tuple[int, ...]] = set()
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            values = [int(p) for p in parts]
        except ValueError:
            raise ParseError(f"expected integers, got {line!r}", line_no) from None
        if header is None:
            if len(values) != 2:
                raise ParseError("header must be two integers: n k", line_no)
            n, k = values
            if k < 1 or n < k:
                raise ParseError(f"need 1 <= k <= n, got n={n} k={k}", line_no)
            header = (n, k)
            continue
        n, k = header
        if len(values) != k:
            raise ParseError(f"edge needs {k} vertices, got {len(values)}", line_no)
        edge = tuple(values)
        if any(a >= b for a, b in zip(edge, edge[1:])):
            raise ParseError(f"vertices must be strictly ascending: {line!r}", line_no)
        if edge[0] < 1 or edge[-1] > n:
            raise ParseError(f"vertex out of range 1..{n}: {line!r}", line_no)
        if edge in seen:
            raise ParseError(f"duplicate edge {line!r}", line_no)
        seen.add(edge)
        edges.append(edge)
    if header is None:
        raise ParseError("missing header line")
    return Hypergraph(header[0], header[1], frozenset(edges))
