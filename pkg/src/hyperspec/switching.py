"""Spectrum-preserving edge switching for uniform hypergraphs.

A switching partition splits the vertices into V1 and V2.  The move is
legal when |V1| is even, no edge meets V1 in more than one vertex, and
every (k-1)-subset of V2 extends to an edge with either none, half, or
all of V1.  Switching replaces, for each half-count subset, its V1
neighborhood by the complement within V1.  The operation is an
involution and is realized by conjugating the adjacency tensor with an
explicit orthogonal, symmetric matrix, which is what makes switched
pairs share their spectra.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .errors import (
    BadPartition,
    BadSize,
    ConditionAViolated,
    ConditionBViolated,
    InputError,
    OddV1,
)
from .hypergraph import Hypergraph, adjacency_tensor, neighbors_in
from .tensor import Tensor, mat_sim


@dataclass(frozen=True)
class SwitchingPartition:
    v1: frozenset[int]
    v2: frozenset[int]

    @classmethod
    def from_v1(cls, n: int, v1: Iterable[int]) -> "SwitchingPartition":
        first = frozenset(int(v) for v in v1)
        rest = frozenset(range(1, n + 1)) - first
        return cls(first, rest)

    @property
    def n(self) -> int:
        return len(self.v1) + len(self.v2)

    def ordered(self) -> tuple[int, ...]:
        """All vertices, the first part in front; the matrix row order."""
        return tuple(sorted(self.v1)) + tuple(sorted(self.v2))


@dataclass(frozen=True)
class SwitchReport:
    """Outcome of a successful validation.

    switched_sets are the (k-1)-subsets of V2 seeing exactly half of V1;
    counts is the neighbor-count histogram over every (k-1)-subset of V2,
    as (count, occurrences) pairs.
    """

    v1_size: int
    switched_sets: tuple[tuple[int, ...], ...]
    counts: tuple[tuple[int, int], ...]


def _check_partition(p: SwitchingPartition, n: int) -> None:
    everything = frozenset(range(1, n + 1))
    if p.v1 & p.v2:
        raise BadPartition(f"parts overlap on {sorted(p.v1 & p.v2)}")
    if p.v1 | p.v2 != everything:
        missing = sorted(everything - (p.v1 | p.v2))
        extra = sorted((p.v1 | p.v2) - everything)
        raise BadPartition(
            f"parts must cover 1..{n}; missing {missing}, foreign {extra}"
        )
    if not p.v1:
        raise BadPartition("first part is empty")
    if len(p.v1) % 2:
        raise OddV1(f"first part has odd size {len(p.v1)}")


def validate(h: Hypergraph, p: SwitchingPartition) -> SwitchReport:
    """Check the partition against both switching conditions.

    Raises BadPartition, OddV1, ConditionAViolated or ConditionBViolated;
    on success reports the (k-1)-subsets whose neighborhoods will flip.
    """
    _check_partition(p, h.n)
    n1 = len(p.v1)
    for edge in sorted(h.edges):
        inside = sum(1 for v in edge if v in p.v1)
        if inside > 1:
            raise ConditionAViolated(edge)
    switched: list[tuple[int, ...]] = []
    histogram: dict[int, int] = {}
    for core in itertools.combinations(sorted(p.v2), h.k - 1):
        count = len(neighbors_in(h, core, p.v1))
        if count not in (0, n1 // 2, n1):
            raise ConditionBViolated(core, count, (0, n1 // 2, n1))
        histogram[count] = histogram.get(count, 0) + 1
        if count == n1 // 2:
            switched.append(core)
    return SwitchReport(n1, tuple(switched), tuple(sorted(histogram.items())))


def switch(h: Hypergraph, p: SwitchingPartition) -> Hypergraph:
    """Apply the switching move; validates first, and is an involution."""
    report = validate(h, p)
    edges = set(h.edges)
    for core in report.switched_sets:
        flipped = neighbors_in(h, core, p.v1)
        for v in p.v1:
            edge = tuple(sorted(core + (v,)))
            if v in flipped:
                edges.discard(edge)
            else:
                edges.add(edge)
    return Hypergraph(h.n, h.k, frozenset(edges))


def switching_matrix(p: SwitchingPartition) -> Tensor:
    """The conjugating matrix in block order (first part first).

    The leading |V1| x |V1| block is (2/n1)J - I, the trailing block is
    the identity; the matrix is symmetric, orthogonal and its own
    inverse.  Rows follow p.ordered(), not the raw vertex labels.
    """
    _check_partition(p, p.n)
    n1 = len(p.v1)
    n = p.n
    values: dict[tuple[int, ...], Fraction] = {}
    for i in range(n1):
        for j in range(n1):
            entry = Fraction(2, n1) - (1 if i == j else 0)
            if entry:
                values[(i, j)] = entry
    for i in range(n1, n):
        values[(i, i)] = Fraction(1)
    return Tensor.from_map(2, n, values)


def aligned_switching_matrix(p: SwitchingPartition) -> Tensor:
    """The same matrix re-indexed by the raw 1-based vertex labels.

    This is the form that conjugates adjacency tensors directly, even
    when the two parts interleave.
    """
    _check_partition(p, p.n)
    n1 = len(p.v1)
    values: dict[tuple[int, ...], Fraction] = {}
    for u in range(1, p.n + 1):
        for v in range(1, p.n + 1):
            if u in p.v1 and v in p.v1:
                entry = Fraction(2, n1) - (1 if u == v else 0)
            elif u in p.v2 and v in p.v2:
                entry = Fraction(1 if u == v else 0)
            else:
                continue
            if entry:
                values[(u - 1, v - 1)] = entry
    return Tensor.from_map(2, p.n, values)


@dataclass(frozen=True)
class SimilarityReport:
    ok: bool
    first_mismatch: tuple[int, ...] | None = None
    expected: Fraction | None = None
    actual: Fraction | None = None


def verify_similarity(
    h: Hypergraph, g: Hypergraph, p: SwitchingPartition
) -> SimilarityReport:
    """Entrywise check that conjugation carries one adjacency tensor to the other."""
    q = aligned_switching_matrix(p)
    image = mat_sim(q, adjacency_tensor(h))
    target = adjacency_tensor(g)
    if image.entries == target.entries:
        return SimilarityReport(True)
    for flat, (got, want) in enumerate(zip(image.entries, target.entries)):
        if got != want:
            idx = []
            rest = flat
            for _ in range(image.order):
                rest, r = divmod(rest, image.dim)
                idx.append(r + 1)
            idx.reverse()
            return SimilarityReport(False, tuple(idx), want, got)
    return SimilarityReport(True)


def find_partitions(
    h: Hypergraph, *, max_v1: int = 6
) -> Iterator[SwitchingPartition]:
    """Brute-force scan for valid partitions with a nonempty switch.

    Tries every even-sized V1 up to max_v1 vertices and yields the
    partitions that validate with at least one half-count subset.  Cost
    grows as a sum of binomials; intended for small instances only.
    """
    vertices = range(1, h.n + 1)
    for size in range(2, min(max_v1, h.n) + 1, 2):
        for chosen in itertools.combinations(vertices, size):
            p = SwitchingPartition.from_v1(h.n, chosen)
            try:
                report = validate(h, p)
            except (ConditionAViolated, ConditionBViolated, OddV1):
                continue
            if report.switched_sets:
                yield p


def example_pair(
    n: int, inner_family: Sequence[Sequence[int]] | None = None
) -> tuple[Hypergraph, Hypergraph, SwitchingPartition]:
    """A switched pair of 3-uniform hypergraphs on n+4 vertices.

    Vertices 1..4 form the even part; vertices 5..n+4 carry a family of
    edges among themselves plus six edges joining chain pairs to the
    even part, arranged so every pair among the first three chain
    vertices sees exactly half of it.  The default family is the path of
    consecutive triples; a custom family may be passed as 3-sets within
    5..n+4 and must touch every vertex past the first three.  The two
    outputs are exchanged by the switching move and are non-isomorphic
    for every n >= 3: vertex 1 is isolated in the first output only.
    """
    if n < 3:
        raise BadSize(f"need n >= 3 chain vertices, got {n}")
    u = (1, 2, 3, 4)
    v = tuple(4 + i for i in range(1, n + 1))
    if inner_family is None:
        family = [(v[i], v[i + 1], v[i + 2]) for i in range(n - 2)]
    else:
        family = [tuple(sorted(int(x) for x in e)) for e in inner_family]
        allowed = set(v)
        for edge in family:
            if len(edge) != 3 or len(set(edge)) != 3 or not set(edge) <= allowed:
                raise InputError(
                    f"family edge {edge} must be 3 distinct vertices within {v[0]}..{v[-1]}"
                )
        covered = set(itertools.chain.from_iterable(family))
        uncovered = [w for w in v[3:] if w not in covered]
        if uncovered:
            raise InputError(f"family leaves vertices {uncovered} isolated")
    h_mixed = [
        (v[0], v[1], u[1]),
        (v[0], v[1], u[2]),
        (v[1], v[2], u[1]),
        (v[1], v[2], u[3]),
        (v[0], v[2], u[2]),
        (v[0], v[2], u[3]),
    ]
    g_mixed = [
        (v[0], v[1], u[0]),
        (v[0], v[1], u[3]),
        (v[1], v[2], u[0]),
        (v[1], v[2], u[2]),
        (v[0], v[2], u[0]),
        (v[0], v[2], u[1]),
    ]
    total = n + 4
    h = Hypergraph.from_edges(total, 3, list(family) + h_mixed)
    g = Hypergraph.from_edges(total, 3, list(family) + g_mixed)
    partition = SwitchingPartition.from_v1(total, u)
    return h, g, partition
