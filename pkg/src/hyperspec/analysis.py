"""Cospectrality decisions over enumerated hypergraph families.

The expensive object in every question here is the characteristic
polynomial, so this module is organized around a thread-safe cache
keyed by canonical form: isomorphic hypergraphs share one computation.
Scans that enumerate a whole (n, k) universe can persist the cache to a
JSON checkpoint and resume after interruption.

Two routes to the same facts are deliberately kept apart.  The
invariant scan computes every polynomial and then checks that equal
polynomials force equal edge and simplex counts; the determined-by-
spectrum search takes that implication as a pruning rule and computes
polynomials only for candidates matching the target's cheap counts.
The scan therefore validates the assumption the search relies on.
"""

from __future__ import annotations

import json
import os
import threading
from dataclasses import dataclass
from typing import Iterable, Sequence

from .config import DEFAULT_CONFIG, RunConfig
from .errors import CapExceeded, DimMismatch, InputError
from .hypergraph import (
    Hypergraph,
    adjacency_tensor,
    canonical_form,
    count_simplices,
    edge_bitmask,
    from_bitmask,
    is_isomorphic,
    subset_order,
)
from .parallel import pmap
from .polynomial import UniPoly
from .spectra import char_poly, e_char_poly

from math import comb


@dataclass(frozen=True)
class SpectralReport:
    """Per-hypergraph summary: identity, cheap counts, polynomials."""

    mask: int
    n: int
    k: int
    edge_count: int
    simplex_count: int
    char: UniPoly | None = None
    e_char: UniPoly | None = None


def spectral_report(
    h: Hypergraph,
    config: RunConfig | None = None,
    *,
    with_char: bool = True,
    with_e_char: bool = False,
) -> SpectralReport:
    cfg = config if config is not None else DEFAULT_CONFIG
    return SpectralReport(
        mask=edge_bitmask(h),
        n=h.n,
        k=h.k,
        edge_count=h.edge_count,
        simplex_count=count_simplices(h),
        char=char_poly(adjacency_tensor(h), cfg) if with_char else None,
        e_char=e_char_poly(adjacency_tensor(h), cfg) if with_e_char else None,
    )


def are_cospectral(
    g: Hypergraph, h: Hypergraph, config: RunConfig | None = None
) -> bool:
    """Exact equality of the characteristic polynomials; same (n, k) only."""
    cfg = config if config is not None else DEFAULT_CONFIG
    if g.n != h.n or g.k != h.k:
        raise DimMismatch(
            f"cospectrality needs matching (n, k); got ({g.n},{g.k}) vs ({h.n},{h.k})"
        )
    return char_poly(adjacency_tensor(g), cfg) == char_poly(adjacency_tensor(h), cfg)


def are_e_cospectral(
    g: Hypergraph, h: Hypergraph, config: RunConfig | None = None
) -> bool:
    """Equality of the normalized E-characteristic polynomials."""
    cfg = config if config is not None else DEFAULT_CONFIG
    if g.n != h.n or g.k != h.k:
        raise DimMismatch(
            f"cospectrality needs matching (n, k); got ({g.n},{g.k}) vs ({h.n},{h.k})"
        )
    return e_char_poly(adjacency_tensor(g), cfg) == e_char_poly(
        adjacency_tensor(h), cfg
    )


class PolyCache:
    """Characteristic polynomials keyed by canonical form.

    Reads are lock-free on the GIL's dict guarantees; computation holds
    the lock only around insertion, so concurrent lookups of distinct
    keys may duplicate work but never disagree.
    """

    def __init__(self) -> None:
        self._polys: dict[tuple[int, int, int], UniPoly] = {}
        self._lock = threading.Lock()
        self.computed = 0

    def __len__(self) -> int:
        return len(self._polys)

    def get_char(self, h: Hypergraph, config: RunConfig | None = None) -> UniPoly:
        cfg = config if config is not None else DEFAULT_CONFIG
        key = (h.n, h.k, canonical_form(h, cfg.canonical_cap))
        hit = self._polys.get(key)
        if hit is not None:
            return hit
        poly = char_poly(adjacency_tensor(h), cfg)
        with self._lock:
            if key not in self._polys:
                self._polys[key] = poly
                self.computed += 1
        return self._polys[key]

    def to_json(self) -> dict:
        return {
            f"{n},{k},{mask}": list(poly.to_coeff_strings())
            for (n, k, mask), poly in sorted(self._polys.items())
        }

    @classmethod
    def from_json(cls, data: dict) -> "PolyCache":
        cache = cls()
        for key, coeffs in data.items():
            n, k, mask = (int(part) for part in key.split(","))
            cache._polys[(n, k, mask)] = UniPoly.from_coeff_strings(coeffs)
        return cache


CHECKPOINT_VERSION = 1


def save_checkpoint(path: str, n: int, k: int, cache: PolyCache, watermark: int) -> None:
    """Atomically persist the cache and the enumeration watermark."""
    payload = {
        "version": CHECKPOINT_VERSION,
        "n": n,
        "k": k,
        "watermark": watermark,
        "polys": cache.to_json(),
    }
    tmp = f"{path}.tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=1, sort_keys=True)
        fh.write("\n")
    os.replace(tmp, path)


def load_checkpoint(path: str, n: int, k: int) -> tuple[PolyCache, int]:
    """Read a checkpoint back; (empty cache, -1) when the file is absent."""
    if not os.path.exists(path):
        return PolyCache(), -1
    with open(path, encoding="utf-8") as fh:
        payload = json.load(fh)
    if payload.get("version") != CHECKPOINT_VERSION:
        raise InputError(f"unsupported checkpoint version in {path}")
    if payload.get("n") != n or payload.get("k") != k:
        raise InputError(
            f"checkpoint {path} is for (n={payload.get('n')}, k={payload.get('k')}), "
            f"not (n={n}, k={k})"
        )
    return PolyCache.from_json(payload["polys"]), int(payload["watermark"])


@dataclass(frozen=True)
class Violation:
    """Two cospectral hypergraphs whose cheap counts disagree."""

    mask_a: int
    mask_b: int
    field: str
    value_a: int
    value_b: int


def find_fingerprint_violations(
    rows: Iterable[tuple[int, int, int, UniPoly]],
) -> tuple[Violation, ...]:
    """Rows are (mask, edge_count, simplex_count, char poly).

    Groups rows by polynomial and reports every pair inside a group
    whose edge or simplex counts differ.  Pure so that synthetic rows
    can exercise the reporting path.
    """
    groups: dict[tuple, list[tuple[int, int, int]]] = {}
    for mask, edges, simplices, poly in rows:
        groups.setdefault(poly.coeffs, []).append((mask, edges, simplices))
    violations: list[Violation] = []
    for members in groups.values():
        first_mask, first_edges, first_simplices = members[0]
        for mask, edges, simplices in members[1:]:
            if edges != first_edges:
                violations.append(
                    Violation(first_mask, mask, "edge_count", first_edges, edges)
                )
            if simplices != first_simplices:
                violations.append(
                    Violation(
                        first_mask, mask, "simplex_count", first_simplices, simplices
                    )
                )
    return tuple(violations)


@dataclass(frozen=True)
class ScanReport:
    n: int
    k: int
    total: int
    class_count: int
    groups: tuple[tuple[int, ...], ...]
    violations: tuple[Violation, ...]
    polynomials_computed: int


def cospectral_invariant_scan(
    n: int,
    k: int,
    config: RunConfig | None = None,
    *,
    checkpoint_path: str | None = None,
) -> ScanReport:
    """Exhaustive check that cospectral mates share edge and simplex counts.

    Computes the characteristic polynomial of every hypergraph on n
    labeled vertices (cached per isomorphism class, no count-based
    shortcuts), groups by polynomial, and reports violations.  A
    checkpoint, when given, makes the run resumable.
    """
    cfg = config if config is not None else DEFAULT_CONFIG
    slots = comb(n, k)
    if slots > cfg.enumerate_cap:
        raise CapExceeded(f"{slots} candidate edges exceed the enumeration cap")
    if checkpoint_path:
        cache, watermark = load_checkpoint(checkpoint_path, n, k)
    else:
        cache, watermark = PolyCache(), -1

    def fingerprint(mask: int) -> tuple[int, int, int]:
        h = from_bitmask(n, k, mask)
        return mask, h.edge_count, count_simplices(h)

    prints = pmap(fingerprint, range(1 << slots), cfg.threads)
    rows: list[tuple[int, int, int, UniPoly]] = []
    persisted = cache.computed
    for mask, edges, simplices in prints:
        poly = cache.get_char(from_bitmask(n, k, mask), cfg)
        rows.append((mask, edges, simplices, poly))
        watermark = max(watermark, mask)
        if checkpoint_path and cache.computed != persisted:
            persisted = cache.computed
            save_checkpoint(checkpoint_path, n, k, cache, watermark)
    if checkpoint_path:
        save_checkpoint(checkpoint_path, n, k, cache, watermark)

    groups: dict[tuple, list[int]] = {}
    for mask, _, _, poly in rows:
        groups.setdefault(poly.coeffs, []).append(mask)
    ordered = tuple(
        tuple(sorted(members)) for _, members in sorted(groups.items())
    )
    return ScanReport(
        n=n,
        k=k,
        total=len(rows),
        class_count=len(groups),
        groups=ordered,
        violations=find_fingerprint_violations(rows),
        polynomials_computed=cache.computed,
    )


@dataclass(frozen=True)
class DsVerdict:
    target: Hypergraph
    cospectral_mates: tuple[Hypergraph, ...]
    all_isomorphic: bool
    candidates: int
    pruned: int
    polynomials_computed: int


def ds_verify(
    h: Hypergraph,
    config: RunConfig | None = None,
    *,
    cache: PolyCache | None = None,
    fingerprint_fields: Sequence[str] = ("edges", "simplices"),
    checkpoint_path: str | None = None,
) -> DsVerdict:
    """Search the labeled (n, k) universe for cospectral mates of h.

    Candidates whose cheap counts differ from the target's are pruned
    before any polynomial work; equal counts for cospectral mates is
    exactly what the invariant scan validates.  fingerprint_fields may
    be narrowed to "edges" alone to demonstrate that the isomorphism
    filter catches what a weaker fingerprint lets through.
    """
    cfg = config if config is not None else DEFAULT_CONFIG
    allowed = {"edges", "simplices"}
    if not set(fingerprint_fields) <= allowed:
        raise InputError(f"unknown fingerprint fields {sorted(set(fingerprint_fields) - allowed)}")
    slots = comb(h.n, h.k)
    if slots > cfg.enumerate_cap:
        raise CapExceeded(f"{slots} candidate edges exceed the enumeration cap")
    if checkpoint_path:
        loaded, _ = load_checkpoint(checkpoint_path, h.n, h.k)
        cache = loaded if cache is None else cache
    if cache is None:
        cache = PolyCache()

    def wanted(g: Hypergraph) -> tuple[int, ...]:
        parts = []
        if "edges" in fingerprint_fields:
            parts.append(g.edge_count)
        if "simplices" in fingerprint_fields:
            parts.append(count_simplices(g))
        return tuple(parts)

    target_mask = edge_bitmask(h)
    target_print = wanted(h)
    target_poly = cache.get_char(h, cfg)

    def survives(mask: int) -> int | None:
        g = from_bitmask(h.n, h.k, mask)
        return mask if wanted(g) == target_print else None

    kept = [
        mask
        for mask in pmap(survives, range(1 << slots), cfg.threads)
        if mask is not None
    ]
    mates: list[Hypergraph] = []
    persisted = cache.computed
    for mask in kept:
        if mask == target_mask:
            continue
        g = from_bitmask(h.n, h.k, mask)
        if cache.get_char(g, cfg) == target_poly:
            mates.append(g)
        if checkpoint_path and cache.computed != persisted:
            persisted = cache.computed
            save_checkpoint(checkpoint_path, h.n, h.k, cache, mask)
    if checkpoint_path:
        save_checkpoint(checkpoint_path, h.n, h.k, cache, (1 << slots) - 1)
    verdict = all(is_isomorphic(g, h) is not None for g in mates)
    return DsVerdict(
        target=h,
        cospectral_mates=tuple(mates),
        all_isomorphic=verdict,
        candidates=1 << slots,
        pruned=(1 << slots) - len(kept),
        polynomials_computed=cache.computed,
    )


def disjoint_union_ds_check(
    k: int,
    isolated: int = 1,
    config: RunConfig | None = None,
    **kwargs,
) -> DsVerdict:
    """Is the one-simplex hypergraph plus isolated vertices determined?

    Builds the complete k-uniform hypergraph on k+1 vertices, appends
    the requested number of isolated vertices, and runs the universe
    search on the enlarged vertex set.
    """
    if isolated < 0:
        raise InputError("isolated vertex count must be nonnegative")
    n = k + 1 + isolated
    core = Hypergraph.complete(k + 1, k)
    h = Hypergraph(n, k, core.edges)
    return ds_verify(h, config, **kwargs)


@dataclass(frozen=True)
class DestructionReport:
    n: int
    k: int
    r: int
    minimum: int
    expected_minimum: int
    matches_expected: bool
    achievers: tuple[tuple[tuple[int, ...], ...], ...]
    achievers_are_exactly_common_core: bool
    subsets_checked: int


def simplex_destruction_min(
    n: int, k: int, r: int, config: RunConfig | None = None
) -> DestructionReport:
    """Fewest simplices lost when r edges leave the complete hypergraph.

    Brute-forces every r-subset of edges, counts the simplices that
    contain at least one removed edge, and checks two facts: the
    minimum equals sum(n-k-i for i in range(r)), and the minimizers are
    exactly the r-subsets whose edges share k-1 common vertices.
    """
    cfg = config if config is not None else DEFAULT_CONFIG
    from itertools import combinations

    slots = comb(n, k)
    work = comb(slots, r) * comb(n, k + 1)
    if work > cfg.brute_force_cap:
        raise CapExceeded(f"estimated work {work} exceeds cap {cfg.brute_force_cap}")
    order = subset_order(n, k)
    index = {s: i for i, s in enumerate(order)}
    simplex_masks = []
    for group in combinations(range(1, n + 1), k + 1):
        mask = 0
        for sub in combinations(group, k):
            mask |= 1 << index[sub]
        simplex_masks.append(mask)

    best = len(simplex_masks) + 1
    achievers: list[tuple[int, ...]] = []
    checked = 0
    for chosen in combinations(range(slots), r):
        checked += 1
        removed = 0
        for i in chosen:
            removed |= 1 << i
        destroyed = sum(1 for mask in simplex_masks if mask & removed)
        if destroyed < best:
            best = destroyed
            achievers = [chosen]
        elif destroyed == best:
            achievers.append(chosen)

    expected = sum(n - k - i for i in range(r))

    def shares_core(chosen: tuple[int, ...]) -> bool:
        common = set(order[chosen[0]])
        for i in chosen[1:]:
            common &= set(order[i])
        return len(common) >= k - 1

    core_sets = {c for c in combinations(range(slots), r) if shares_core(c)}
    achiever_edge_sets = tuple(
        tuple(order[i] for i in chosen) for chosen in achievers
    )
    return DestructionReport(
        n=n,
        k=k,
        r=r,
        minimum=best,
        expected_minimum=expected,
        matches_expected=best == expected,
        achievers=achiever_edge_sets,
        achievers_are_exactly_common_core=set(achievers) == core_sets,
        subsets_checked=checked,
    )
