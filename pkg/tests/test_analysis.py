"""Cospectrality scans, spectral-determination verdicts, destruction minima."""

from __future__ import annotations

import json
import random
from pathlib import Path

import pytest

from hyperspec.analysis import (
    PolyCache,
    cospectral_invariant_scan,
    are_cospectral,
    are_e_cospectral,
    disjoint_union_ds_check,
    ds_verify,
    find_fingerprint_violations,
    load_checkpoint,
    save_checkpoint,
    simplex_destruction_min,
    spectral_report,
)
from hyperspec.config import DEFAULT_CONFIG
from hyperspec.errors import CapExceeded, DimMismatch, InputError
from hyperspec.hypergraph import Hypergraph, complement, edge_bitmask
from hyperspec.polynomial import UniPoly
from hyperspec.spectra import char_poly
from hyperspec.hypergraph import adjacency_tensor


def _relabeled(h, images):
    return Hypergraph.from_edges(
        h.n, h.k, [tuple(sorted(images[v - 1] for v in e)) for e in h.edges]
    )


def test_cospectral_under_relabeling():
    h = Hypergraph.from_edges(4, 3, [(1, 2, 3), (2, 3, 4)])
    g = _relabeled(h, [4, 2, 1, 3])
    assert are_cospectral(h, g)


def test_e_cospectral_under_relabeling():
    # order-2 case keeps the stationary-spectrum computation cheap
    h = Hypergraph.from_edges(5, 2, [(1, 2), (2, 3), (3, 4), (4, 5)])
    g = _relabeled(h, [3, 1, 4, 2, 5])
    assert are_e_cospectral(h, g)
    star = Hypergraph.from_edges(5, 2, [(1, 2), (1, 3), (1, 4), (1, 5)])
    assert not are_e_cospectral(h, star)


def test_not_cospectral_when_edge_counts_differ():
    full = Hypergraph.complete(4, 3)
    pruned = Hypergraph.from_edges(4, 3, full.edges - {(1, 2, 3)})
    assert not are_cospectral(full, pruned)


def test_empty_vs_single_edge():
    empty = Hypergraph.empty(3, 3)
    single = Hypergraph.from_edges(3, 3, [(1, 2, 3)])
    assert not are_cospectral(empty, single)
    assert not are_e_cospectral(empty, single)


def test_dimension_mismatch_rejected():
    a = Hypergraph.empty(3, 3)
    b = Hypergraph.empty(4, 3)
    with pytest.raises(DimMismatch):
        are_cospectral(a, b)
    c = Hypergraph.empty(4, 4)
    with pytest.raises(DimMismatch):
        are_cospectral(b, c)


def test_spectral_report_fields():
    h = Hypergraph.complete(4, 3)
    report = spectral_report(h)
    assert report.n == 4 and report.k == 3
    assert report.edge_count == 4
    assert report.simplex_count == 1
    assert report.mask == edge_bitmask(h)
    assert report.char is not None and report.char.is_monic()
    assert report.e_char is None  # not requested


def test_poly_cache_deduplicates_by_shape():
    cache = PolyCache()
    h = Hypergraph.from_edges(4, 3, [(1, 2, 3)])
    g = _relabeled(h, [2, 3, 4, 1])
    first = cache.get_char(h)
    assert cache.computed == 1
    second = cache.get_char(g)  # isomorphic: served from the cache
    assert cache.computed == 1
    assert first == second
    cache.get_char(Hypergraph.empty(4, 3))
    assert cache.computed == 2


def test_checkpoint_round_trip(tmp_path):
    path = str(tmp_path / "scan.json")
    cache = PolyCache()
    cache.get_char(Hypergraph.from_edges(4, 3, [(1, 2, 3)]))
    save_checkpoint(path, 4, 3, cache, watermark=7)
    loaded, watermark = load_checkpoint(path, 4, 3)
    assert watermark == 7
    assert loaded.to_json() == cache.to_json()
    # shape mismatch is refused rather than silently reused
    with pytest.raises(InputError):
        load_checkpoint(path, 5, 3)
    missing, watermark = load_checkpoint(str(tmp_path / "absent.json"), 4, 3)
    assert watermark == -1
    assert missing.computed == 0


def test_checkpoint_rejects_foreign_version(tmp_path):
    path = tmp_path / "scan.json"
    blob = {"version": 99, "n": 4, "k": 3, "watermark": 0, "polys": {}}
    path.write_text(json.dumps(blob))
    with pytest.raises(InputError):
        load_checkpoint(str(path), 4, 3)


def test_fingerprint_violation_detection():
    p = UniPoly.from_coeff_strings(["1", "2", "1"])
    q = UniPoly.from_coeff_strings(["3", "0", "1"])
    rows = [
        (0b01, 3, 0, p),
        (0b10, 3, 0, p),   # same poly, same fingerprint: fine
        (0b11, 4, 0, p),   # same poly, different edge count: violation
        (0b100, 3, 1, q),  # different poly: ignored
    ]
    violations = find_fingerprint_violations(rows)
    assert len(violations) == 1
    v = violations[0]
    assert v.field == "edge_count"
    assert {v.mask_a, v.mask_b} <= {0b01, 0b10, 0b11}
    assert {v.value_a, v.value_b} == {3, 4}


def test_fingerprint_clean_rows():
    p = UniPoly.from_coeff_strings(["1", "2", "1"])
    rows = [(1, 3, 0, p), (2, 3, 0, p)]
    assert find_fingerprint_violations(rows) == ()


def test_scan_trivial_universe():
    report = cospectral_invariant_scan(3, 3)
    assert report.total == 2  # empty and the one triple
    assert report.class_count == 2
    assert report.violations == ()


def test_scan_n4_finds_no_violations(tmp_path):
    path = str(tmp_path / "scan4.json")
    report = cospectral_invariant_scan(4, 3, checkpoint_path=path)
    assert report.total == 16
    assert report.class_count == 5
    assert report.violations == ()
    assert report.polynomials_computed == 5
    # groups partition the whole universe
    assert sorted(m for grp in report.groups for m in grp) == list(range(16))
    # resuming from the checkpoint recomputes nothing
    again = cospectral_invariant_scan(4, 3, checkpoint_path=path)
    assert again.polynomials_computed == 0
    assert again.groups == report.groups


def test_scan_groups_align_with_isomorphism_on_n4():
    from hyperspec.hypergraph import canonical_form, from_bitmask

    report = cospectral_invariant_scan(4, 3)
    for grp in report.groups:
        canon = {canonical_form(from_bitmask(4, 3, m)) for m in grp}
        assert len(canon) == len(grp) or len(canon) < len(grp)
        # within a spectral class, every member has the same char poly
        polys = {char_poly(adjacency_tensor(from_bitmask(4, 3, m))) for m in grp}
        assert len(polys) == 1


def test_ds_verify_single_edge_n4():
    h = Hypergraph.from_edges(4, 3, [(1, 2, 3)])
    verdict = ds_verify(h)
    assert verdict.all_isomorphic
    assert all(g.edge_count == h.edge_count for g in verdict.cospectral_mates)
    assert verdict.candidates == 16
    assert verdict.pruned > 0


def test_ds_verify_shared_cache_counts():
    cache = PolyCache()
    total = 0
    from hyperspec.hypergraph import enumerate_all

    for h in enumerate_all(4, 3):
        verdict = ds_verify(h, cache=cache)
        assert verdict.all_isomorphic
        total += verdict.polynomials_computed
    assert cache.computed <= 5  # one per class, shared across all 16 runs


def test_ds_verify_weak_fingerprint_still_correct():
    h = Hypergraph.from_edges(4, 3, [(1, 2, 3)])
    verdict = ds_verify(h, fingerprint_fields=("edges",))
    assert verdict.all_isomorphic
    strict = ds_verify(h)
    assert strict.pruned >= verdict.pruned or strict.pruned == verdict.pruned


def test_disjoint_union_check_trivial_padding():
    verdict = disjoint_union_ds_check(3, isolated=0)
    assert verdict.target.n == 4
    assert verdict.target.edge_count == 4
    assert verdict.all_isomorphic


def test_destruction_minimum_small():
    report = simplex_destruction_min(5, 3, 1)
    assert report.minimum == 2  # n - k = 2
    assert report.expected_minimum == 2
    assert report.matches_expected
    assert report.achievers_are_exactly_common_core
    for achiever in report.achievers:
        assert len(achiever) == 1


def test_destruction_minimum_two_edges():
    report = simplex_destruction_min(6, 3, 2)
    assert report.minimum == (6 - 3) + (6 - 3 - 1)
    assert report.matches_expected
    assert report.achievers_are_exactly_common_core
    for achiever in report.achievers:
        a, b = achiever
        assert len(set(a) & set(b)) == 2  # the pair shares k-1 vertices


def test_destruction_respects_brute_force_cap():
    tiny = DEFAULT_CONFIG.with_(brute_force_cap=10)
    with pytest.raises(CapExceeded):
        simplex_destruction_min(6, 3, 2, tiny)


@pytest.mark.slow
def test_disjoint_union_with_isolated_vertex():
    verdict = disjoint_union_ds_check(3, isolated=1)
    assert verdict.target.n == 5
    assert verdict.all_isomorphic
