import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bitalign import cigar as cigarlib
from bitalign.bitvec import shl
from bitalign.errors import OutOfStoredRegionError
from bitalign.oracle import levenshtein
from bitalign.table import Policy, WindowTask, build_pattern_masks, compute_dc
from bitalign.transcript import regen_edges, traceback

from conftest import mutate_seq, rand_seq


def run(text, pattern, k=None, policy=Policy.SENE_ENTRIES, et=False, limit=None, steps=None):
    k = max(len(text), len(pattern)) if k is None else k
    res = compute_dc(WindowTask(text, pattern, k), policy, et, trace_limit=limit)
    masks = build_pattern_masks(pattern)
    return res, traceback(res.table, res.edit_distance, masks, text, steps)


def consumed_ok(tr):
    t = sum(tr.ops.count(c) for c in "=XD")
    p = sum(tr.ops.count(c) for c in "=XI")
    return (t, p) == (tr.text_consumed, tr.pattern_consumed)


def replay_prefix(tr, text, pattern):
    cig = cigarlib.compress(tr.ops) if tr.ops else ""
    return cigarlib.is_valid(cig, text[:tr.text_consumed], pattern[:tr.pattern_consumed]) \
        if cig else tr.text_consumed == tr.pattern_consumed == 0


def test_regen_identity_on_every_stored_cell(rng):
    for _ in range(40):
        t, p = rand_seq(rng, rng.randint(1, 30)), rand_seq(rng, rng.randint(1, 30))
        res = compute_dc(WindowTask(t, p, max(len(t), len(p))))
        masks = build_pattern_masks(p)
        for d in range(res.rows_computed):
            for i in range(len(t)):
                e = regen_edges(res.table, i, d, masks, t[i])
                assert e.combined() == res.table.entry(i, d)


def test_regen_acga_cell_has_an_origin():
    res = compute_dc(WindowTask("ACGT", "ACGA", 4))
    e = regen_edges(res.table, 2, 1, build_pattern_masks("ACGA"), "G")
    assert res.table.entry(2, 1).bit_at(2) == 0
    assert 0 in [v.bit_at(2) for v in (e.I, e.D, e.S, e.M)]


def test_regen_matches_baseline_edges():
    r = random.Random(31)
    for _ in range(40):
        t, p = rand_seq(r, r.randint(1, 80)), rand_seq(r, r.randint(1, 80))
        k = max(len(t), len(p))
        sene = compute_dc(WindowTask(t, p, k), Policy.SENE_ENTRIES)
        base = compute_dc(WindowTask(t, p, k), Policy.BASELINE_EDGES)
        masks = build_pattern_masks(p)
        for d in range(1, k + 1):
            for i in range(len(t)):
                e = regen_edges(sene.table, i, d, masks, t[i])
                I, D, M = base.table.stored_edges(i, d)
                assert (e.I, e.D, e.M) == (I, D, M)
                # S is D shifted, with the empty-suffix bit filled in
                assert e.S.bits()[:-1] == shl(D, 1).bits()[:-1]


def test_regen_rejects_edge_tables_and_bad_columns():
    res = compute_dc(WindowTask("ACGT", "ACGA", 4), Policy.BASELINE_EDGES)
    with pytest.raises(TypeError):
        regen_edges(res.table, 0, 1, build_pattern_masks("ACGA"), "A")
    res = compute_dc(WindowTask("ACGT", "ACGA", 4))
    with pytest.raises(OutOfStoredRegionError):
        regen_edges(res.table, 4, 1, build_pattern_masks("ACGA"), "A")


@pytest.mark.parametrize("policy", [Policy.BASELINE_EDGES, Policy.SENE_ENTRIES])
def test_acga_transcript(policy):
    res, tr = run("ACGT", "ACGA", 4, policy)
    assert tr.ops == "===X"
    assert tr.cost == res.edit_distance == 1


def test_identity_transcript(rng):
    x = rand_seq(rng, 50)
    _, tr = run(x, x)
    assert tr.ops == "=" * 50


@pytest.mark.parametrize("policy", list(Policy))
def test_truncated_to_w_minus_o(policy):
    # W=4, O=3: one traceback step per window
    _, tr = run("ACGT", "ACGA", 4, policy, limit=1, steps=1)
    assert tr.ops == "="
    assert (tr.text_consumed, tr.pattern_consumed) == (1, 1)


def test_dent_access_past_limit_raises():
    res = compute_dc(WindowTask("ACGTACGT", "TTTTACGT", 8), Policy.DENT_ENTRIES, trace_limit=2)
    with pytest.raises(OutOfStoredRegionError):
        traceback(res.table, res.edit_distance, build_pattern_masks("TTTTACGT"), "ACGTACGT")


def test_unequal_lengths():
    _, tr = run("ACGTT", "ACG")
    assert tr.ops == "===DD"
    _, tr = run("A", "AAAA")
    assert tr.cost == 3 and consumed_ok(tr)


@pytest.mark.parametrize("policy", [Policy.BASELINE_EDGES, Policy.SENE_ENTRIES])
def test_replay_and_cost_on_random_windows(policy):
    r = random.Random(17)
    for _ in range(300):
        t = rand_seq(r, r.randint(1, 64))
        p = mutate_seq(r, t, r.uniform(0, 0.4))[:64]
        res, tr = run(t, p, policy=policy, et=r.random() < 0.5)
        assert tr.cost == res.edit_distance == levenshtein(t, p)
        assert consumed_ok(tr)
        assert (tr.text_consumed, tr.pattern_consumed) == (len(t), len(p))
        assert cigarlib.is_valid(cigarlib.compress(tr.ops), t, p)


def test_sene_transcripts_equal_baseline():
    r = random.Random(23)
    for _ in range(300):
        t = rand_seq(r, r.randint(1, 64))
        p = mutate_seq(r, t, r.uniform(0, 0.3))[:64]
        _, a = run(t, p, policy=Policy.BASELINE_EDGES)
        _, b = run(t, p, policy=Policy.SENE_ENTRIES)
        assert a.ops == b.ops


@pytest.mark.parametrize("W,O", [(64, 33), (32, 17), (16, 9), (65, 33)])
def test_dent_truncated_walk_stays_in_region_and_matches(W, O):
    r = random.Random(W * 100 + O)
    L = W - O
    for _ in range(200):
        t = rand_seq(r, W)
        p = mutate_seq(r, t, r.uniform(0, 0.2))[:W]
        outs = {}
        for policy in Policy:
            _, tr = run(t, p, W, policy, et=True, limit=L, steps=L)
            assert len(tr.ops) <= L
            assert consumed_ok(tr) and replay_prefix(tr, t, p)
            outs[policy] = tr.ops
        assert len(set(outs.values())) == 1


seqs = st.text(alphabet="ACGT", min_size=1, max_size=30)


@settings(max_examples=200, deadline=None)
@given(seqs, seqs)
def test_full_traceback_is_optimal_and_valid(t, p):
    res, tr = run(t, p, et=True)
    assert tr.cost == levenshtein(t, p)
    assert cigarlib.is_valid(cigarlib.compress(tr.ops), t, p)


@settings(max_examples=200, deadline=None)
@given(seqs, seqs, st.integers(1, 30))
def test_truncated_prefix_is_valid(t, p, steps):
    _, tr = run(t, p, steps=steps)
    assert len(tr.ops) <= steps
    assert consumed_ok(tr) and replay_prefix(tr, t, p)
