import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bitalign import cigar as cigarlib
from bitalign.errors import ConfigError, InputError
from bitalign.oracle import levenshtein
from bitalign.table import Workspace
from bitalign.window import AlignerConfig, align, align_single_window

from conftest import mutate_seq, rand_seq

COMBOS = list(itertools.product([False, True], repeat=3))


def check_result(res, text, pattern):
    assert cigarlib.is_valid(res.cigar, text, pattern)
    assert cigarlib.edit_count(res.cigar) == res.distance
    assert cigarlib.consumed(res.cigar) == (len(text), len(pattern))


def test_long_identity():
    x = rand_seq(random.Random(1), 10_000)
    for cfg in (AlignerConfig(), AlignerConfig.short_reads(), AlignerConfig(W=128, O=65, dent=False)):
        res = align(x, x, cfg)
        assert (res.distance, res.cigar) == (0, "10000=")


def test_acga_pair():
    res = align("ACGT", "ACGA")
    assert (res.distance, res.cigar, res.windows) == (1, "3=1X", 1)


def test_lowercase_input_is_normalized():
    assert align("acgt", "ACGA").cigar == "3=1X"


def test_simulated_1kbp_pairs_mostly_optimal():
    r = random.Random(5)
    hits = 0
    for _ in range(200):
        t = rand_seq(r, 1000)
        p = mutate_seq(r, t, 0.05)
        res = align(t, p)
        check_result(res, t, p)
        hits += res.distance == levenshtein(t, p)
    assert hits >= 190


def test_residue_becomes_indels():
    # pattern is far shorter; the tail of the text must be deleted
    t = "ACGT" * 50
    res = align(t, "ACGT")
    check_result(res, t, "ACGT")
    res = align("ACGT", t)
    check_result(res, "ACGT", t)
    assert res.distance == len(t) - 4


@pytest.mark.parametrize("W,O", [(64, 33), (65, 33), (128, 65), (16, 9)])
def test_improvement_invariance(W, O):
    r = random.Random(W)
    for _ in range(25):
        t = rand_seq(r, r.randint(100, 600))
        p = mutate_seq(r, t, r.uniform(0, 0.2))
        outs = set()
        for sene, dent, et in COMBOS:
            res = align(t, p, AlignerConfig(W=W, O=O, sene=sene, dent=dent, early_termination=et))
            outs.add((res.distance, res.cigar))
        assert len(outs) == 1
        (d, cig), = outs
        assert d >= levenshtein(t, p)
        assert cigarlib.is_valid(cig, t, p)


def test_exact_when_everything_fits_one_window():
    r = random.Random(8)
    for _ in range(300):
        t, p = rand_seq(r, r.randint(1, 64)), rand_seq(r, r.randint(1, 64))
        res = align(t, p)
        assert res.windows == 1
        assert res.distance == levenshtein(t, p)


def test_deterministic_and_workspace_reuse():
    r = random.Random(3)
    ws = Workspace(64, 64)
    pairs = [(rand_seq(r, 500), None) for _ in range(10)]
    pairs = [(t, mutate_seq(r, t, 0.1)) for t, _ in pairs]
    a = [align(t, p).cigar for t, p in pairs]
    b = [align(t, p, workspace=ws).cigar for t, p in pairs]
    assert a == b


def test_counters_accumulate():
    r = random.Random(4)
    t = rand_seq(r, 500)
    res = align(t, mutate_seq(r, t, 0.05))
    c = res.counters
    assert c.rows_computed > 0 and c.table_reads > 0
    assert c.stored_bits > 0 and c.table_writes > 0


@pytest.mark.parametrize("kw", [dict(W=4, O=4), dict(W=4, O=5), dict(W=2000, O=1000),
                                dict(mode="single", dent=True), dict(mode="bogus"),
                                dict(mode="single", dent=False, k_single=-1)])
def test_config_errors(kw):
    with pytest.raises(ConfigError):
        AlignerConfig(**kw)


def test_config_error_is_a_value_error():
    with pytest.raises(ValueError):
        AlignerConfig(W=4, O=4)


def test_empty_input():
    with pytest.raises(InputError):
        align("", "ACGT")
    with pytest.raises(InputError):
        align("ACGT", "")


def test_single_window_examples():
    assert align_single_window("ACGT", "ACGA", 4).distance == 1
    x = rand_seq(random.Random(2), 64)
    assert align_single_window(x, x, 0).distance == 0
    assert align_single_window("AAAA", "CCCC", 3) is None
    with pytest.raises(ConfigError):
        align_single_window("ACGT", "ACGA", 4, AlignerConfig(W=64, O=33))
    with pytest.raises(InputError):
        align_single_window("A" * 2000, "A", 4)


def test_single_mode_through_align():
    cfg = AlignerConfig(mode="single", dent=False, k_single=1)
    assert align("ACGT", "ACGA", cfg).cigar == "3=1X"
    with pytest.raises(InputError):
        align("AAAA", "CCCC", cfg)


def test_single_window_matches_oracle(rng):
    for _ in range(500):
        t, p = rand_seq(rng, rng.randint(1, 64)), rand_seq(rng, rng.randint(1, 64))
        res = align_single_window(t, p, 64)
        assert res.distance == levenshtein(t, p)
        check_result(res, t, p)


seqs = st.text(alphabet="ACGT", min_size=1, max_size=300)


@settings(max_examples=80, deadline=None)
@given(seqs, seqs, st.sampled_from([(16, 9), (32, 17), (64, 33), (8, 1)]))
def test_upper_bound_and_validity(t, p, wo):
    res = align(t, p, AlignerConfig(W=wo[0], O=wo[1]))
    assert res.distance >= levenshtein(t, p)
    check_result(res, t, p)
