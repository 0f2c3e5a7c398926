from functools import lru_cache

import pytest

from bitalign import cigar as cigarlib
from bitalign.errors import InputError
from bitalign.oracle import (MAX_ORACLE_LEN, ScoringParams, correctly_aligned_bases,
                             global_align, levenshtein, score_cigar, suffix_distance_table)

from conftest import mutate_seq, rand_seq


def brute_levenshtein(a, b):
    @lru_cache(maxsize=None)
    def go(i, j):
        if i == len(a):
            return len(b) - j
        if j == len(b):
            return len(a) - i
        return min(go(i + 1, j + 1) + (a[i] != b[j]), go(i + 1, j) + 1, go(i, j + 1) + 1)
    return go(0, 0)


@pytest.mark.parametrize("a,b,d", [("ACGT", "ACGA", 1), ("ACGT", "ACGT", 0), ("AAAA", "CCCC", 4),
                                   ("A", "ACGT", 3), ("GATTACA", "GCATGCT", 4)])
def test_levenshtein_examples(a, b, d):
    assert levenshtein(a, b) == d
    assert brute_levenshtein(a, b) == d


def test_levenshtein_matches_brute_force(rng):
    for _ in range(300):
        a = rand_seq(rng, rng.randint(1, 14))
        b = rand_seq(rng, rng.randint(1, 14))
        assert levenshtein(a, b) == brute_levenshtein(a, b)


def test_symmetry_and_triangle(rng):
    for _ in range(100):
        x, y, z = (rand_seq(rng, rng.randint(1, 40)) for _ in range(3))
        assert levenshtein(x, y) == levenshtein(y, x)
        assert levenshtein(x, z) <= levenshtein(x, y) + levenshtein(y, z)


def test_suffix_table():
    d = suffix_distance_table("ACGT", "ACGA")
    assert d[4][4] == 0
    assert [d[4][j] for j in range(5)] == [4, 3, 2, 1, 0]
    assert d[0][0] == 1


def test_suffix_table_matches_brute_force(rng):
    for _ in range(50):
        a, b = rand_seq(rng, rng.randint(1, 8)), rand_seq(rng, rng.randint(1, 8))
        d = suffix_distance_table(a, b)
        for i in range(len(a) + 1):
            for j in range(len(b) + 1):
                assert d[i][j] == brute_levenshtein(a[i:], b[j:])


def test_global_align_examples():
    assert global_align("ACGT", "ACGA") == (1, "3=1X")
    assert global_align("ACGTACGT", "ACGTACGT") == (0, "8=")


def test_global_align_random(rng):
    for _ in range(100):
        a = rand_seq(rng, 200)
        b = mutate_seq(rng, a, rng.uniform(0, 0.3))
        dist, cig = global_align(a, b)
        assert dist == levenshtein(a, b)
        assert cigarlib.is_valid(cig, a, b)
        assert cigarlib.edit_count(cig) == dist


def test_hirschberg_path_for_large_inputs(rng, monkeypatch):
    from bitalign import oracle
    monkeypatch.setattr(oracle, "_FULL_MATRIX_CELLS", 50)
    for _ in range(30):
        a = rand_seq(rng, rng.randint(1, 120))
        b = mutate_seq(rng, a, 0.2)
        dist, cig = global_align(a, b)
        assert dist == levenshtein(a, b)
        assert cigarlib.is_valid(cig, a, b)


def test_global_align_guard():
    with pytest.raises(InputError):
        global_align("A" * (MAX_ORACLE_LEN + 1), "A")


@pytest.mark.parametrize("cig,score", [("10=", 20), ("3=1X", 2), ("5=2I3=", 8),
                                       ("2=1D1I2=", 8 - 6 - 6)])
def test_score_cigar(cig, score):
    assert score_cigar(cig, ScoringParams(2, 4, 4, 2)) == score


def test_score_cigar_rejects_garbage():
    with pytest.raises(InputError):
        score_cigar("3M")
    with pytest.raises(InputError):
        score_cigar("=3")


def test_correctly_aligned_bases():
    assert correctly_aligned_bases("4=", "4=") == 1.0
    # read->ref: (0,2,3,-) against (0,-,1,3)
    assert correctly_aligned_bases("1X1D2=1I", "1=1I1=1D1=") == pytest.approx(1 / 4)
    with pytest.raises(InputError):
        correctly_aligned_bases("4=", "3=")


def test_n_never_matches():
    assert levenshtein("ANA", "ANA") == 1
    assert global_align("ANA", "ANA") == (1, "1=1X1=")
