import random

import pytest

from bitalign.bitvec import BitVector, or_, shl

BASES = "ACGT"


def rand_seq(rng: random.Random, n: int) -> str:
    return "".join(rng.choice(BASES) for _ in range(n))


def mutate_seq(rng: random.Random, seq: str, rate: float) -> str:
    out = []
    for ch in seq:
        u = rng.random()
        if u >= rate:
            out.append(ch)
            continue
        kind = rng.randrange(3)
        if kind == 0:
            out.append(rng.choice([b for b in BASES if b != ch]))
        elif kind == 1:
            out.append(rng.choice(BASES) + ch)
    return "".join(out) or seq[:1]


def rowwise_reference(text: str, pattern: str, k: int):
    """Direct transcription of the row update rules on BitVector objects.

    The shift fill bit is the empty-suffix column: 1 when the remaining text
    is longer than the row's budget.  Returns ``R[d][i]`` for all rows.
    """
    n, m = len(text), len(pattern)
    pm = {ch: BitVector.from_bits([0 if p == ch else 1 for p in pattern]) for ch in BASES}
    never = BitVector.from_bits([1] * m)
    tail = BitVector.from_bits([0] * (m - 1) + [1])

    def shl_fill(v, fill):
        out = shl(v, 1)
        return or_(out, tail) if fill else out

    R = []
    for d in range(k + 1):
        row = [None] * (n + 1)
        row[n] = shl(BitVector.from_bits([1] * m), min(d, m))
        for i in range(n - 1, -1, -1):
            cur_pm = pm.get(text[i], never)
            M = or_(shl_fill(row[i + 1], n - i - 1 > d), cur_pm)
            if d == 0:
                row[i] = M
                continue
            I = shl_fill(R[d - 1][i], n - i > d - 1)
            D = R[d - 1][i + 1]
            S = shl_fill(R[d - 1][i + 1], n - i - 1 > d - 1)
            row[i] = I & D & S & M
        R.append(row)
    return R


@pytest.fixture
def rng():
    return random.Random(12345)


@pytest.fixture
def criterion(request):
    """Record one PASS/FAIL line per acceptance criterion and assert it."""
    lines = request.config.__dict__.setdefault("_acceptance_lines", [])

    def check(num, title, ok, detail="", elapsed=None, budget=None):
        timing = ""
        if elapsed is not None:
            timing = f" [{elapsed:.1f}s / {budget}s]"
            ok = ok and elapsed < budget
        line = f"criterion {num}: {'PASS' if ok else 'FAIL'} {title}: {detail}{timing}"
        lines.append(line)
        print(line)
        assert ok, line
    return check


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.__dict__.get("_acceptance_lines")
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
