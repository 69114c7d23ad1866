"""Acceptance suite: one check per criterion, each printing a [PASS]/[FAIL] line.

All quantities are exact integers, so every comparison is at zero tolerance.
Sample sizes, type ranges and wall-clock budgets are pinned below.
"""
import pytest

from hessdeform import verify

MAX_RANK = 8          # types A1..A8, B2..B8, C2..C8, D4..D8, E6..E8, F4, G2
BUDGET_S = {1: 30.0, 2: 30.0, 5: 60.0}
BWB_SAMPLES = 1000    # random weights per type of rank <= 4
STAB_CORPUS = 500     # random rational configurations, 4 <= n <= 8
DEMAZURE_TRIALS = 500  # instances per reflection rule
CLOSED_FORM_SAMPLES = 200

PINNED = {
    1: lambda: verify.criterion_1(MAX_RANK),
    2: lambda: verify.criterion_2(MAX_RANK),
    3: lambda: verify.criterion_3(MAX_RANK),
    4: lambda: verify.criterion_4(MAX_RANK),
    5: lambda: verify.criterion_5(),
    6: lambda: verify.criterion_6(samples=BWB_SAMPLES),
    7: lambda: verify.criterion_7(size=STAB_CORPUS),
    8: lambda: verify.criterion_8(demazure_trials=DEMAZURE_TRIALS),
    9: lambda: verify.criterion_9(samples=CLOSED_FORM_SAMPLES),
}

LINES = []


def test_every_criterion_is_pinned():
    assert sorted(PINNED) == sorted(verify.CRITERIA)


@pytest.mark.parametrize("number", sorted(PINNED))
def test_criterion(number):
    res = PINNED[number]()
    line = res.line()
    LINES.append(line)
    print(line)
    assert res.number == number
    if number in BUDGET_S:
        assert res.budget == BUDGET_S[number]
    assert res.passed, "\n".join([line] + res.failures[:20])
