"""The eight acceptance criteria at full size; each prints one status line."""

import pytest

from liec import acceptance

CRITERIA = [
    (1, lambda: acceptance.criterion_1(13)),
    (2, acceptance.criterion_2),
    (3, lambda: acceptance.criterion_3(12)),
    (4, lambda: acceptance.criterion_4(12)),
    (5, lambda: acceptance.criterion_5(12)),
    (6, acceptance.criterion_6),
    (7, lambda: acceptance.criterion_7(11, minimum=200)),
    (8, lambda: acceptance.criterion_8(7)),
]


@pytest.mark.slow
@pytest.mark.parametrize("number, run", CRITERIA, ids=[f"criterion_{n}" for n, _ in CRITERIA])
def test_criterion(number, run, capsys):
    r = run()
    with capsys.disabled():
        print("\n" + r.line())
    assert r.number == number
    assert r.passed, r.failures[:5]
