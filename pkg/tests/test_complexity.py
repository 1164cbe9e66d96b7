import logging
import sys

import pytest

from hbn import arith, core
from hbn.arith import Ordering
from hbn.complexity import OpStats, best_case, iterate, measure_succ_cost, tsize, worst_case
from hbn.core import E, from_natural, succ, to_natural, w
from hbn.errors import ResourceError

t = from_natural


def _traced_calls(range_end: int) -> int:
    """succ/pred invocations seen by the interpreter's profiler while stepping 0..range_end-1"""
    targets = {core.succ.__code__, core.pred.__code__}
    calls = 0

    def profiler(frame, event, arg):
        nonlocal calls
        if event == "call" and frame.f_code in targets:
            calls += 1

    x = E
    sys.setprofile(profiler)
    try:
        for _ in range(range_end):
            x = core.succ(x)
    finally:
        sys.setprofile(None)
    return calls


def test_tsize():
    assert tsize(E) == E
    assert tsize(t(123456)) == t(12)
    assert arith.bitsize(t(123456)) == t(16)


def test_tsize_never_exceeds_bitsize():
    for k in range(1 << 10):
        x = t(k)
        assert arith.cmp(tsize(x), arith.bitsize(x)) is not Ordering.GT, k
    for k in range(8):
        for x in (best_case(t(k)), worst_case(t(k))):
            assert arith.cmp(tsize(x), arith.bitsize(x)) is not Ordering.GT


@pytest.mark.slow
def test_tsize_never_exceeds_bitsize_full():
    for k in range((1 << 14) + 1):
        x = t(k)
        assert arith.cmp(tsize(x), arith.bitsize(x)) is not Ordering.GT, k


def test_worst_case_is_all_unit_blocks():
    for k in range(1, 7):
        x = worst_case(t(k))
        assert tsize(x) == arith.bitsize(x)


def test_iterate():
    assert iterate(succ, E, t(9)) == t(9)
    assert iterate(succ, t(5), E) == t(5)
    assert iterate(arith.double, t(10), t(1)) == t(1024)


def test_iterate_budget():
    with pytest.raises(ResourceError):
        iterate(succ, t(100), E, budget=10)
    with pytest.raises(ResourceError):
        iterate(succ, best_case(t(6)), E)


def test_iterate_refusal_logs_once(caplog):
    with caplog.at_level(logging.WARNING, logger="hbn"):
        with pytest.raises(ResourceError):
            iterate(succ, best_case(t(6)), E)
    refusals = [r for r in caplog.records if "[boundary:error]" in r.getMessage()]
    assert len(refusals) == 1


def test_best_case():
    assert best_case(E) == E
    assert best_case(t(3)) == w(w(w(E)))
    assert to_natural(best_case(t(3))) == 65534
    for k in range(4):
        assert tsize(best_case(t(k))) == t(k)


def test_best_case_bitsizes_follow_tower_recurrence():
    towers = [2, 1 << 2, 1 << 4, 1 << 16, 1 << 65536]
    for k, tower in enumerate(towers):
        # best(k+1) is 2^towers[k] - 2, whose bitsize is towers[k] - 1
        assert arith.bitsize(best_case(t(k + 1))) == t(tower - 1)
    assert arith.bitsize(best_case(t(4))) == t(65535)


def test_worst_case():
    assert worst_case(E) == E
    assert worst_case(t(3)) == w(E, [E, E, E, E, E])
    assert to_natural(worst_case(t(3))) == 84
    assert to_natural(worst_case(t(10))) == 1398100
    for k in range(11):
        assert to_natural(worst_case(t(k))) == 4 * (4 ** k - 1) // 3


def test_succ_cost_single_step():
    stats = measure_succ_cost(1)
    assert stats.total_calls == 1
    assert stats.operations == 1


@pytest.mark.parametrize("range_end", [16, 257])
def test_succ_cost_matches_profiler_trace(range_end):
    stats = measure_succ_cost(range_end)
    assert stats.total_calls == _traced_calls(range_end)
    assert stats.operations == range_end


@pytest.mark.slow
def test_succ_cost_average():
    stats = measure_succ_cost(1 << 20)
    assert 2.1 <= stats.average <= 2.35


def test_succ_cost_budget():
    with pytest.raises(ResourceError):
        measure_succ_cost(100, budget=50)


def test_op_stats():
    stats = OpStats(op_label="succ")
    assert stats.average == 0.0
    stats.record_succ()
    stats.record_succ()
    stats.record_pred()
    stats.operations = 2
    report = stats.get_stats()
    assert report['total_calls'] == 3
    assert report['average'] == 1.5
    assert report['op'] == "succ"
