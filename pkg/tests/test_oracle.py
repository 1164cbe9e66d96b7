import random

import pytest

from hbn import oracle
from hbn.core import from_natural, render_tree, succ, to_natural
from hbn.errors import UnderflowError
from hbn.oracle import (OPS, DifferentialReport, Mismatch, OracleOp, add_digitwise, check_op,
                        differential_suite, nat_i_iter, nat_o_iter, sub_digitwise)

t = from_natural


def test_closed_forms():
    assert nat_o_iter(3, 0) == 7
    assert nat_i_iter(3, 0) == 14
    for k in range(10):
        assert nat_o_iter(0, k) == k
        assert nat_i_iter(0, k) == k


def test_closed_forms_match_direct_iteration():
    for k in range(10):
        o_val, i_val = k, k
        for n in range(21):
            assert nat_o_iter(n, k) == o_val
            assert nat_i_iter(n, k) == i_val
            o_val, i_val = 2 * o_val + 1, 2 * i_val + 2


def test_digitwise_baseline():
    for a in range(40):
        for b in range(40):
            assert to_natural(add_digitwise(t(a), t(b))) == a + b
            if a >= b:
                assert to_natural(sub_digitwise(t(a), t(b))) == a - b
    rng = random.Random(3)
    for _ in range(20):
        a, b = rng.getrandbits(256), rng.getrandbits(256)
        assert to_natural(add_digitwise(t(a), t(b))) == a + b
        assert to_natural(sub_digitwise(t(max(a, b)), t(min(a, b)))) == abs(a - b)
    with pytest.raises(UnderflowError):
        sub_digitwise(t(3), t(4))


def test_suite_all_ops_small_bound():
    report = differential_suite(bound=16)
    assert report.ok, report.to_text()
    assert set(report.ops) == set(OPS)
    assert report.checked > 0


def test_suite_cmp_only():
    report = differential_suite(["cmp"], bound=64)
    assert report.ok
    assert report.checked == 65 * 65


def test_suite_random_trials():
    report = differential_suite(["add", "sub", "cmp"], bound=0, random_trials=40, seed=42)
    assert report.ok, report.to_text()
    assert report.checked == 1 + 1 + 1 + 3 * 40


@pytest.mark.slow
def test_suite_acceptance_scale():
    wide = differential_suite([op for op in OPS if op != "mul"], bound=512, random_trials=1000, seed=42)
    assert wide.ok, wide.to_text()
    products = differential_suite(["mul"], bound=256, random_trials=1000, seed=42)
    assert products.ok, products.to_text()
    assert wide.elapsed + products.elapsed < 120


def test_suite_does_not_depend_on_worker_count():
    one = differential_suite(["add", "half", "exp2"], bound=8, random_trials=5, seed=9, workers=1)
    many = differential_suite(["add", "half", "exp2"], bound=8, random_trials=5, seed=9, workers=3)
    assert one.checked == many.checked
    assert one.mismatches == many.mismatches


def test_preconditions_skip_cases():
    # pred and ilog2 skip 0, half skips odd inputs, sub skips a < b
    assert check_op(OPS["pred"], 9, 0, 1)[0] == 9
    assert check_op(OPS["half"], 9, 0, 1)[0] == 5
    assert check_op(OPS["sub"], 3, 0, 1)[0] == 10


def test_unknown_op():
    with pytest.raises(ValueError, match="nope"):
        differential_suite(["add", "nope"])


def test_mismatches_are_reported():
    broken = OracleOp("succ_twice", 1, succ, lambda a: a + 2)
    checked, mismatches = check_op(broken, 3, 0, 1)
    assert checked == 4
    assert len(mismatches) == 4
    first = mismatches[0]
    assert (first.op, first.args, first.inputs, first.expected, first.got) == ("succ_twice", (0,), ("e",), "2", "1")


def test_errors_become_mismatches():
    unguarded = OracleOp("pred", 1, oracle.pred, lambda a: a - 1)
    _, mismatches = check_op(unguarded, 2, 0, 1)
    assert len(mismatches) == 1
    assert mismatches[0].got.startswith("raised UnderflowError")


def test_report_text_and_csv():
    report = DifferentialReport(seed=42, bound=4, random_trials=0, ops=("add", "succ"), checked=30)
    report.mismatches = [
        Mismatch("add", (1, 2), (render_tree(t(1)), render_tree(t(2))), "3", "4"),
        Mismatch("succ", (0,), ("e",), "1", "2"),
    ]
    text = report.to_text()
    assert "seed=42" in text.splitlines()[0]
    assert "2 mismatches" in text
    assert "MISMATCH add(v(e,[]), w(e,[])): expected 3, got 4" in text
    assert report.to_csv().splitlines() == [
        "op,input1,input2,expected,got",
        "add,\"v(e,[])\",\"w(e,[])\",3,4",
        "succ,e,,1,2",
    ]
    assert not report.ok


def test_random_operand_widths():
    assert OPS["mul"].operand_bits == 128
    assert OPS["add"].operand_bits == 256
    rng = random.Random(1)
    a, b = OPS["mul"].draw(rng, OPS["mul"].operand_bits)
    assert a < (1 << 128) and b < (1 << 128)
