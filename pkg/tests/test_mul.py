import random
import time
import types

import pytest

from hbn import arith
from hbn.complexity import best_case, tsize
from hbn.core import E, from_natural, succ, to_natural
from hbn.mul import mul

t = from_natural


def test_examples():
    assert mul(t(12), t(12)) == t(144)
    assert mul(E, t(99)) == E
    assert mul(t(99), E) == E
    assert mul(t(1), t(99)) == t(99)


def test_exhaustive_small():
    for a in range(33):
        for b in range(33):
            assert to_natural(mul(t(a), t(b))) == a * b, (a, b)


@pytest.mark.slow
def test_exhaustive():
    for a in range(257):
        for b in range(257):
            assert to_natural(mul(t(a), t(b))) == a * b, (a, b)


@pytest.mark.parametrize("bits, trials", [
    (128, 10),
    (256, 5),
    pytest.param(128, 1000, marks=pytest.mark.slow),
    pytest.param(2048, 3, marks=pytest.mark.slow),
])
def test_random_wide(bits, trials):
    rng = random.Random(bits * trials)
    for _ in range(trials):
        a, b = rng.getrandbits(bits), rng.getrandbits(bits)
        assert to_natural(mul(t(a), t(b))) == a * b


def test_commutes_across_parities():
    for a, b in [(7, 12), (12, 7), (1023, 1024), (1024, 1024), (255, 255)]:
        assert mul(t(a), t(b)) == mul(t(b), t(a)) == t(a * b)


def test_distributes_over_add():
    rng = random.Random(5)
    for _ in range(1000):
        x, y, z = (t(rng.getrandbits(12)) for _ in range(3))
        assert mul(x, arith.add(y, z)) == arith.add(mul(x, y), mul(x, z))


def test_power_of_two_factor_is_shift():
    for n in range(20):
        for k in range(0, 200, 7):
            assert mul(arith.exp2(t(n)), t(k)) == arith.left_shift(t(n), t(k))
    n = best_case(t(3))
    assert mul(arith.exp2(n), t(12345)) == arith.left_shift(n, t(12345))


def test_block_steps_use_unchecked_subtraction(monkeypatch):
    def refuse(x, y):
        raise AssertionError("checked subtraction inside mul")

    monkeypatch.setattr(arith, "sub", refuse)
    assert to_natural(mul(t(1023), t(777))) == 1023 * 777
    assert to_natural(mul(t(2 ** 100 - 1), t(3 ** 60))) == (2 ** 100 - 1) * 3 ** 60


def test_mul_is_a_submodule_attribute():
    import hbn
    import hbn.mul
    assert isinstance(hbn.mul, types.ModuleType)
    assert hbn.mul.mul is mul


def test_tower_product_structural_complexity():
    product = mul(succ(best_case(t(30))), succ(best_case(t(40))))
    assert tsize(product) == t(668)


@pytest.mark.slow
def test_tower_product_is_fast():
    start = time.perf_counter()
    tsize(mul(succ(best_case(t(30))), succ(best_case(t(40)))))
    assert time.perf_counter() - start < 1.0
