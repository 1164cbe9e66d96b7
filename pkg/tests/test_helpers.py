import pytest

from utils.helpers import compared_dt, format_dt, truncate_text


@pytest.mark.parametrize("seconds, expected", [
    (0.0005, "500.0us"),
    (0.5, "500.00ms"),
    (2.5, "2.500s"),
    (75.5, "1m 15.5s"),
    (90061.5, "1501m 1.5s"),
])
def test_format_dt(seconds, expected):
    assert format_dt(seconds) == expected


def test_compared_dt():
    assert compared_dt(1.0, 2.0) == "2.0x faster"
    assert compared_dt(2.0, 1.0) == "2.0x slower"
    assert compared_dt(1.0, None) == "n/a"


def test_truncate_text():
    assert truncate_text("", 5) == "(empty)"
    assert truncate_text("abc", 5) == "abc"
    assert truncate_text("abcdef", 5) == "ab..."
