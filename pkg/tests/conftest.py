import pytest

from polyvis.poly import SightLine, parse_poly

BATTERY = [
    "x",
    "x^2",
    "2*x+1",
    "x^2+x",
    "x^3-x",
    "(x^2-1)^2",
    "(x^2-5*x+6)^2",
    "(x^3-x)^2",
]


def line(text, m=1):
    return SightLine(parse_poly(text), m)


@pytest.fixture(params=BATTERY)
def battery_line(request):
    return line(request.param)


@pytest.fixture
def isolated_home(tmp_path, monkeypatch):
    """A throwaway HOME and result cache for CLI runs."""
    monkeypatch.setenv("HOME", str(tmp_path))
    monkeypatch.setenv("POLYVIS_CACHE", str(tmp_path / "cache"))
    return tmp_path
