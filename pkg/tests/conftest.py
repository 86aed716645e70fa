import pytest

from dirop.store import CASES, SPECIALS


@pytest.fixture(params=sorted(CASES), ids=lambda c: f"t{c[0]}_q{c[1]}")
def case(request):
    return request.param


@pytest.fixture(params=sorted(SPECIALS), ids=lambda c: f"t{c[0]}_t{c[1]}")
def special(request):
    return request.param
