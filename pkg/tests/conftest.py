import pytest

from lmono import RealPrimitiveCharacter, mark_complete, scan_zeros


@pytest.fixture(scope="session")
def chi4():
    return RealPrimitiveCharacter(-4)


@pytest.fixture(scope="session")
def chi3():
    return RealPrimitiveCharacter(-3)


@pytest.fixture(scope="session")
def zeros4(chi4):
    zlist = mark_complete(chi4, scan_zeros(chi4, 100.0))
    assert zlist.complete
    return zlist


@pytest.fixture(scope="session")
def zeros3(chi3):
    zlist = mark_complete(chi3, scan_zeros(chi3, 100.0))
    assert zlist.complete
    return zlist
