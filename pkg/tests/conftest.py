import pytest

from horolib import invariants, splitlie


@pytest.fixture(scope="session")
def sl2():
    return splitlie.build_algebra("sl", 2)


@pytest.fixture(scope="session")
def sl3():
    return splitlie.build_algebra("sl", 3)


@pytest.fixture(scope="session")
def sl4():
    return splitlie.build_algebra("sl", 4)


@pytest.fixture(scope="session")
def sp6():
    return splitlie.build_algebra("sp", 6)


@pytest.fixture(scope="session")
def so7():
    return splitlie.build_algebra("so_odd", 7)


@pytest.fixture(scope="session")
def so8():
    return splitlie.build_algebra("so_even", 8)


@pytest.fixture(scope="session")
def ctx_sl4(sl4):
    return invariants.make_context(sl4, frozenset({2}))


@pytest.fixture(scope="session")
def ctx_sl3h(sl3):
    return invariants.make_context(sl3, frozenset({1, 2}))


@pytest.fixture(scope="session")
def ctx_sp6h(sp6):
    return invariants.make_context(sp6, frozenset({1}))


@pytest.fixture(scope="session")
def ctx_so7(so7):
    return invariants.make_context(so7, frozenset({1}))
