import pytest

from qsuperplane.algebras import build


@pytest.fixture(scope="session")
def kq():
    return build("kq11").pres


@pytest.fixture(scope="session")
def gl():
    return build("glq11").pres
