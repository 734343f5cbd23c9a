import pytest

from fusionsys.fusion import (
    fusion_system_of_group,
    trivial_fusion_system_like,
    universal_fusion_system,
)
from fusionsys.groups import sylow_subgroup
from fusionsys.registry import named_group


@pytest.fixture(scope="session")
def s4():
    return named_group("S4")


@pytest.fixture(scope="session")
def d8(s4):
    return sylow_subgroup(s4, 2)


@pytest.fixture(scope="session")
def f_s4(s4, d8):
    return fusion_system_of_group(s4, d8, 2)


@pytest.fixture(scope="session")
def gl32():
    return named_group("GL(3,2)")


@pytest.fixture(scope="session")
def f_gl32(gl32):
    return fusion_system_of_group(gl32, sylow_subgroup(gl32, 2), 2)


@pytest.fixture(scope="session")
def f_trivial_d8(f_s4):
    return trivial_fusion_system_like(f_s4)


@pytest.fixture(scope="session")
def u_d8(d8):
    return universal_fusion_system(d8, 2)
