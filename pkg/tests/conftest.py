import pytest

from altalg import GF, Q, direct_sum, matrix_algebra_2x2, octonions, quaternions, sedenions, zorn_split_octonions


@pytest.fixture(scope="session")
def oct_q():
    return octonions(Q).algebra


@pytest.fixture(scope="session")
def oct_inv():
    return octonions(Q)


@pytest.fixture(scope="session")
def oct_gf2():
    return octonions(GF(2)).algebra


@pytest.fixture(scope="session")
def oct_gf3():
    return octonions(GF(3)).algebra


@pytest.fixture(scope="session")
def quat():
    return quaternions(Q).algebra


@pytest.fixture(scope="session")
def sed():
    return sedenions(Q).algebra


@pytest.fixture(scope="session")
def m2():
    return matrix_algebra_2x2(Q)


@pytest.fixture(scope="session")
def zorn2():
    return zorn_split_octonions(GF(2))


@pytest.fixture(scope="session")
def zorn3():
    return zorn_split_octonions(GF(3))


@pytest.fixture(scope="session")
def zorn_q():
    return zorn_split_octonions(Q)


@pytest.fixture(scope="session")
def oplus_m2(oct_q, m2):
    return direct_sum(oct_q, m2)


@pytest.fixture(scope="session")
def corpus(oct_q, oct_gf2, oct_gf3, zorn2, zorn3, zorn_q, sed, m2, quat, oplus_m2):
    return {
        "octonions/Q": oct_q,
        "octonions/GF(2)": oct_gf2,
        "octonions/GF(3)": oct_gf3,
        "zorn/GF(2)": zorn2,
        "zorn/GF(3)": zorn3,
        "zorn/Q": zorn_q,
        "sedenions/Q": sed,
        "M2/Q": m2,
        "quaternions/Q": quat,
        "O+M2/Q": oplus_m2,
    }
