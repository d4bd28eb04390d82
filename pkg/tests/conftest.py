from __future__ import annotations

from pathlib import Path

import pytest

from hopfpi import constant_family, cyclic, group_algebra
from hopfpi.linalg import PrimeField, QQ

REPO_ROOT = Path(__file__).resolve().parent.parent
FIXTURE_DIR = REPO_ROOT / "fixtures"


@pytest.fixture(scope="session")
def kz2():
    """k[Z/2] over the rationals, basis e, u."""
    return group_algebra(cyclic(2), QQ, names=("e", "u"))


@pytest.fixture(scope="session")
def f7z3():
    """F_7[Z/3], basis e, g, g2."""
    return group_algebra(cyclic(3), PrimeField(7), names=("e", "g", "g2"))


@pytest.fixture(scope="session")
def kz2_const(kz2):
    """Constant family of k[Z/2] over pi = Z/2."""
    return constant_family(kz2, cyclic(2, names=("1", "s")))


@pytest.fixture(scope="session")
def f7z3_const(f7z3):
    """Constant family of F_7[Z/3] over pi = Z/2."""
    return constant_family(f7z3, cyclic(2, names=("1", "s")))


@pytest.fixture(scope="session")
def all_fixtures(kz2, f7z3, kz2_const, f7z3_const):
    return {
        "kz2": kz2,
        "f7z3": f7z3,
        "kz2_const": kz2_const,
        "f7z3_const": f7z3_const,
    }


@pytest.fixture(scope="session")
def fixture_dir():
    return FIXTURE_DIR
