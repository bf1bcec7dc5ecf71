"""Pytest configuration for ac-workbench tests."""

# pytest-asyncio configuration is handled in pyproject.toml

import pytest

from ac_workbench import TRIVIAL, Presentation, gen_AK, mms_length25


@pytest.fixture
def trivial() -> Presentation:
    return TRIVIAL


@pytest.fixture
def one_move() -> Presentation:
    """Trivialized by h3 alone."""
    return Presentation("x", "yx")


@pytest.fixture
def ak3() -> Presentation:
    return gen_AK(3)


@pytest.fixture
def length25() -> Presentation:
    return mms_length25()
