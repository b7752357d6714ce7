from functools import lru_cache

import pytest

from cyclocode.field import build_field_for


@lru_cache(maxsize=None)
def field(q, k):
    return build_field_for(q, k)


@pytest.fixture(scope="session")
def f49():
    return field(7, 2)


@pytest.fixture(scope="session")
def f169():
    return field(13, 2)
