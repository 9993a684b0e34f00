from __future__ import annotations

import pytest

import flagcodes as fc


@pytest.fixture(scope="session")
def gf2() -> fc.FieldSpec:
    return fc.field_make(2)


@pytest.fixture(scope="session")
def gf3() -> fc.FieldSpec:
    return fc.field_make(3)


@pytest.fixture(scope="session")
def gf4() -> fc.FieldSpec:
    return fc.field_make(2, 2)
