"""Seeded randomized property suites (each must complete its instances)."""

import pytest

from gl2tors.verify import PROPERTY_SUITES


@pytest.mark.parametrize("name,fn", PROPERTY_SUITES,
                         ids=[n for n, _ in PROPERTY_SUITES])
def test_property_suite(name, fn):
    assert fn() >= 100
