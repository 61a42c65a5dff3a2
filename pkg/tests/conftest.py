"""Shared fixtures: the expensive full-range campaign runs happen once."""

import pytest

from lucasdisc.campaigns import campaign_case12, campaign_case3, campaign_small


@pytest.fixture(scope="session")
def small_report():
    return campaign_small()


@pytest.fixture(scope="session")
def case12_full_report():
    return campaign_case12()


@pytest.fixture(scope="session")
def case12_toy_report():
    return campaign_case12(202, 10_000)


@pytest.fixture(scope="session")
def case3_150_report():
    return campaign_case3(modulus_extra_bits=150)


@pytest.fixture(scope="session")
def case3_100_report():
    return campaign_case3(modulus_extra_bits=100)
