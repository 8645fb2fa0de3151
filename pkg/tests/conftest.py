from __future__ import annotations

import pytest

from fpurity import parse_poly, parse_ring


@pytest.fixture
def r3x():
    return parse_ring("p=3; vars=x")


@pytest.fixture
def r3xy():
    return parse_ring("p=3; vars=x,y")


@pytest.fixture
def r3xyz():
    return parse_ring("p=3; vars=x,y,z")


@pytest.fixture
def r2xy():
    return parse_ring("p=2; vars=x,y")


def p(text, ring):
    return parse_poly(text, ring)
