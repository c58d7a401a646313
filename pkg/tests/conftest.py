from __future__ import annotations

from pathlib import Path

import pytest

from twoneg.algebra import attach_negations
from twoneg.lattice import build_lattice

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture(scope="session")
def chain3():
    return build_lattice(["0", "a", "1"], [("0", "a"), ("a", "1")])


@pytest.fixture(scope="session")
def h5():
    return build_lattice(["0", "a", "b", "e", "1"],
                         [("0", "a"), ("0", "b"), ("a", "e"), ("b", "e"), ("e", "1")])


@pytest.fixture(scope="session")
def h6():
    return build_lattice(
        ["0", "y", "z", "w", "x", "1"],
        [("0", "y"), ("0", "z"), ("y", "w"), ("z", "w"), ("z", "x"),
         ("w", "1"), ("x", "1")])


@pytest.fixture(scope="session")
def a_prime(chain3):
    return attach_negations(chain3, 0, name="a_prime")


@pytest.fixture(scope="session")
def b_prime(chain3):
    return attach_negations(chain3, 2, name="b_prime")
