"""Shared strategies and the acceptance summary printed at the end of the run."""

from __future__ import annotations

import numpy as np
import pytest
from hypothesis import strategies as st

from mdsintersect.field import field_of_order
from mdsintersect.matrix import Matrix, rank

SMALL_Q = (2, 3, 4, 5, 7, 8, 9)
ODDBALL_Q = (11, 13, 16, 25, 27, 32, 49, 64, 81, 121, 125, 128, 243, 256)

ACCEPTANCE: dict[str, str] = {}


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE, key=lambda k: int(k.split()[1])):
        terminalreporter.write_line(ACCEPTANCE[key])


@pytest.fixture
def criterion():
    """criterion(number, passed, detail) records one acceptance line."""

    def record(number: int, passed: bool, detail: str) -> bool:
        line = f"criterion {number}: {'PASS' if passed else 'FAIL'} ({detail})"
        ACCEPTANCE[f"criterion {number}"] = line
        print(line)
        return passed

    return record


fields = st.sampled_from(SMALL_Q).map(field_of_order)


def random_matrix(F, rows, cols, rng) -> Matrix:
    return Matrix(F, rng.integers(0, F.q, size=(rows, cols)), cols=cols)


def random_full_rank(F, rows, cols, rng) -> Matrix:
    while True:
        M = random_matrix(F, rows, cols, rng)
        if rank(M) == rows:
            return M


@st.composite
def field_and_seed(draw):
    return draw(fields), draw(st.integers(0, 2**32 - 1))


def rng_for(seed: int) -> np.random.Generator:
    return np.random.default_rng(seed)
