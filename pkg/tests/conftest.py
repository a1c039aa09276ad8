import pytest

from proxsweep import build_index, tokenize

# the two worked example documents used throughout the suite
DOC_RUNS = "CABABABCABBB"
DOC_TIE = "ABCCABCCBACBBBCBA"


@pytest.fixture
def runs_index():
    return build_index(tokenize(DOC_RUNS))


@pytest.fixture
def tie_index():
    return build_index(tokenize(DOC_TIE))
