from collections import Counter

import pytest

from jumbled_lab import Alphabet, Conv3SumInstance, JIText


def text_of(s, letters="ab"):
    return JIText.from_string(s, letters)


def counter_vector(symbols, size):
    """Per-symbol counts via Counter; independent of prefix sums."""
    c = Counter(symbols)
    return tuple(c.get(a, 0) for a in range(size))


def window_vectors(symbols, size):
    """{(start, length): counts} for every non-empty substring, 1-based."""
    n = len(symbols)
    return {(lo + 1, hi - lo): counter_vector(symbols[lo:hi], size)
            for lo in range(n) for hi in range(lo + 1, n + 1)}


@pytest.fixture
def worked():
    """x = [1, 3, 4, 2]; solvable via (3,1) and (3,2)."""
    return Conv3SumInstance((1, 3, 4, 2), 4)


@pytest.fixture
def worked_no():
    return Conv3SumInstance((1, 3, 2, 4), 4)
