import numpy as np
import pytest

from qcldpc.matrix import BinaryMatrix


def random_sparse(rng, rows, cols, max_col_w=3):
    """Random sparse binary matrix with column weights in [1, max_col_w]."""
    rr = []
    cc = []
    for c in range(cols):
        w = int(rng.integers(1, max_col_w + 1))
        for r in rng.choice(rows, size=min(w, rows), replace=False):
            rr.append(int(r))
            cc.append(c)
    return BinaryMatrix.from_indices(rows, cols, np.array(rr), np.array(cc))


@pytest.fixture
def rng():
    return np.random.Generator(np.random.Philox(key=20260814))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "acceptance_lines", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for _, text in sorted(lines):
            terminalreporter.write_line(text)
