import numpy as np
import pytest
from hypothesis import strategies as st

from roap.generators import GenSpec, completion_metric, generate, paper_fig1
from roap.metric_path import from_matrix, from_points


def uniform_path(n):
    return from_points([[float(k), 0.0] for k in range(n)])


@pytest.fixture
def u4():
    return uniform_path(4)


@pytest.fixture
def u5():
    return uniform_path(5)


@pytest.fixture
def u6():
    return uniform_path(6)


@pytest.fixture
def f10():
    return paper_fig1()


@pytest.fixture
def square4():
    return from_points([[0, 0], [1, 0], [1, 1], [0, 1]])


@st.composite
def gen_specs(draw, n_min=2, n_max=14):
    n = draw(st.integers(n_min, n_max))
    model = draw(st.sampled_from(["euclidean", "graph"] if n >= 2 else ["euclidean"]))
    return GenSpec(
        model,
        n,
        seed=draw(st.integers(0, 2**32)),
        dim=draw(st.integers(1, 3)),
        extra_edges=draw(st.integers(0, n)),
    )


@st.composite
def random_instances(draw, n_min=2, n_max=14):
    return generate(draw(gen_specs(n_min, n_max)))


@st.composite
def integer_metric_instances(draw, n_min=2, n_max=12):
    """Completion metrics with small integer weights: exact arithmetic, many ties."""
    n = draw(st.integers(n_min, n_max))
    lengths = draw(st.lists(st.integers(1, 4), min_size=n - 1, max_size=n - 1))
    chords = []
    if n >= 3:
        for _ in range(draw(st.integers(0, n))):
            a = draw(st.integers(0, n - 3))
            b = draw(st.integers(a + 2, n - 1))
            chords.append((a, b, draw(st.integers(1, 6))))
    return from_matrix(completion_metric(n, lengths, chords))


def all_instances(n_max=14):
    return st.one_of(random_instances(2, n_max), integer_metric_instances(2, min(n_max, 12)))


def rng_instances(count, n_lo, n_hi, seed):
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        n = int(rng.integers(n_lo, n_hi + 1))
        model = ["euclidean", "graph"][int(rng.integers(0, 2))] if n >= 2 else "euclidean"
        out.append(generate(GenSpec(model, n, int(rng.integers(0, 2**32)), dim=int(rng.integers(1, 4)),
                                    extra_edges=int(rng.integers(0, n + 1)))))
    return out


# acceptance criteria append "PASS/FAIL criterion N: ..." lines here
ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def acceptance_log():
    def log(number, ok, detail):
        ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'}  criterion {number}: {detail}")
        return ok

    return log


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
