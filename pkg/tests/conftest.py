import random

import pytest
from hypothesis import strategies as st

from sigma_nuclei.corpus import cyclic_group, load_fixture, random_isostrophism, random_latin_square, small_corpus
from sigma_nuclei.quasigroup import Quasigroup


@pytest.fixture(scope="session")
def z3():
    return cyclic_group(3)


@pytest.fixture(scope="session")
def q4prime():
    return load_fixture("q4prime")


@pytest.fixture(scope="session")
def corpus():
    return small_corpus(4)


orders = st.integers(min_value=1, max_value=6)


@st.composite
def quasigroups(draw, max_order=6):
    n = draw(st.integers(min_value=1, max_value=max_order))
    return random_latin_square(n, draw(st.integers(min_value=0, max_value=2**32)))


@st.composite
def quasigroup_and_theta(draw, max_order=6):
    q = draw(quasigroups(max_order))
    rng = random.Random(draw(st.integers(min_value=0, max_value=2**32)))
    return q, random_isostrophism(q.order, rng)
