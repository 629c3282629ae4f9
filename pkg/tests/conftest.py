import os
import random
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from dtroute.corpus import build_corpus
from dtroute.graph import Graph, fig1_fixture, random_connected_graph

FIXTURES = Path(__file__).parent / "fixtures"

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=600, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture(scope="session")
def corpus():
    return build_corpus(fixtures=FIXTURES)


@pytest.fixture(scope="session")
def fig1():
    return fig1_fixture()


@pytest.fixture
def square():
    return Graph.from_labeled_links([("s", "a", 1), ("a", "d", 1), ("s", "b", 1), ("b", "d", 1)])


@st.composite
def small_graphs(draw, min_nodes=2, max_nodes=9, constant=None):
    """Random connected symmetric graphs, driven by a drawn seed."""
    seed = draw(st.integers(0, 2**32 - 1))
    n = draw(st.integers(min_nodes, max_nodes))
    extra = draw(st.sampled_from([0.0, 0.3, 0.7, 1.5]))
    const = draw(st.booleans()) if constant is None else constant
    return random_connected_graph(n, random.Random(seed), extra=extra, weights=(1, 6), constant=const)
