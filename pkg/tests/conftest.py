"""
Shared fixtures and hypothesis strategies
"""

import os
import sys
from fractions import Fraction

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

import pytest
from hypothesis import HealthCheck
from hypothesis import settings as hypothesis_settings
from hypothesis import strategies as st

from src.catalog import catalog_get, catalog_list
from src.exactlin import vec_add, vec_scale, zero_vector
from src.settings import get_settings

hypothesis_settings.register_profile(
    "induced3lie",
    max_examples=get_settings().property_examples,
    deadline=None,
    suppress_health_check=[HealthCheck.function_scoped_fixture],
)
hypothesis_settings.load_profile("induced3lie")

LIE_IDS = [e.id for e in catalog_list(arity=2)]
TRILIE_IDS = [e.id for e in catalog_list(arity=3)]


@pytest.fixture(autouse=True)
def quiet_logging(monkeypatch):
    monkeypatch.setenv("INDUCED3LIE_LOG_LEVEL", "WARNING")
    monkeypatch.delenv("INDUCED3LIE_OUTPUT_FORMAT", raising=False)


@pytest.fixture
def m5():
    return catalog_get("M5")


@pytest.fixture
def m4():
    return catalog_get("M4")


@pytest.fixture
def gl2():
    return catalog_get("gl2")


@pytest.fixture
def m8():
    return catalog_get("M8")


rationals = st.builds(
    Fraction,
    st.integers(min_value=-5, max_value=5),
    st.integers(min_value=1, max_value=4),
)


@st.composite
def rational_vectors(draw, dim):
    return tuple(draw(rationals) for _ in range(dim))


@st.composite
def rational_matrices(draw, max_rows=5, max_cols=5):
    rows = draw(st.integers(min_value=1, max_value=max_rows))
    cols = draw(st.integers(min_value=1, max_value=max_cols))
    return [[draw(rationals) for _ in range(cols)] for _ in range(rows)]


@st.composite
def subspace_elements(draw, space):
    """Random rational combination of the canonical basis of a Subspace"""
    coords = zero_vector(space.ambient_dim)
    for w, v in zip(draw(rational_vectors(space.dim)), space.vectors()):
        coords = vec_add(coords, vec_scale(w, v))
    return coords
