# -*- coding: utf-8 -*-

"""Fixtures for the twisted_cohomology tests."""

import itertools

from hypothesis import strategies as st
import pytest

from twisted_cohomology import Polynomial, WeightSystem, parse_poly
from twisted_cohomology.forms import DifferentialForm

XY = ["x", "y"]
XYZ = ["x", "y", "z"]


def poly(text, names=XY):
    return parse_poly(text, names)


def polynomials(nvars=2, max_exponent=3, max_terms=5):
    """Hypothesis strategy for small polynomials with integer coefficients."""
    return st.dictionaries(
        keys=st.tuples(*[st.integers(0, max_exponent)] * nvars),
        values=st.integers(-5, 5),
        max_size=max_terms,
    ).map(lambda terms: Polynomial(nvars, terms))


def forms(nvars, degree, max_exponent=2):
    """Hypothesis strategy for k-forms with small polynomial coefficients."""
    indices = list(itertools.combinations(range(nvars), degree))
    return st.lists(
        polynomials(nvars, max_exponent, 3),
        min_size=len(indices),
        max_size=len(indices),
    ).map(lambda cs: DifferentialForm(nvars, degree, dict(zip(indices, cs))))


@pytest.fixture
def W2():
    return WeightSystem((1, 1))


@pytest.fixture
def W3():
    return WeightSystem((1, 1, 1))


@pytest.fixture
def cubic2():
    """x^3 + y^3"""
    return poly("x^3 + y^3")


@pytest.fixture
def quadric2():
    """x^2 + y^2"""
    return poly("x^2 + y^2")


@pytest.fixture
def cusp():
    """x^2 + y^3 with weights (3, 2)"""
    return poly("x^2 + y^3"), WeightSystem((3, 2))


@pytest.fixture
def cubic3():
    """x^3 + y^3 + z^3"""
    return poly("x^3 + y^3 + z^3", XYZ)


@pytest.fixture
def config_path(tmp_path):
    """A configuration file location that does not exist yet."""
    return tmp_path / "twisted_cohomology.ini"
