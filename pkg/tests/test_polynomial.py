#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Tests for the polynomial arithmetic in `twisted_cohomology`."""

from fractions import Fraction

from hypothesis import given, settings
import pytest
import sympy

from twisted_cohomology import (
    ArityError,
    Polynomial,
    PreconditionError,
    WeightSystem,
    euler_operator,
    format_poly,
    is_quasi_homogeneous,
)
from twisted_cohomology.polynomial import monomials_of_weighted_degree

from .conftest import XY, poly, polynomials

x, y = sympy.symbols("x y")


def to_sympy(p):
    return sympy.expand(sympy.sympify(format_poly(p, XY).replace("^", "**")))


def test_binomial():
    assert poly("(x + y)^2") == poly("x^2 + 2*x*y + y^2")


def test_canonical_text():
    assert poly("y^2 + 2xy + x^2").to_string(XY) == "x^2 + 2*x*y + y^2"
    assert poly("-x + 1/2").to_string(XY) == "-x + 1/2"
    assert Polynomial.zero(2).to_string(XY) == "0"


def test_exact_coefficients():
    p = poly("1/3*x") * 3
    assert p == poly("x")
    assert p.coefficient((1, 0)) == Fraction(1)


def test_float_coefficients_rejected():
    with pytest.raises(TypeError):
        Polynomial(2, {(1, 0): 0.5})


def test_arity_mismatch():
    with pytest.raises(ArityError):
        poly("x") + Polynomial.variable(0, 3)


@settings(max_examples=50, deadline=None)
@given(polynomials(), polynomials(), polynomials())
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert (a - a).is_zero()


@settings(max_examples=50, deadline=None)
@given(polynomials(), polynomials())
def test_product_matches_sympy(a, b):
    assert to_sympy(a * b) == sympy.expand(to_sympy(a) * to_sympy(b))


@settings(max_examples=50, deadline=None)
@given(polynomials(max_exponent=4))
def test_mixed_partials(f):
    assert f.partial(0).partial(1) == f.partial(1).partial(0)
    assert to_sympy(f.partial(0)) == sympy.diff(to_sympy(f), x)


def test_quasi_homogeneous_degree():
    assert is_quasi_homogeneous(poly("x^2 + y^3"), WeightSystem((3, 2))) == 6
    assert is_quasi_homogeneous(poly("x^3 + y^3"), WeightSystem((1, 1))) == 3
    assert is_quasi_homogeneous(poly("x^2 + y"), WeightSystem((1, 1))) is None
    with pytest.raises(PreconditionError):
        is_quasi_homogeneous(Polynomial.zero(2), WeightSystem((1, 1)))


def test_euler_operator():
    W = WeightSystem((3, 2))
    f = poly("x^2 + 5*y^3")
    assert euler_operator(f, W) == f * 6


def test_weight_system_validation():
    with pytest.raises(PreconditionError):
        WeightSystem((1, 0))
    with pytest.raises(PreconditionError):
        WeightSystem(())
    with pytest.raises(ArityError):
        WeightSystem((1, 1)).check_arity(3)


def test_monomials_of_weighted_degree():
    W = WeightSystem((3, 2))
    assert set(monomials_of_weighted_degree(W, 6)) == {(2, 0), (0, 3)}
    assert monomials_of_weighted_degree(W, 1) == []
    assert monomials_of_weighted_degree(W, -1) == []
    assert monomials_of_weighted_degree(WeightSystem((1, 1)), 2) == [
        (2, 0),
        (1, 1),
        (0, 2),
    ]


def test_graded_component():
    f = poly("x^2 + x*y + y + 3")
    assert f.graded_component(WeightSystem((1, 1)), 2) == poly("x^2 + x*y")
    assert f.graded_component(WeightSystem((1, 1)), 0) == poly("3")


def test_exact_divide():
    assert poly("x^2 - y^2").exact_divide(poly("x - y")) == poly("x + y")
    assert poly("x^2 + 1").exact_divide(poly("x")) is None
    assert poly("x + y").divides(poly("x^3 + y^3"))
    with pytest.raises(ZeroDivisionError):
        poly("x").exact_divide(Polynomial.zero(2))


def test_compose():
    f = poly("x^2 + y")
    images = [poly("x + y"), poly("x*y")]
    assert f.compose(images) == poly("x^2 + 2*x*y + y^2 + x*y")
    # into one variable
    t = Polynomial.variable(0, 1)
    assert f.compose([t, t * t]) == t * t * 2
