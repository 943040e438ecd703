#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Tests for the text syntax of polynomials and forms."""

from fractions import Fraction

from hypothesis import given, settings
import pytest

from twisted_cohomology import (
    DifferentialForm,
    ExponentOverflowError,
    ParseError,
    Polynomial,
    UnknownVariableError,
    format_form,
    format_poly,
    parse_form,
    parse_poly,
)

from .conftest import XY, XYZ, poly, polynomials


def test_coefficients_and_powers():
    f = parse_poly("3*x^2*y - 1/2*y^3", XY)
    assert f.coefficient((2, 1)) == 3
    assert f.coefficient((0, 3)) == Fraction(-1, 2)


def test_implicit_multiplication():
    assert parse_poly("2xy", XY) == parse_poly("2*x*y", XY)
    assert parse_poly("2 x (x + y)", XY) == parse_poly("2*x^2 + 2*x*y", XY)


def test_longer_names():
    names = ["x1", "x2", "x10"]
    f = parse_poly("x10^2 + x1*x2", names)
    assert f.coefficient((0, 0, 2)) == 1
    assert f.coefficient((1, 1, 0)) == 1


def test_signs():
    assert parse_poly("--x", XY) == poly("x")
    assert parse_poly("-(x - y)", XY) == poly("y - x")


@pytest.mark.parametrize(
    "text, offset",
    [
        ("x + * y", 4),
        ("x^", 2),
        ("(x + y", 6),
        ("x $ y", 2),
        ("1/0", 2),
    ],
)
def test_syntax_errors(text, offset):
    with pytest.raises(ParseError) as e:
        parse_poly(text, XY)
    assert e.value.offset == offset
    assert e.value.exit_status == 2
    assert e.value.to_dict()["offset"] == offset


def test_unknown_variable():
    with pytest.raises(UnknownVariableError) as e:
        parse_poly("x + w", XY)
    assert e.value.offset == 4
    assert e.value.code == "UnknownVariable"


def test_byte_offsets():
    with pytest.raises(ParseError) as e:
        parse_poly("x + é", XY)
    assert e.value.offset == 4
    with pytest.raises(ParseError) as e:
        parse_poly("é + é", XY)
    assert e.value.offset == 0


def test_exponent_limit():
    assert parse_poly("x^2", XY) == poly("x*x")
    with pytest.raises(ExponentOverflowError):
        parse_poly("x^10001", XY)


def test_forms():
    nu = parse_form("(x^2+y^2)*dx^dy", XY)
    assert nu == DifferentialForm.volume(2, poly("x^2 + y^2"))
    alpha = parse_form("x dy - y dx", XY)
    assert alpha.degree == 1
    assert alpha.component((0,)) == poly("-y")
    assert alpha.component((1,)) == poly("x")
    assert parse_form("dy^dx", XY) == -DifferentialForm.volume(2)
    assert parse_form("dx^dx", XY).is_zero()


def test_form_of_degree_zero():
    assert parse_form("x + 1", XY) == DifferentialForm.from_function(poly("x + 1"))


def test_forms_of_different_degree():
    with pytest.raises(ParseError):
        parse_form("dx + dx^dy", XY)


def test_form_round_trip():
    beta = parse_form("3 x^2 dx^dz - 1/2 y dy^dz + z dx^dy", XYZ)
    assert parse_form(format_form(beta, XYZ), XYZ) == beta


@settings(max_examples=100, deadline=None)
@given(polynomials(max_exponent=5, max_terms=6))
def test_print_then_parse(f):
    assert parse_poly(format_poly(f, XY), XY) == f


def test_constant_polynomial():
    assert parse_poly("7/3", XY) == Polynomial.constant(Fraction(7, 3), 2)
