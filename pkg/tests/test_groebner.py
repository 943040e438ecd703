#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Tests for the Gröbner bases and the Milnor algebra."""

import pytest
import sympy

from twisted_cohomology import (
    MonomialOrder,
    NotIsolatedSingularityError,
    NotQuasiHomogeneousError,
    Polynomial,
    PreconditionError,
    WeightSystem,
    buchberger,
    format_poly,
    milnor_data,
    normal_form_poly,
    poincare_series_product,
)
from twisted_cohomology.groebner import (
    is_groebner,
    principal_quotient_dims,
    series_coefficients,
)

from .conftest import XY, XYZ, poly

IDEALS = [
    ["x^2 + y", "x*y - 1"],
    ["x^3 - 2*x*y", "x^2*y - 2*y^2 + x"],
    ["3*x^2", "3*y^2"],
    ["x^2 - y^3", "x*y^2 - x"],
]


def to_sympy(p, names=XY):
    return sympy.expand(sympy.sympify(format_poly(p, names).replace("^", "**")))


@pytest.mark.parametrize("order", ["grevlex", "lex"])
@pytest.mark.parametrize("generators", IDEALS)
def test_reduced_basis_matches_sympy(generators, order):
    gens = [poly(g) for g in generators]
    gb = buchberger(gens, MonomialOrder(order))
    x, y = sympy.symbols("x y")
    expected = sympy.groebner(
        [to_sympy(g) for g in gens], x, y, order=order, domain="QQ"
    )
    assert {to_sympy(g) for g in gb.generators} == set(expected.exprs)
    assert is_groebner(list(gb.generators), gb.order)


def test_membership():
    gb = buchberger([poly("x^2 + y"), poly("x*y - 1")])
    assert gb.contains(poly("x^2 + y") * poly("x - 3*y"))
    assert not gb.contains(poly("x"))
    assert gb.contains(Polynomial.zero(2))


def test_unit_ideal():
    gb = buchberger([poly("x + 1"), poly("x")])
    assert gb.is_unit()


def test_normal_form_is_idempotent():
    gb = buchberger([poly("x^2 - y^3"), poly("x*y^2 - x")])
    g = poly("x^4*y + 7*x*y^3 - y^5 + 2")
    r = normal_form_poly(g, gb)
    assert normal_form_poly(r, gb) == r
    assert gb.contains(g - r)
    assert all(gb.is_standard(m) for m in r.terms)


def test_unknown_order():
    with pytest.raises(ValueError):
        MonomialOrder("revlex")
    with pytest.raises(ValueError):
        MonomialOrder("wgrevlex")


def test_milnor_data_of_cubic(cubic2, W2):
    data = milnor_data(cubic2, W2)
    assert data.N == 3
    assert data.milnor_number == 4
    assert data.basis_strings(XY) == ["1", "x", "y", "x*y"]
    assert data.graded_dims == {0: 1, 1: 2, 2: 1}
    assert data.hodge == {0: 0, 1: 2, 2: 0}
    results = data.to_dict(XY)
    assert results["order"] == "wgrevlex(1, 1)"
    assert results["jacobian_groebner_basis"] == ["x^2", "y^2"]


def test_milnor_data_of_cusp(cusp):
    f, W = cusp
    data = milnor_data(f, W)
    assert data.N == 6
    assert data.milnor_number == 2
    assert data.basis_strings(XY) == ["1", "y"]
    assert data.basis_of_degree(2) == [(0, 1)]


def test_milnor_number_is_product_formula(cubic3, W3):
    # μ = ∏ (N - w_i) / w_i
    data = milnor_data(cubic3, W3)
    assert data.milnor_number == 8
    assert data.hodge == {0: 0, 1: 1, 2: 1, 3: 0}
    assert data.graded_dims == {0: 1, 1: 3, 2: 3, 3: 1}


def test_regular_at_origin():
    data = milnor_data(poly("x + y^2"), WeightSystem((2, 1)))
    assert data.milnor_number == 0
    assert data.basis_B == []
    assert data.jacobian_gb.is_unit()


def test_not_isolated():
    with pytest.raises(NotIsolatedSingularityError):
        milnor_data(poly("x^2*y"), WeightSystem((1, 1)))


def test_not_quasi_homogeneous():
    with pytest.raises(NotQuasiHomogeneousError):
        milnor_data(poly("x^3 + y^2"), WeightSystem((1, 1)))


def test_declared_degree_must_match():
    W = WeightSystem((1, 1), degree_hint=4)
    with pytest.raises(NotQuasiHomogeneousError):
        milnor_data(poly("x^3 + y^3"), W)


@pytest.mark.parametrize(
    "weights, N, expected",
    [
        ((1, 1), 3, [1, 2, 1]),
        ((1, 1), 2, [1]),
        ((3, 2), 6, [1, 0, 1]),
        ((1, 1, 1), 3, [1, 3, 3, 1]),
    ],
)
def test_poincare_product(weights, N, expected):
    series = poincare_series_product(WeightSystem(weights), N)
    assert series_coefficients(series) == expected


def test_poincare_product_agrees_with_milnor_algebra(cusp):
    f, W = cusp
    data = milnor_data(f, W)
    series = series_coefficients(poincare_series_product(W, data.N))
    assert sum(series) == data.milnor_number
    for d, value in enumerate(series):
        assert data.graded_dims.get(d, 0) == value


def test_poincare_product_needs_large_degree():
    with pytest.raises(PreconditionError):
        poincare_series_product(WeightSystem((2, 1)), 2)


def test_principal_quotient(quadric2, W2):
    assert principal_quotient_dims(quadric2, W2, 5) == [1, 2, 2, 2, 2, 2]
    f = poly("x^3 + y^3 + z^3", XYZ)
    assert principal_quotient_dims(f, WeightSystem((1, 1, 1)), 4) == [1, 3, 6, 9, 12]
