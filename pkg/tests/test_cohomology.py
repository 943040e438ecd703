#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Tests for the graded cohomology of the twisted complex."""

import pytest

from twisted_cohomology import (
    DifferentialForm,
    NotQuasiHomogeneousError,
    PreconditionError,
    WeightSystem,
    complex_slice,
    germ_quotient_probe,
    graded_cohomology_dim,
    h0_dimension,
    milnor_data,
    normal_form_nform,
    regular_case_predictor,
    table1_prediction,
    table1_report,
    total_dims,
    twisted_diff,
)
from twisted_cohomology.cohomology import (
    INFINITE,
    UNKNOWN,
    NormalFormResult,
    graded_basis,
)
from twisted_cohomology.verify import brute_force_dim

from .conftest import XY, XYZ, poly


def test_graded_basis():
    W = WeightSystem((1, 1))
    assert {I for _, I in graded_basis(2, 1, W, 1)} == {(0,), (1,)}
    assert graded_basis(2, 2, W, 2) == [((0, 0), (0, 1))]
    assert {m for m, _ in graded_basis(2, 0, WeightSystem((1, 2)), 2)} == {
        (2, 0),
        (0, 1),
    }
    assert graded_basis(2, 3, W, 4) == []
    assert graded_basis(2, 1, W, -1) == []


def test_slices_of_the_quadric(quadric2, W2):
    s = complex_slice(quadric2, W2, 0, 0, 0)
    assert s.matrix.shape == (4, 1)
    assert s.rank == 0
    s = complex_slice(quadric2, W2, 0, 0, 1)
    assert s.rank == 2
    assert s.kernel_dim == 0
    s = complex_slice(quadric2, W2, 2, 2, 2)
    assert s.matrix.is_zero()


def test_slice_columns_are_images(cubic2, W2):
    s = complex_slice(cubic2, W2, 1, 1, 2)
    index = s.codomain_index()
    for j, (m, I) in enumerate(s.domain_basis):
        alpha = s.form({j: 1})
        image = twisted_diff(cubic2, 1, alpha)
        for (exponents, indices), i in index.items():
            coefficient = image.component(indices).coefficient(exponents)
            assert s.matrix.entry(i, j) == coefficient


@pytest.mark.parametrize("p", [-1, 0, 1, 2])
@pytest.mark.parametrize("k", [0, 1])
def test_composition_is_zero(cusp, p, k):
    f, W = cusp
    for d in range(0, 10):
        first = complex_slice(f, W, p, k, d)
        second = complex_slice(f, W, p, k + 1, d + 6)
        assert (second.matrix @ first.matrix).is_zero()
        assert first.rank + first.kernel_dim == len(first.domain_basis)


def test_kernel_forms_are_cocycles(cubic2, W2):
    s = complex_slice(cubic2, W2, 0, 1, 4)
    for alpha in s.kernel():
        assert twisted_diff(cubic2, 0, alpha).is_zero()


def test_not_quasi_homogeneous(W2):
    with pytest.raises(NotQuasiHomogeneousError):
        complex_slice(poly("x^2 + y^3"), W2, 0, 0, 0)


@pytest.mark.parametrize("p", [-1, 0, 1, 2])
@pytest.mark.parametrize("k", [0, 1, 2])
def test_dimensions_against_dense_elimination(cubic2, W2, p, k):
    for d in range(0, 7):
        expected = brute_force_dim(cubic2, W2, p, k, d, 3)
        assert graded_cohomology_dim(cubic2, W2, p, k, d) == expected


def test_graded_dimensions(quadric2, W2):
    assert graded_cohomology_dim(quadric2, W2, 0, 0, 0) == 1
    assert all(graded_cohomology_dim(quadric2, W2, 1, 0, d) == 0 for d in range(8))
    total = sum(graded_cohomology_dim(quadric2, W2, 2, 2, d) for d in range(9))
    assert total == 1


def test_total_dims(cubic2, W2):
    report = total_dims(cubic2, W2, 0, 2, 12)
    assert report.total == 6
    assert report.stabilized
    assert list(report.cumulative.values()) == sorted(report.cumulative.values())
    assert report.to_dict(XY)["per_degree"]["2"] == report.per_degree[2]
    frame = report.to_dataframe()
    assert list(frame.columns) == ["weight", "dim", "cumulative"]


def test_total_dims_of_the_cone(W3):
    f = poly("x^2 + y^2 + z^2", XYZ)
    assert total_dims(f, W3, 0, 2, 10).total == 0
    assert total_dims(f, W3, 0, 0, 10).total == 1


def test_total_dims_threads(cubic2, W2):
    serial = total_dims(cubic2, W2, 1, 1, 9)
    threaded = total_dims(cubic2, W2, 1, 1, 9, threads=3)
    assert serial.per_degree == threaded.per_degree


def test_total_dims_needs_a_window(cubic2, W2):
    with pytest.raises(PreconditionError):
        total_dims(cubic2, W2, 0, 0, -1)


def test_infinite_evidence(quadric2, W2):
    # H^2 at p = n - 1 is the principal quotient Q[x,y]/(f), shifted by dx^dy
    report = total_dims(quadric2, W2, 1, 2, 10)
    assert not report.stabilized
    assert report.consistent_with_infinite()
    assert [report.per_degree[d] for d in range(5)] == [0, 0, 1, 2, 2]
    report = total_dims(quadric2, W2, 3, 1, 10)
    assert report.total == 0
    assert not report.consistent_with_infinite()


def test_graded_h1_of_the_plane_is_finite(quadric2, W2):
    # the graded Euler characteristic vanishes in every weight
    report = total_dims(quadric2, W2, 0, 1, 10)
    assert report.per_degree[2] == 2
    assert report.total == 2
    assert report.stabilized
    assert not report.consistent_with_infinite()


def test_table1_predictions(cubic2, W2):
    data = milnor_data(cubic2, W2)
    assert table1_prediction(data, 0) == (INFINITE, 6)
    assert table1_prediction(data, 1) == (UNKNOWN, INFINITE)
    assert table1_prediction(data, 2) == (0, 4)
    assert table1_prediction(data, -1) == (None, None)
    assert table1_prediction(data, 3) == (0, 4)
    data = milnor_data(poly("x^3 + y^3 + z^3", XYZ), WeightSystem((1, 1, 1)))
    assert table1_prediction(data, 0) == (2, 10)
    assert table1_prediction(data, 1) == (INFINITE, 9)
    assert table1_prediction(data, 2) == (UNKNOWN, INFINITE)
    assert table1_prediction(data, 3) == (0, 8)
    assert table1_prediction(data, 4) == (0, 8)


def test_table1_predictions_for_the_weighted_cusp():
    data = milnor_data(poly("x^2 + y^3"), WeightSystem((3, 2)))
    assert data.milnor_number == 2
    assert data.hodge == {0: 0, 1: 0, 2: 0}
    assert table1_prediction(data, 0) == (INFINITE, 2)
    assert table1_prediction(data, 1) == (UNKNOWN, INFINITE)
    assert table1_prediction(data, 2) == (0, 2)
    assert table1_prediction(data, 3) == (0, 2)


@pytest.mark.parametrize(
    "text, names, weights",
    [
        ("x^3 + y^3", XY, (1, 1)),
        ("x^2 + y^3", XY, (3, 2)),
        ("x^3 + y^3 + z^3", XYZ, (1, 1, 1)),
    ],
)
def test_table1_finite_rows(text, names, weights):
    f, W = poly(text, names), WeightSystem(weights)
    data = milnor_data(f, W)
    n = f.nvars
    report = table1_report(f, W, range(0, n + 2), 3 * data.N + W.total)
    assert report.agrees
    for row in report.rows:
        predicted = table1_prediction(data, row.p)
        assert (row.predicted_top_minus_one, row.predicted_top) == predicted
        if isinstance(predicted[1], int):
            assert row.computed_top.total == predicted[1]
        if isinstance(predicted[0], int):
            assert row.computed_top_minus_one.total == predicted[0]


def test_table1_for_the_quadric(quadric2, W2):
    report = table1_report(quadric2, W2, range(0, 4), 10)
    assert report.agrees
    rows = {row.p: row for row in report.rows}
    assert rows[0].computed_top.total == 2
    assert rows[3].computed_top_minus_one.total == 0
    assert rows[3].computed_top.total == 1
    assert rows[1].agrees_top_minus_one is None
    results = report.to_dict(XY)
    assert results["rows"][1]["predicted"] == ["unknown (?)", INFINITE]
    assert list(report.to_dataframe()["p"]) == [0, 1, 2, 3]


def test_table1_for_the_cone(W3):
    f = poly("x^2 + y^2 + z^2", XYZ)
    report = table1_report(f, W3, [0], 10)
    row = report.rows[0]
    assert row.computed_top_minus_one.total == 0
    assert row.computed_top.total == 1
    assert report.agrees


@pytest.mark.parametrize("p", [-2, -1, 0])
def test_h0_is_spanned_by_a_power_of_f(quadric2, W2, p):
    report = h0_dimension(quadric2, W2, p, 8)
    assert report.dimension == 1
    assert report.generator == quadric2 ** (-p)
    assert report.agrees


def test_h0_vanishes_for_positive_twist(cusp):
    f, W = cusp
    report = h0_dimension(f, W, 1, 20)
    assert report.dimension == 0
    assert report.generator is None
    assert report.agrees


def test_h0_outside_the_window(quadric2, W2):
    report = h0_dimension(quadric2, W2, -2, 3)
    assert report.dimension == 0
    assert report.expected == 0


def test_normal_form_of_the_volume(quadric2, W2):
    nu = DifferentialForm.volume(2)
    result = normal_form_nform(quadric2, W2, 0, nu)
    assert result.h[1] == poly("1")
    assert result.h[0].is_zero()
    assert result.witness.is_zero()


def test_normal_form_of_a_basis_monomial(cubic2, W2):
    eta = DifferentialForm.volume(2, poly("x"))
    result = normal_form_nform(cubic2, W2, 0, eta)
    assert result.h == [poly("0"), poly("x")]
    assert result.representative() == eta


def test_normal_form_of_a_coboundary(cubic2, W2):
    gamma = DifferentialForm(2, 1, {(0,): poly("x*y"), (1,): poly("x^2")})
    eta = twisted_diff(cubic2, 0, gamma)
    result = normal_form_nform(cubic2, W2, 0, eta)
    assert all(h.is_zero() for h in result.h)
    assert twisted_diff(cubic2, 0, result.witness) == eta


def test_normal_form_is_unique(cubic3, W3):
    eta = DifferentialForm.volume(3, poly("x^4*y + 3*z^3 + x*y*z + 2", XYZ))
    result = normal_form_nform(cubic3, W3, 0, eta)
    assert eta - result.representative() == twisted_diff(cubic3, 0, result.witness)
    gamma = DifferentialForm(3, 2, {(0, 1): poly("z^2", XYZ)})
    shifted = normal_form_nform(cubic3, W3, 0, eta + twisted_diff(cubic3, 0, gamma))
    assert shifted.h == result.h
    again = normal_form_nform(cubic3, W3, 0, result.representative())
    assert again.h == result.h
    assert again.witness.is_zero()


def test_h1_carries_one_power_of_f_less(cubic3, W3):
    zero = poly("0", XYZ)
    result = NormalFormResult(
        cubic3, W3, 0, [poly("1", XYZ), zero, zero], DifferentialForm.zero(3, 2)
    )
    # weight 2N + Σw = (n - p)N, the weight of η
    assert result.representative() == DifferentialForm.volume(3, cubic3**2)


def test_normal_form_preconditions(cubic2, W2):
    with pytest.raises(PreconditionError):
        normal_form_nform(cubic2, W2, 1, DifferentialForm.volume(2))
    with pytest.raises(PreconditionError):
        normal_form_nform(cubic2, W2, 0, DifferentialForm.differential(0, 2))


@pytest.mark.parametrize(
    "betti_M, betti_S, expected",
    [
        # the open ball and its boundary sphere
        ([1, 0, 0, 0], [1, 0, 1], [1, 1, 0, 1]),
        # the sphere and its equator
        ([1, 0, 1], [1, 1], [1, 1, 2]),
        # a torus cut along one circle
        ([1, 2, 1], [1, 1], [1, 3, 2]),
    ],
)
def test_regular_case_predictor(betti_M, betti_S, expected):
    assert regular_case_predictor(betti_M, betti_S) == expected


def test_regular_case_predictor_rejects_negative_betti_numbers():
    with pytest.raises(PreconditionError):
        regular_case_predictor([1, -1], [1])


def test_germ_quotient_probe(quadric2, W2):
    assert germ_quotient_probe(quadric2, W2, 5) == [1, 2, 2, 2, 2, 2]
    assert germ_quotient_probe(poly("x"), W2, 4) == [1, 1, 1, 1, 1]
    assert germ_quotient_probe(quadric2, W2, 0) == [1]
    with pytest.raises(PreconditionError):
        germ_quotient_probe(poly("3"), W2, 4)
