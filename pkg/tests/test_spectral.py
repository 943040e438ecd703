#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Tests for meromorphic forms and the degeneration checks."""

from hypothesis import given, settings, strategies as st
import pytest

from twisted_cohomology import (
    DifferentialForm,
    MeromorphicForm,
    MultiVector,
    PreconditionError,
    WeightSystem,
    e2_degeneration_check,
    interior_product,
    jacobian_membership_check,
    meromorphic_d,
    parse_form,
    primitive_lemma_check,
    projective_degeneration_check,
    singular_to_twisted,
    twisted_diff,
)
from twisted_cohomology.spectral import (
    divides_form,
    euler_identity_residual,
    euler_primitive_basis,
    is_primitive,
    quotient_rule_numerator,
    verify_witness,
)

from .conftest import XY, XYZ, forms, poly


def form(text, names=XY):
    return parse_form(text, names)


def test_canonical_representative(quadric2):
    omega = MeromorphicForm(form("x dx").scale(quadric2 * quadric2), 3, quadric2)
    assert omega.pole_order == 1
    assert omega.numerator == form("x dx")
    assert omega == MeromorphicForm(form("x dx"), 1, quadric2)
    zero = MeromorphicForm(DifferentialForm.zero(2, 1), 4, quadric2)
    assert zero.pole_order == 0
    assert omega.to_string(XY) == "(x*dx)/(x^2 + y^2)"


def test_meromorphic_preconditions(quadric2):
    with pytest.raises(PreconditionError):
        MeromorphicForm(form("dx"), -1, quadric2)
    with pytest.raises(PreconditionError):
        MeromorphicForm(form("dx"), 1, poly("2"))
    omega = MeromorphicForm(form("dx"), 1, quadric2)
    with pytest.raises(PreconditionError):
        meromorphic_d(omega, quadric2, 1)
    with pytest.raises(PreconditionError):
        meromorphic_d(omega, poly("x^2 - y^2"), 0)


def test_derivative_of_dx_over_f(quadric2):
    omega = MeromorphicForm(form("dx"), 1, quadric2)
    d_omega = meromorphic_d(omega, quadric2, 0)
    assert d_omega.numerator == form("2y dx^dy")
    assert d_omega.pole_order == 2


def test_holomorphic_forms_lose_the_pole(quadric2):
    alpha = form("x^2 y dy")
    d_alpha = meromorphic_d(MeromorphicForm(alpha, 0, quadric2), quadric2, 1)
    assert d_alpha.pole_order == 0
    assert d_alpha.numerator == form("2x y dx^dy")


@settings(max_examples=30, deadline=None)
@given(forms(2, 0), st.integers(0, 3))
def test_d_squared_is_zero_with_poles(alpha, s):
    f = poly("x^3 + x*y")
    omega = MeromorphicForm(alpha, s, f)
    once = meromorphic_d(omega, f, omega.filtration_twist)
    twice = meromorphic_d(once, f, once.filtration_twist)
    assert twice.numerator.is_zero()


@settings(max_examples=30, deadline=None)
@given(forms(2, 1), st.integers(0, 1))
def test_singular_forms_are_a_chain_map(alpha, s):
    f = poly("x^2 - y^3")
    omega = MeromorphicForm(alpha, s, f)
    d_omega = meromorphic_d(omega, f, omega.filtration_twist)
    assert singular_to_twisted(d_omega) == twisted_diff(
        f, 0, singular_to_twisted(omega)
    )
    assert quotient_rule_numerator(omega) == twisted_diff(
        f, omega.filtration_twist, omega.numerator
    )


def test_singular_forms_need_small_pole_order(quadric2):
    with pytest.raises(PreconditionError):
        singular_to_twisted(MeromorphicForm(form("dx"), 2, quadric2))


def test_divisibility(quadric2):
    alpha = form("x dy").scale(quadric2 * quadric2)
    assert divides_form(quadric2, alpha, times=2)
    assert not divides_form(quadric2, alpha, times=3)


@pytest.mark.parametrize(
    "text, names, weights, D",
    [
        ("x^2 + y^2", XY, (1, 1), 10),
        ("x^3 + y^3", XY, (1, 1), 12),
        ("x^2 + y^3", XY, (3, 2), None),
    ],
)
def test_e2_degeneration(text, names, weights, D):
    f = poly(text, names)
    report = e2_degeneration_check(f, WeightSystem(weights), 0, 1, D)
    assert report.passed
    assert all(w is None for w in report.witnesses)
    assert report.to_dict(names)["passed"]
    assert len(report.to_dataframe()) == len(report.degrees)


def test_e2_degeneration_in_three_variables(cubic3, W3):
    for q in (1, 2):
        report = e2_degeneration_check(cubic3, W3, 2 - q, q, D=7)
        assert report.passed


def test_e2_preconditions(quadric2, W2):
    with pytest.raises(PreconditionError):
        e2_degeneration_check(quadric2, W2, 1, 0)
    with pytest.raises(PreconditionError):
        e2_degeneration_check(quadric2, W2, 0, 2)


def test_witnesses_are_verifiable(quadric2):
    alpha = form("dx").scale(quadric2 * quadric2)
    assert verify_witness(quadric2, 0, alpha)
    beta = form("x dy - y dx").scale(quadric2) + form("dx")
    assert not verify_witness(quadric2, 0, beta)


def test_euler_primitive_basis(W2, W3):
    assert euler_primitive_basis(2, 2, W2, 4) == []
    assert euler_primitive_basis(2, 1, W2, 1) == []
    functions = euler_primitive_basis(2, 0, W2, 3)
    assert len(functions) == 4
    basis = euler_primitive_basis(3, 2, W3, 3)
    assert len(basis) == 1
    assert all(is_primitive(alpha, W3) for alpha in basis)


def test_sigma_multiples_are_primitive(cubic3, W3):
    E = MultiVector.euler_field(W3)
    sigma = interior_product(E, DifferentialForm.volume(3, poly("x*y*z", XYZ)))
    assert is_primitive(sigma, W3)
    assert interior_product(E, sigma).is_zero()


def test_projective_degeneration(cubic3, W3):
    report = projective_degeneration_check(cubic3, W3, 0, 2)
    assert report.passed
    assert report.projective
    assert report.degrees == [6]
    for k in (1, 2):
        for q in range(1, k + 1):
            assert projective_degeneration_check(cubic3, W3, k - q, q).passed


def test_projective_degeneration_of_one_form(cubic3, W3):
    E = MultiVector.euler_field(W3)
    g = poly("x^3 - y*z^2", XYZ)
    sigma = interior_product(E, DifferentialForm.volume(3, g))
    report = projective_degeneration_check(cubic3, W3, 0, 2, sigma)
    assert report.passed
    assert len(report.z_dims) == 1
    with pytest.raises(PreconditionError):
        projective_degeneration_check(
            cubic3, W3, 0, 2, parse_form("x^2 y^2 dx^dy", XYZ)
        )
    with pytest.raises(PreconditionError):
        projective_degeneration_check(cubic3, W3, 0, 2, parse_form("dx^dy", XYZ))


def test_projective_preconditions(cubic3, W3):
    with pytest.raises(PreconditionError):
        projective_degeneration_check(cubic3, W3, 1, 0)
    with pytest.raises(PreconditionError):
        projective_degeneration_check(cubic3, W3, 1, 2)


@pytest.mark.parametrize("p", [-1, 0, 1, 2])
def test_euler_identity(cubic3, W3, p):
    for text in ("x^2 y dz", "y dx^dz + x dy^dz", "x*y*z", "z^2 dx^dy^dz"):
        alpha = parse_form(text, XYZ)
        assert euler_identity_residual(cubic3, W3, p, alpha).is_zero()


def test_euler_identity_needs_a_single_weight(cubic3, W3):
    with pytest.raises(PreconditionError):
        euler_identity_residual(cubic3, W3, 0, parse_form("x dy + dz", XYZ))


def test_jacobian_membership(cubic3, W3):
    for text in ("x dy^dz", "y^2 z dx^dz + z dx^dy", "x^4 dy^dz"):
        zeta = parse_form(text, XYZ)
        for p in range(-1, 3):
            assert jacobian_membership_check(cubic3, W3, p, zeta)
    with pytest.raises(PreconditionError):
        jacobian_membership_check(cubic3, W3, 0, parse_form("dx", XYZ))


@pytest.mark.parametrize("text", ["x*y*z", "x^3", "x^2*y - z^3", "0"])
def test_primitive_lemma(cubic3, W3, text):
    in_sigma, in_nu = primitive_lemma_check(cubic3, W3, 0, poly(text, XYZ))
    assert in_sigma == in_nu


def test_primitive_lemma_degree(cubic3, W3):
    with pytest.raises(PreconditionError):
        primitive_lemma_check(cubic3, W3, 0, poly("x", XYZ))
