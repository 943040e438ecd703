# -*- coding: utf-8 -*-

"""Polynomial differential forms, multivector fields and the twisted
differential d_f^(p).

A k-form is stored as a sparse map from strictly increasing index tuples
(i_1 < ... < i_k) to polynomial coefficients, the tuple standing for
dx_{i_1}∧...∧dx_{i_k}. Multivector fields use the same storage with
∂_{i_1}∧...∧∂_{i_k}.

Sign conventions
----------------
Contraction always goes into the first slot with alternating signs,

    i_{∂_j}(dx_{i_1}∧...∧dx_{i_k})
        = Σ_l (-1)^(l-1) δ_{j,i_l} dx_{i_1}∧..^..∧dx_{i_k}

and a multivector X_1∧...∧X_m contracts X_1 first, then X_2, and so on, so
that i_{∂x∧∂y}(dx∧dy) = 1. Covectors contract multivectors the same way.

Evaluating an r-form on r vector fields contracts them in order and divides by
r!, the normalization under which the Lie algebroid differential carries its
1/(r+1) factor.

Tensors of degree k > n exist only as zero. The operations below keep the
exact degree, so d of a top form is the zero (n+1)-form.
"""

from fractions import Fraction
import itertools
import logging
from math import factorial
from types import MappingProxyType

from .errors import ArityError, PairIdentityError, PreconditionError
from .polynomial import Polynomial, default_variable_names, weighted_degree

logger = logging.getLogger(__name__)


def merge_indices(first, second):
    """Concatenate two index tuples into sorted order.

    Returns
    -------
    (int, tuple) or None
        The sign of the sorting permutation and the merged tuple, or None if
        the tuples share an index.
    """
    if set(first) & set(second):
        return None
    inversions = sum(1 for i in first for j in second if i > j)
    sign = -1 if inversions % 2 else 1
    return sign, tuple(sorted(first + second))


def contract_indices(inner, outer):
    """Contract the basis elements of ``inner`` one after the other into the
    first slot of ``outer``.

    Returns
    -------
    (int, tuple) or None
        The sign and the remaining indices, or None if the contraction
        vanishes.
    """
    sign = 1
    remaining = list(outer)
    for j in inner:
        try:
            position = remaining.index(j)
        except ValueError:
            return None
        if position % 2:
            sign = -sign
        del remaining[position]
    return sign, tuple(remaining)


class AlternatingTensor:
    """Common storage and linear structure for forms and multivectors.

    Parameters
    ----------
    nvars : int
        The ambient number of variables n.
    degree : int
        The degree k >= 0. Only the zero tensor has k > n.
    components : dict(tuple -> Polynomial)
        The coefficients keyed by strictly increasing index tuples.
    """

    __slots__ = ("_nvars", "_degree", "_components", "_hash")

    symbol = "?"

    def __init__(self, nvars, degree, components=None):
        if degree < 0:
            raise PreconditionError(f"Degree {degree} is negative")
        self._nvars = nvars
        self._degree = degree
        self._hash = None
        data = {}
        if components is not None:
            for indices, coefficient in components.items():
                indices = tuple(indices)
                if len(indices) != degree:
                    raise PreconditionError(
                        f"Index tuple {indices} does not have length {degree}"
                    )
                if any(a >= b for a, b in zip(indices, indices[1:])):
                    raise PreconditionError(
                        f"Index tuple {indices} is not strictly increasing"
                    )
                if any(not 0 <= i < nvars for i in indices):
                    raise PreconditionError(f"Index out of range in {indices}")
                if not isinstance(coefficient, Polynomial):
                    coefficient = Polynomial.constant(coefficient, nvars)
                if coefficient.nvars != nvars:
                    raise ArityError(
                        f"Coefficient in {coefficient.nvars} variables for a "
                        f"tensor in {nvars}"
                    )
                if coefficient:
                    previous = data.get(indices, Polynomial.zero(nvars))
                    data[indices] = previous + coefficient
                    if not data[indices]:
                        del data[indices]
        self._components = data

    @classmethod
    def _raw(cls, nvars, degree, components):
        result = cls.__new__(cls)
        result._nvars = nvars
        result._degree = degree
        result._components = components
        result._hash = None
        return result

    @classmethod
    def zero(cls, nvars, degree):
        if degree < 0:
            raise PreconditionError(f"Degree {degree} is negative")
        return cls._raw(nvars, degree, {})

    @classmethod
    def basis(cls, nvars, indices, coefficient=None):
        """coefficient * e_{i_1}∧...∧e_{i_k} for increasing indices."""
        if coefficient is None:
            coefficient = Polynomial.one(nvars)
        return cls(nvars, len(indices), {tuple(indices): coefficient})

    @classmethod
    def from_function(cls, g):
        return cls(g.nvars, 0, {(): g})

    @classmethod
    def top(cls, g):
        """g times the top-degree basis element."""
        return cls(g.nvars, g.nvars, {tuple(range(g.nvars)): g})

    @classmethod
    def from_components(cls, coefficients):
        """A degree-one tensor from its list of coefficients."""
        nvars = len(coefficients)
        return cls(nvars, 1, {(i,): c for i, c in enumerate(coefficients)})

    @property
    def nvars(self):
        return self._nvars

    @property
    def degree(self):
        return self._degree

    @property
    def components(self):
        return MappingProxyType(self._components)

    def component(self, indices):
        return self._components.get(tuple(indices), Polynomial.zero(self._nvars))

    def coefficients(self):
        """The n coefficients of a degree-one tensor."""
        if self._degree != 1:
            raise PreconditionError("Only degree-one tensors have a coefficient list")
        return [self.component((i,)) for i in range(self._nvars)]

    @property
    def function(self):
        """The coefficient of a degree-zero tensor."""
        if self._degree != 0:
            raise PreconditionError(f"A degree {self._degree} tensor is not a function")
        return self.component(())

    @property
    def top_coefficient(self):
        if self._degree != self._nvars:
            raise PreconditionError("Not a top-degree tensor")
        return self.component(tuple(range(self._nvars)))

    def is_zero(self):
        return not self._components

    def __bool__(self):
        return bool(self._components)

    def _check(self, other):
        if type(other) is not type(self):
            raise TypeError(
                f"Cannot combine {type(self).__name__} and {type(other).__name__}"
            )
        if other._nvars != self._nvars:
            raise ArityError(
                f"Cannot combine tensors in {self._nvars} and {other._nvars} "
                "variables"
            )
        if other._degree != self._degree:
            raise PreconditionError(
                f"Cannot add tensors of degree {self._degree} and {other._degree}"
            )

    def __eq__(self, other):
        if not isinstance(other, AlternatingTensor):
            return NotImplemented
        return (
            type(self) is type(other)
            and self._nvars == other._nvars
            and self._degree == other._degree
            and self._components == other._components
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(
                (type(self).__name__, self._nvars, self._degree,
                 frozenset(self._components.items()))
            )
        return self._hash

    def __add__(self, other):
        self._check(other)
        data = dict(self._components)
        for indices, c in other._components.items():
            value = data[indices] + c if indices in data else c
            if value:
                data[indices] = value
            else:
                data.pop(indices, None)
        return type(self)._raw(self._nvars, self._degree, data)

    def __neg__(self):
        return type(self)._raw(
            self._nvars, self._degree, {i: -c for i, c in self._components.items()}
        )

    def __sub__(self, other):
        return self + (-other)

    def scale(self, factor):
        """Multiply every coefficient by a polynomial or a rational."""
        if not isinstance(factor, Polynomial):
            factor = Polynomial.constant(factor, self._nvars)
        elif factor.nvars != self._nvars:
            raise ArityError("Scaling factor lives in a different number of variables")
        data = {}
        for indices, c in self._components.items():
            value = c * factor
            if value:
                data[indices] = value
        return type(self)._raw(self._nvars, self._degree, data)

    def __mul__(self, factor):
        if isinstance(factor, AlternatingTensor):
            return NotImplemented
        return self.scale(factor)

    __rmul__ = __mul__

    def map_coefficients(self, fn):
        data = {}
        for indices, c in self._components.items():
            value = fn(c)
            if value:
                data[indices] = value
        return type(self)._raw(self._nvars, self._degree, data)

    def sorted_components(self):
        return sorted(self._components.items())

    def to_string(self, names=None):
        if names is None:
            names = default_variable_names(self._nvars)
        if not self._components:
            return "0"
        if self._degree == 0:
            return self.function.to_string(names)
        pieces = []
        for indices, c in self.sorted_components():
            basis = "^".join(self.symbol + names[i] for i in indices)
            if c == 1:
                text = basis
            elif c == -1:
                text = "-" + basis
            elif len(c) == 1:
                text = c.to_string(names) + "*" + basis
            else:
                text = "(" + c.to_string(names) + ")*" + basis
            pieces.append(text)
        return " + ".join(pieces).replace("+ -", "- ")

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        name = type(self).__name__
        return f"{name}({self._nvars}, {self._degree}, {self.to_string()!r})"


class DifferentialForm(AlternatingTensor):
    """A k-form with polynomial coefficients."""

    __slots__ = ()
    symbol = "d"

    @classmethod
    def volume(cls, nvars, coefficient=1):
        """ν = dx_1∧...∧dx_n, optionally scaled."""
        if not isinstance(coefficient, Polynomial):
            coefficient = Polynomial.constant(coefficient, nvars)
        return cls.top(coefficient)

    @classmethod
    def differential(cls, i, nvars):
        return cls.basis(nvars, (i,))


class MultiVector(AlternatingTensor):
    """A k-vector field with polynomial coefficients."""

    __slots__ = ()
    symbol = "∂"

    @classmethod
    def partial(cls, i, nvars):
        return cls.basis(nvars, (i,))

    @classmethod
    def euler_field(cls, W):
        """W = Σ w_i x_i ∂_i"""
        n = W.nvars
        return cls.from_components(
            [Polynomial.variable(i, n) * w for i, w in enumerate(W.weights)]
        )


def form_weighted_degrees(alpha, W):
    """The weighted degrees of the terms of a form, dx_i weighing w_i."""
    W.check_arity(alpha.nvars)
    return {
        weighted_degree(m, W) + sum(W.weights[i] for i in I)
        for I, c in alpha.components.items()
        for m in c.terms
    }


def graded_form_component(alpha, W, e):
    """The part of a form of weighted degree exactly e."""
    W.check_arity(alpha.nvars)
    data = {}
    for I, c in alpha.components.items():
        shift = sum(W.weights[i] for i in I)
        part = c.graded_component(W, e - shift)
        if part:
            data[I] = part
    return type(alpha)._raw(alpha.nvars, alpha.degree, data)


# Exterior algebra


def wedge(alpha, beta):
    """α∧β; zero when the degrees add up to more than n."""
    if type(alpha) is not type(beta):
        raise TypeError("Can only wedge tensors of the same kind")
    if alpha.nvars != beta.nvars:
        raise ArityError(
            f"Cannot wedge tensors in {alpha.nvars} and {beta.nvars} variables"
        )
    n = alpha.nvars
    degree = alpha.degree + beta.degree
    cls = type(alpha)
    if degree > n:
        return cls.zero(n, degree)
    data = {}
    for I, a in alpha.components.items():
        for J, b in beta.components.items():
            merged = merge_indices(I, J)
            if merged is None:
                continue
            sign, K = merged
            value = a * b
            if sign < 0:
                value = -value
            data[K] = data[K] + value if K in data else value
    return cls(n, degree, data)


def exterior_derivative(alpha):
    """dα"""
    n = alpha.nvars
    if alpha.degree >= n:
        return DifferentialForm.zero(n, alpha.degree + 1)
    data = {}
    for I, c in alpha.components.items():
        for j in range(n):
            if j in I:
                continue
            dc = c.partial(j)
            if not dc:
                continue
            sign, K = merge_indices((j,), I)
            if sign < 0:
                dc = -dc
            data[K] = data[K] + dc if K in data else dc
    return DifferentialForm(n, alpha.degree + 1, data)


def differential_of(g):
    """dg for a polynomial g."""
    return exterior_derivative(DifferentialForm.from_function(g))


def twisted_diff(f, p, alpha):
    """d_f^(p) α = f dα - (k - p) df∧α for a k-form α."""
    if f.nvars != alpha.nvars:
        raise ArityError(f"f has {f.nvars} variables but the form has {alpha.nvars}")
    k = alpha.degree
    n = alpha.nvars
    if k >= n:
        return DifferentialForm.zero(n, k + 1)
    result = exterior_derivative(alpha).scale(f)
    if k != p:
        result = result - wedge(differential_of(f), alpha).scale(k - p)
    return result


def interior_product(inner, outer):
    """Contract ``inner`` into ``outer``.

    A MultiVector contracts a DifferentialForm (i_X α) and a
    DifferentialForm contracts a MultiVector (i_β Λ). See the module
    docstring for the sign convention.
    """
    if isinstance(inner, MultiVector) and isinstance(outer, DifferentialForm):
        cls = DifferentialForm
    elif isinstance(inner, DifferentialForm) and isinstance(outer, MultiVector):
        cls = MultiVector
    else:
        raise TypeError(
            f"Cannot contract a {type(inner).__name__} into a {type(outer).__name__}"
        )
    if inner.nvars != outer.nvars:
        raise ArityError("Cannot contract tensors in different numbers of variables")
    if inner.degree > outer.degree:
        raise PreconditionError(
            f"Cannot contract degree {inner.degree} into degree {outer.degree}"
        )
    n = outer.nvars
    degree = outer.degree - inner.degree
    data = {}
    for J, a in inner.components.items():
        for I, b in outer.components.items():
            contracted = contract_indices(J, I)
            if contracted is None:
                continue
            sign, K = contracted
            value = a * b
            if sign < 0:
                value = -value
            data[K] = data[K] + value if K in data else value
    return cls(n, degree, data)


def pairing(Q, vectors):
    """Q(u_1, ..., u_r) with the 1/r! normalization."""
    if len(vectors) != Q.degree:
        raise PreconditionError(
            f"A {Q.degree}-form needs {Q.degree} arguments, got {len(vectors)}"
        )
    result = Q
    for u in vectors:
        result = interior_product(u, result)
    return result.function * Fraction(1, factorial(Q.degree))


# Vector fields


def directional_derivative(X, g):
    """X·g = Σ X^i ∂g/∂x_i"""
    result = Polynomial.zero(g.nvars)
    for (i,), c in X.components.items():
        result = result + c * g.partial(i)
    return result


def divergence(X):
    result = Polynomial.zero(X.nvars)
    for (i,), c in X.components.items():
        result = result + c.partial(i)
    return result


def lie_bracket(X, Y):
    """[X, Y]^j = X·Y^j - Y·X^j"""
    n = X.nvars
    return MultiVector.from_components(
        [
            directional_derivative(X, Y.component((j,)))
            - directional_derivative(Y, X.component((j,)))
            for j in range(n)
        ]
    )


def anchor(f, X):
    """ρ(X) = fX"""
    return X.scale(f)


def algebroid_bracket(f, X, Y):
    """⟦X, Y⟧ = f[X, Y] + (X·f)Y - (Y·f)X"""
    return (
        lie_bracket(X, Y).scale(f)
        + Y.scale(directional_derivative(X, f))
        - X.scale(directional_derivative(Y, f))
    )


def algebroid_differential(f, Q, args):
    """d_A Q(u_0, ..., u_r) for the algebroid with anchor fX.

    d_A Q(u_0..u_r) = 1/(r+1) [ Σ_k (-1)^k ρ(u_k)·Q(..û_k..)
                                + Σ_{k<l} (-1)^(k+l) Q(⟦u_k,u_l⟧, ..û_k..û_l..) ]
    """
    r = Q.degree
    if len(args) != r + 1:
        raise PreconditionError(f"d_A of a {r}-form needs {r + 1} arguments")
    total = Polynomial.zero(Q.nvars)
    for k, u in enumerate(args):
        rest = args[:k] + args[k + 1:]
        term = directional_derivative(anchor(f, u), pairing(Q, rest))
        total = total + (term if k % 2 == 0 else -term)
    for k, l in itertools.combinations(range(r + 1), 2):
        bracket = algebroid_bracket(f, args[k], args[l])
        rest = [bracket] + [u for i, u in enumerate(args) if i not in (k, l)]
        term = pairing(Q, rest)
        total = total + (term if (k + l) % 2 == 0 else -term)
    return total * Fraction(1, r + 1)


# Multivectors of top degree


def lie_derivative_top(X, Lambda):
    """𝓛_X Λ for a top multivector Λ = g ∂_1∧...∧∂_n.

    It is (X·g - g div X) ∂_1∧...∧∂_n.
    """
    if Lambda.degree != Lambda.nvars:
        raise PreconditionError("The Lie derivative is only implemented for top degree")
    g = Lambda.top_coefficient
    return MultiVector.top(directional_derivative(X, g) - g * divergence(X))


def hamiltonian_field(Lambda, functions):
    """X_{g_1..g_{n-1}} = i_{dg_1∧...∧dg_{n-1}} Λ"""
    n = Lambda.nvars
    if Lambda.degree != n:
        raise PreconditionError("Hamiltonian fields need a top-degree multivector")
    if len(functions) != n - 1:
        raise PreconditionError(f"Need {n - 1} functions, got {len(functions)}")
    beta = DifferentialForm.from_function(Polynomial.one(n))
    for g in functions:
        beta = wedge(beta, differential_of(g))
    if beta.degree != n - 1:
        return MultiVector.zero(n, 1)
    return interior_product(beta, Lambda)


def schouten_function(g, Pi):
    """[g, Π] = i_{dg} Π"""
    return interior_product(differential_of(g), Pi)


def schouten_vector(X, Lambda):
    """[X, Λ] for a top-degree Λ, the Lie derivative."""
    return lie_derivative_top(X, Lambda)


def _check_volume(nu):
    if not isinstance(nu, DifferentialForm) or nu.degree != nu.nvars:
        raise PreconditionError("The volume form must be a top-degree form")
    c = nu.top_coefficient
    if not c or not c.is_constant():
        raise PreconditionError(
            "The volume form must have a nonzero constant coefficient"
        )


def nambu_iso(nu, item):
    """Map vector fields to (n-1)-forms and top multivectors to n-forms.

    X ↦ -i_X ν and Γ ↦ (i_Γ ν) ν; functions map to themselves.
    """
    _check_volume(nu)
    if isinstance(item, Polynomial):
        return DifferentialForm.from_function(item)
    if not isinstance(item, MultiVector):
        raise TypeError(f"Cannot map a {type(item).__name__}")
    if item.degree == 0:
        return DifferentialForm.from_function(item.function)
    if item.degree == 1:
        return -interior_product(item, nu)
    if item.degree == nu.nvars:
        return nu.scale(interior_product(item, nu).function)
    raise PreconditionError(f"No chain map for degree {item.degree} multivectors")


def poisson_iso(nu, item):
    """The isomorphism φ from Poisson cochains to forms, n = 2 only."""
    if nu.nvars != 2:
        raise PreconditionError(
            f"The Poisson isomorphism needs dimension 2, not {nu.nvars}"
        )
    return nambu_iso(nu, item)


# Morphisms of pairs


def pullback(phi, omega):
    """φ*ω for a polynomial map given by the images of the target coordinates."""
    if len(phi) != omega.nvars:
        raise ArityError(
            f"The map has {len(phi)} components but the form lives in "
            f"{omega.nvars} variables"
        )
    m = phi[0].nvars
    result = DifferentialForm.zero(m, omega.degree)
    if omega.degree > m:
        return result
    differentials = [differential_of(component) for component in phi]
    for I, c in omega.components.items():
        term = DifferentialForm.from_function(c.compose(phi))
        for i in I:
            term = wedge(term, differentials[i])
        result = result + term
    return result


class MorphismOfPairs:
    """A morphism (φ, a) from (M, f) to (N, g) with g∘φ = a·f.

    Parameters
    ----------
    phi : [Polynomial]
        The images of the coordinates of N, polynomials on M.
    unit : Fraction
        The nonzero constant a.
    source : Polynomial
        f on M.
    target : Polynomial
        g on N.
    """

    def __init__(self, phi, unit, source, target):
        unit = Fraction(unit)
        if unit == 0:
            raise PreconditionError("The unit of a morphism of pairs must not vanish")
        phi = tuple(phi)
        if len(phi) != target.nvars:
            raise ArityError(
                f"The map has {len(phi)} components but g has {target.nvars} variables"
            )
        if any(c.nvars != source.nvars for c in phi):
            raise ArityError("The map components must be polynomials on the source")
        if target.compose(phi) != source * unit:
            raise PairIdentityError(
                f"g∘φ = {target.compose(phi)} is not {unit} * ({source})"
            )
        self.phi = phi
        self.unit = unit
        self.source = source
        self.target = target

    @classmethod
    def rescaling(cls, f, unit):
        """The identity map from (M, f) to (M, a·f)."""
        n = f.nvars
        phi = [Polynomial.variable(i, n) for i in range(n)]
        return cls(phi, unit, f, f * Fraction(unit))

    def __repr__(self):
        return f"MorphismOfPairs(phi={[str(c) for c in self.phi]}, a={self.unit})"


def morphism_pullback(Phi, omega):
    """Φ*ω = φ*ω / a^k"""
    k = omega.degree
    return pullback(Phi.phi, omega).scale(Fraction(1) / Phi.unit**k)
