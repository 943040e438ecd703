# -*- coding: utf-8 -*-

"""Exact sparse multivariate polynomials over the rationals.

Polynomials are immutable maps from exponent tuples (monomials) to
``fractions.Fraction`` coefficients. Zero coefficients are never stored and
every monomial has exactly ``nvars`` entries. Gradings are given by a
:class:`WeightSystem`, the weight of ``x_i`` being ``w_i``.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
import logging
from types import MappingProxyType
from typing import Optional, Tuple

from .errors import ArityError, PreconditionError

logger = logging.getLogger(__name__)

Monomial = Tuple[int, ...]

DEFAULT_NAMES = ("x", "y", "z", "w")


def default_variable_names(nvars):
    """x, y, z, w for up to four variables, x1...xn otherwise."""
    if nvars <= len(DEFAULT_NAMES):
        return list(DEFAULT_NAMES[:nvars])
    return [f"x{i + 1}" for i in range(nvars)]


def grevlex_key(m):
    """Sort key for graded reverse lexicographic order; larger is bigger."""
    return (sum(m), tuple(-e for e in reversed(m)))


def monomial_divides(a, b):
    """Whether the monomial a divides the monomial b."""
    return all(x <= y for x, y in zip(a, b))


def monomial_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def monomial_div(a, b):
    """a / b, assuming b divides a."""
    return tuple(x - y for x, y in zip(a, b))


def monomial_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


@dataclass(frozen=True)
class WeightSystem:
    """Positive integer weights w_1..w_n with an optional degree N.

    Parameters
    ----------
    weights : tuple of int
        The weight of each variable.
    degree_hint : int, optional
        The expected quasi-homogeneity degree N.
    """

    weights: Tuple[int, ...]
    degree_hint: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        if len(self.weights) == 0:
            raise PreconditionError("A weight system needs at least one weight.")
        if any(w < 1 for w in self.weights):
            raise PreconditionError(f"Weights must be positive: {self.weights}")
        if self.degree_hint is not None and self.degree_hint < 1:
            raise PreconditionError(
                f"The degree must be positive, not {self.degree_hint}"
            )

    @classmethod
    def standard(cls, nvars):
        """All weights equal to one."""
        return cls((1,) * nvars)

    @property
    def nvars(self):
        return len(self.weights)

    @property
    def total(self):
        """Σ w_i, the weight of the volume form."""
        return sum(self.weights)

    def check_arity(self, nvars):
        if nvars != self.nvars:
            raise ArityError(
                f"The weight system has {self.nvars} weights but there are "
                f"{nvars} variables."
            )


def weighted_degree(m, W):
    """Σ w_i e_i for the monomial m."""
    if len(m) != len(W.weights):
        raise ArityError(f"Monomial {m} does not match the weights {W.weights}")
    return sum(w * e for w, e in zip(W.weights, m))


@lru_cache(maxsize=4096)
def _monomials_of_weighted_degree(weights, d):
    if d < 0:
        return ()
    if len(weights) == 1:
        w = weights[0]
        return ((d // w,),) if d % w == 0 else ()
    result = []
    w = weights[0]
    for e in range(d // w + 1):
        for rest in _monomials_of_weighted_degree(weights[1:], d - w * e):
            result.append((e,) + rest)
    return tuple(result)


def monomials_of_weighted_degree(W, d):
    """All monomials of weighted degree exactly d, in descending grevlex order."""
    result = _monomials_of_weighted_degree(W.weights, d)
    return sorted(result, key=grevlex_key, reverse=True)


def _to_fraction(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"Coefficients must be exact rationals, not {type(value)}")


class Polynomial:
    """An immutable sparse polynomial with rational coefficients.

    Parameters
    ----------
    nvars : int
        The number of variables.
    terms : dict(tuple -> Fraction), optional
        The terms, keyed by exponent tuples.
    """

    __slots__ = ("_nvars", "_terms", "_hash")

    def __init__(self, nvars, terms=None):
        if nvars < 1:
            raise ArityError(f"A polynomial needs at least one variable, not {nvars}")
        self._nvars = nvars
        self._hash = None
        data = {}
        if terms is not None:
            for m, c in terms.items():
                m = tuple(m)
                if len(m) != nvars:
                    raise ArityError(
                        f"Monomial {m} does not have {nvars} exponents."
                    )
                if any(e < 0 for e in m):
                    raise ValueError(f"Negative exponent in {m}")
                c = _to_fraction(c)
                if c != 0:
                    data[m] = data.get(m, 0) + c
                    if data[m] == 0:
                        del data[m]
        self._terms = data

    @classmethod
    def _raw(cls, nvars, terms):
        """Wrap an already clean dictionary without copying or checking."""
        result = cls.__new__(cls)
        result._nvars = nvars
        result._terms = terms
        result._hash = None
        return result

    @classmethod
    def zero(cls, nvars):
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, value, nvars):
        value = _to_fraction(value)
        if value == 0:
            return cls.zero(nvars)
        return cls._raw(nvars, {(0,) * nvars: value})

    @classmethod
    def one(cls, nvars):
        return cls.constant(1, nvars)

    @classmethod
    def variable(cls, i, nvars):
        m = [0] * nvars
        m[i] = 1
        return cls._raw(nvars, {tuple(m): Fraction(1)})

    @classmethod
    def from_monomial(cls, m, coefficient=1):
        return cls(len(m), {tuple(m): coefficient})

    @property
    def nvars(self):
        return self._nvars

    @property
    def terms(self):
        """A read-only view of the terms."""
        return MappingProxyType(self._terms)

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def coefficient(self, m):
        return self._terms.get(tuple(m), Fraction(0))

    def sorted_terms(self):
        """The terms in descending grevlex order."""
        return sorted(
            self._terms.items(), key=lambda t: grevlex_key(t[0]), reverse=True
        )

    def is_constant(self):
        return not self._terms or list(self._terms) == [(0,) * self._nvars]

    @property
    def constant_term(self):
        return self._terms.get((0,) * self._nvars, Fraction(0))

    def total_degree(self):
        """The ordinary degree, -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(sum(m) for m in self._terms)

    def weighted_degrees(self, W):
        """The set of weighted degrees of the terms."""
        return {weighted_degree(m, W) for m in self._terms}

    # Arithmetic

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other._nvars != self._nvars:
                raise ArityError(
                    f"Cannot combine polynomials in {self._nvars} and "
                    f"{other._nvars} variables."
                )
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other, self._nvars)
        return NotImplemented

    def __eq__(self, other):
        other = self._coerce(other) if not isinstance(other, Polynomial) else other
        if other is NotImplemented:
            return NotImplemented
        return self._nvars == other._nvars and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._nvars, frozenset(self._terms.items())))
        return self._hash

    def __neg__(self):
        return Polynomial._raw(self._nvars, {m: -c for m, c in self._terms.items()})

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        data = dict(self._terms)
        for m, c in other._terms.items():
            value = data.get(m, 0) + c
            if value == 0:
                data.pop(m, None)
            else:
                data[m] = value
        return Polynomial._raw(self._nvars, data)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def scale(self, c):
        c = _to_fraction(c)
        if c == 0:
            return Polynomial.zero(self._nvars)
        return Polynomial._raw(self._nvars, {m: c * v for m, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        data = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                data[m] = data.get(m, 0) + c1 * c2
        return Polynomial._raw(
            self._nvars, {m: c for m, c in data.items() if c != 0}
        )

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(
                f"Polynomial powers must be non-negative integers: {exponent}"
            )
        result = Polynomial.one(self._nvars)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def partial(self, i):
        """∂/∂x_i"""
        if not 0 <= i < self._nvars:
            raise ArityError(f"Variable index {i} out of range for {self._nvars}")
        data = {}
        for m, c in self._terms.items():
            e = m[i]
            if e > 0:
                dm = m[:i] + (e - 1,) + m[i + 1:]
                data[dm] = c * e
        return Polynomial._raw(self._nvars, data)

    def gradient(self):
        return [self.partial(i) for i in range(self._nvars)]

    def compose(self, images):
        """Substitute x_i -> images[i].

        The images may live in a different number of variables; the result
        lives where they do.
        """
        if len(images) != self._nvars:
            raise ArityError(
                f"Need {self._nvars} images to compose, got {len(images)}"
            )
        nvars = images[0].nvars
        result = Polynomial.zero(nvars)
        powers = [{0: Polynomial.one(nvars)} for _ in images]
        for m, c in self._terms.items():
            term = Polynomial.constant(c, nvars)
            for i, e in enumerate(m):
                if e == 0:
                    continue
                cache = powers[i]
                if e not in cache:
                    cache[e] = images[i] ** e
                term = term * cache[e]
            result = result + term
        return result

    def graded_component(self, W, d):
        """The terms of weighted degree exactly d."""
        return Polynomial._raw(
            self._nvars,
            {m: c for m, c in self._terms.items() if weighted_degree(m, W) == d},
        )

    def exact_divide(self, divisor):
        """The quotient self / divisor, or None if the division is not exact."""
        divisor = self._coerce(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("Division by the zero polynomial")
        lm, lc = max(divisor._terms.items(), key=lambda t: grevlex_key(t[0]))
        remainder = dict(self._terms)
        quotient = {}
        while remainder:
            m = max(remainder, key=grevlex_key)
            if not monomial_divides(lm, m):
                return None
            q_m = monomial_div(m, lm)
            q_c = remainder[m] / lc
            quotient[q_m] = q_c
            for dm, dc in divisor._terms.items():
                t = monomial_mul(q_m, dm)
                value = remainder.get(t, 0) - q_c * dc
                if value == 0:
                    remainder.pop(t, None)
                else:
                    remainder[t] = value
        return Polynomial._raw(self._nvars, quotient)

    def divides(self, other):
        """Whether self divides other exactly."""
        return other.exact_divide(self) is not None

    # Printing

    def to_string(self, names=None):
        """Canonical text: descending grevlex order, explicit '*' and '^'."""
        if names is None:
            names = default_variable_names(self._nvars)
        if not self._terms:
            return "0"
        pieces = []
        for m, c in self.sorted_terms():
            factors = []
            for name, e in zip(names, m):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            magnitude = abs(c)
            if not factors:
                body = str(magnitude)
            elif magnitude == 1:
                body = "*".join(factors)
            else:
                body = str(magnitude) + "*" + "*".join(factors)
            if not pieces:
                pieces.append(("-" if c < 0 else "") + body)
            else:
                pieces.append((" - " if c < 0 else " + ") + body)
        return "".join(pieces)

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"Polynomial({self._nvars}, {dict(self.sorted_terms())!r})"


def poly_add(a, b):
    return a + b


def poly_mul(a, b):
    return a * b


def partial_derivative(f, i):
    return f.partial(i)


def is_quasi_homogeneous(f, W):
    """The degree N if every term of f has weighted degree N, else None.

    Raises
    ------
    PreconditionError
        If f is the zero polynomial.
    """
    if f.is_zero():
        raise PreconditionError("The zero polynomial has no quasi-homogeneity degree")
    W.check_arity(f.nvars)
    degrees = f.weighted_degrees(W)
    if len(degrees) != 1:
        return None
    return degrees.pop()


def euler_operator(f, W):
    """Σ w_i x_i ∂f/∂x_i"""
    result = Polynomial.zero(f.nvars)
    for i, w in enumerate(W.weights):
        result = result + Polynomial.variable(i, f.nvars) * f.partial(i) * w
    return result


def graded_component(f, W, d):
    return f.graded_component(W, d)
