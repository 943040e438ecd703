# -*- coding: utf-8 -*-

"""Gröbner bases of polynomial ideals and the Milnor algebra of f.

Buchberger's algorithm with the Gebauer-Möller criteria for discarding
critical pairs and the sugar strategy for choosing the next one. Results are
reduced and monic, so a basis is canonical for its monomial order.
"""

from collections import Counter
from dataclasses import dataclass, field
import itertools
import logging
from typing import Dict, List, Optional, Tuple

from .errors import (
    ArityError,
    NotIsolatedSingularityError,
    NotQuasiHomogeneousError,
    PreconditionError,
)
from .polynomial import (
    Polynomial,
    WeightSystem,
    default_variable_names,
    is_quasi_homogeneous,
    monomials_of_weighted_degree,
    monomial_div,
    monomial_divides,
    monomial_lcm,
    monomial_mul,
    weighted_degree,
)

logger = logging.getLogger(__name__)

ORDER_KINDS = ("grevlex", "lex", "wgrevlex")


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order: grevlex, lex or grevlex refined by weights.

    ``key(m)`` sorts monomials ascending, so the leading monomial of a
    polynomial is ``max(terms, key=order.key)``.
    """

    kind: str = "grevlex"
    weights: Optional[Tuple[int, ...]] = None

    def __post_init__(self):
        if self.kind not in ORDER_KINDS:
            raise ValueError(f"Unknown monomial order '{self.kind}'")
        if self.kind == "wgrevlex":
            if not self.weights:
                raise ValueError("The weighted order needs weights")
            object.__setattr__(self, "weights", tuple(self.weights))

    @classmethod
    def grevlex(cls):
        return cls("grevlex")

    @classmethod
    def lex(cls):
        return cls("lex")

    @classmethod
    def weighted(cls, W):
        return cls("wgrevlex", W.weights)

    def degree(self, m):
        """The degree used for sugar: weighted for wgrevlex, total otherwise."""
        if self.kind == "wgrevlex":
            return sum(w * e for w, e in zip(self.weights, m))
        return sum(m)

    def key(self, m):
        if self.kind == "lex":
            return tuple(m)
        return (self.degree(m), tuple(-e for e in reversed(m)))

    def leading(self, polynomial):
        """(monomial, coefficient) of the leading term."""
        if polynomial.is_zero():
            raise ValueError("The zero polynomial has no leading term")
        m = max(polynomial.terms, key=self.key)
        return m, polynomial.terms[m]

    def __str__(self):
        if self.kind == "wgrevlex":
            return f"wgrevlex{self.weights}"
        return self.kind


def _monic(polynomial, order):
    _, c = order.leading(polynomial)
    return polynomial.scale(1 / c)


def _reduce(polynomial, divisors, order):
    """Full multivariate division; returns the remainder.

    ``divisors`` is a list of (leading monomial, leading coefficient, terms).
    """
    p = dict(polynomial.terms)
    remainder = {}
    while p:
        m = max(p, key=order.key)
        c = p[m]
        for lm, lc, terms in divisors:
            if monomial_divides(lm, m):
                q_m = monomial_div(m, lm)
                q_c = c / lc
                for gm, gc in terms.items():
                    t = monomial_mul(q_m, gm)
                    value = p.get(t, 0) - q_c * gc
                    if value == 0:
                        p.pop(t, None)
                    else:
                        p[t] = value
                break
        else:
            remainder[m] = c
            del p[m]
    return Polynomial._raw(polynomial.nvars, remainder)


def _divisors(polynomials, order):
    result = []
    for g in polynomials:
        lm, lc = order.leading(g)
        result.append((lm, lc, g.terms))
    return result


def spoly(p1, p2, order):
    """The S-polynomial of p1 and p2."""
    m1, c1 = order.leading(p1)
    m2, c2 = order.leading(p2)
    lcm = monomial_lcm(m1, m2)
    n = p1.nvars
    t1 = Polynomial._raw(n, {monomial_div(lcm, m1): 1 / c1})
    t2 = Polynomial._raw(n, {monomial_div(lcm, m2): 1 / c2})
    return p1 * t1 - p2 * t2


@dataclass(frozen=True)
class GroebnerBasis:
    """A reduced, monic Gröbner basis together with its order."""

    generators: Tuple[Polynomial, ...]
    order: MonomialOrder

    @property
    def nvars(self):
        return self.generators[0].nvars

    def leading_monomials(self):
        return [self.order.leading(g)[0] for g in self.generators]

    def is_unit(self):
        return len(self.generators) == 1 and self.generators[0].is_constant()

    def reduce(self, g):
        if g.nvars != self.nvars:
            raise ArityError(
                f"Cannot reduce a polynomial in {g.nvars} variables modulo an "
                f"ideal in {self.nvars}"
            )
        return _reduce(g, _divisors(self.generators, self.order), self.order)

    def contains(self, g):
        return self.reduce(g).is_zero()

    def is_standard(self, m):
        """Whether no leading monomial divides m."""
        return not any(monomial_divides(lm, m) for lm in self.leading_monomials())

    def to_strings(self, names=None):
        return [g.to_string(names) for g in self.generators]


def buchberger(gens, order=None):
    """The reduced Gröbner basis of the ideal generated by ``gens``.

    Parameters
    ----------
    gens : [Polynomial]
        The generators, at least one nonzero.
    order : MonomialOrder, optional
        Defaults to grevlex.

    Returns
    -------
    GroebnerBasis
    """
    if order is None:
        order = MonomialOrder.grevlex()
    gens = list(gens)
    if not gens:
        raise PreconditionError("Need at least one generator")
    nvars = gens[0].nvars
    if any(g.nvars != nvars for g in gens):
        raise ArityError("All generators must have the same number of variables")
    if order.weights is not None and len(order.weights) != nvars:
        raise ArityError("The order's weights do not match the variables")
    F = [_monic(g, order) for g in gens if not g.is_zero()]
    if not F:
        raise PreconditionError("Need at least one nonzero generator")

    # Interreduce the input first
    while True:
        previous = F
        F = []
        for i, p in enumerate(previous):
            r = _reduce(p, _divisors(previous[:i], order), order)
            if r:
                F.append(_monic(r, order))
        if F == previous:
            break
    if any(p.is_constant() for p in F):
        return GroebnerBasis((Polynomial.one(nvars),), order)

    f = []
    lms = []
    sugar = []
    index = {}

    def add(h, s):
        if h in index:
            return index[h]
        index[h] = len(f)
        f.append(h)
        lms.append(order.leading(h)[0])
        sugar.append(s)
        return index[h]

    def pair_sugar(pair):
        i, j = pair
        lcm = monomial_lcm(lms[i], lms[j])
        d = order.degree(lcm)
        return max(
            sugar[i] + d - order.degree(lms[i]), sugar[j] + d - order.degree(lms[j])
        )

    def select(pairs):
        return min(
            pairs,
            key=lambda pair: (
                pair_sugar(pair),
                order.key(monomial_lcm(lms[pair[0]], lms[pair[1]])),
                pair,
            ),
        )

    def update(G, B, ih):
        mh = lms[ih]

        def lcm_divides(ip, lcm_hg):
            return monomial_divides(monomial_lcm(mh, lms[ip]), lcm_hg)

        C = sorted(G)
        D = set()
        while C:
            ig = C.pop()
            mg = lms[ig]
            lcm_hg = monomial_lcm(mh, mg)
            if monomial_mul(mh, mg) == lcm_hg or (
                not any(lcm_divides(ipx, lcm_hg) for ipx in C)
                and not any(lcm_divides(pr[1], lcm_hg) for pr in D)
            ):
                D.add((ih, ig))

        # Coprime leading monomials: the pair reduces to zero
        E = {
            (a, b)
            for a, b in D
            if monomial_mul(lms[a], lms[b]) != monomial_lcm(lms[a], lms[b])
        }

        B_new = set()
        for ig1, ig2 in B:
            lcm12 = monomial_lcm(lms[ig1], lms[ig2])
            if (
                not monomial_divides(mh, lcm12)
                or monomial_lcm(lms[ig1], mh) == lcm12
                or monomial_lcm(lms[ig2], mh) == lcm12
            ):
                B_new.add((ig1, ig2))
        B_new |= E

        G_new = {ig for ig in G if not monomial_divides(mh, lms[ig])}
        G_new.add(ih)
        return G_new, B_new

    todo = set()
    for p in F:
        todo.add(add(p, order.degree(order.leading(p)[0])))

    G = set()
    pairs = set()
    while todo:
        ih = min(todo, key=lambda i: order.key(lms[i]))
        todo.remove(ih)
        G, pairs = update(G, pairs, ih)

    reductions_to_zero = 0
    while pairs:
        pair = select(pairs)
        pairs.remove(pair)
        s = pair_sugar(pair)
        h = spoly(f[pair[0]], f[pair[1]], order)
        divisors = sorted(G, key=lambda g: order.key(lms[g]))
        h = _reduce(h, _divisors([f[g] for g in divisors], order), order)
        if h.is_zero():
            reductions_to_zero += 1
            continue
        ih = add(_monic(h, order), s)
        G, pairs = update(G, pairs, ih)
        if lms[ih] == (0,) * nvars:
            break
    logger.debug(
        f"Buchberger: {len(f)} polynomials, {reductions_to_zero} reductions to zero"
    )

    basis = [f[i] for i in G]
    if any(p.is_constant() for p in basis):
        return GroebnerBasis((Polynomial.one(nvars),), order)

    # Reduce each element modulo the others
    reduced = []
    for i, g in enumerate(basis):
        others = basis[:i] + basis[i + 1:]
        r = _reduce(g, _divisors(others, order), order)
        if r:
            reduced.append(_monic(r, order))
    reduced.sort(key=lambda g: order.key(order.leading(g)[0]), reverse=True)
    return GroebnerBasis(tuple(reduced), order)


def normal_form_poly(g, gb):
    """The canonical remainder of g modulo the ideal of gb."""
    return gb.reduce(g)


def is_groebner(polynomials, order):
    """Whether every S-polynomial of the list reduces to zero."""
    divisors = _divisors(polynomials, order)
    for p1, p2 in itertools.combinations(polynomials, 2):
        if _reduce(spoly(p1, p2, order), divisors, order):
            return False
    return True


@dataclass
class MilnorData:
    """The Milnor algebra Q_f = ℚ[x]/I_f of an isolated singularity.

    Attributes
    ----------
    jacobian_gb : GroebnerBasis
        The reduced basis of I_f for the weighted order.
    basis_B : [tuple]
        The standard monomials by increasing weighted degree, each degree
        in decreasing order.
    milnor_number : int
        μ = |B|.
    graded_dims : {int: int}
        Dimension of each graded piece (Q_f)_d.
    hodge : {int: int}
        h^{q,n-q} = dim (Q_f)_{qN - Σw} for q = 0..n.
    """

    f: Polynomial
    W: WeightSystem
    N: int
    jacobian_gb: GroebnerBasis
    basis_B: List[Tuple[int, ...]] = field(default_factory=list)
    milnor_number: int = 0
    graded_dims: Dict[int, int] = field(default_factory=dict)
    hodge: Dict[int, int] = field(default_factory=dict)

    @property
    def nvars(self):
        return self.f.nvars

    def basis_of_degree(self, d):
        """The B-monomials of weighted degree d."""
        return [m for m in self.basis_B if weighted_degree(m, self.W) == d]

    def basis_strings(self, names=None):
        return [Polynomial.from_monomial(m).to_string(names) for m in self.basis_B]

    def to_dict(self, names=None):
        if names is None:
            names = default_variable_names(self.nvars)
        return {
            "degree": self.N,
            "milnor_number": self.milnor_number,
            "basis": self.basis_strings(names),
            "jacobian_groebner_basis": self.jacobian_gb.to_strings(names),
            "order": str(self.jacobian_gb.order),
            "graded_dims": {str(d): v for d, v in sorted(self.graded_dims.items())},
            "hodge": {str(q): v for q, v in sorted(self.hodge.items())},
        }


def quasi_homogeneous_degree(f, W):
    """N for f, raising NotQuasiHomogeneousError when there is none."""
    W.check_arity(f.nvars)
    N = is_quasi_homogeneous(f, W)
    if N is None:
        raise NotQuasiHomogeneousError(
            f"{f} is not quasi-homogeneous for the weights {W.weights}"
        )
    if W.degree_hint is not None and W.degree_hint != N:
        raise NotQuasiHomogeneousError(
            f"{f} has weighted degree {N}, not the declared {W.degree_hint}"
        )
    return N


def milnor_data(f, W):
    """Compute the Milnor algebra of a quasi-homogeneous f.

    Parameters
    ----------
    f : Polynomial
        The quasi-homogeneous polynomial.
    W : WeightSystem
        The weights.

    Returns
    -------
    MilnorData
    """
    N = quasi_homogeneous_degree(f, W)
    n = f.nvars
    gradient = f.gradient()
    if all(g.is_zero() for g in gradient):
        raise NotIsolatedSingularityError(f"{f} is constant; its Jacobian ideal is 0")
    order = MonomialOrder.weighted(W)
    gb = buchberger(gradient, order)
    data = MilnorData(f=f, W=W, N=N, jacobian_gb=gb)
    if gb.is_unit():
        data.hodge = {q: 0 for q in range(n + 1)}
        logger.debug(f"{f} is regular at the origin: I_f = (1)")
        return data

    leading = gb.leading_monomials()
    bounds = []
    for i in range(n):
        powers = [
            m[i] for m in leading if all(e == 0 for j, e in enumerate(m) if j != i)
        ]
        if not powers:
            raise NotIsolatedSingularityError(
                f"{f} does not have an isolated singularity: no leading monomial "
                f"is a pure power of variable {i + 1}"
            )
        bounds.append(min(powers))

    basis = [
        m
        for m in itertools.product(*(range(b) for b in bounds))
        if not any(monomial_divides(lm, m) for lm in leading)
    ]
    basis.sort(key=order.key, reverse=True)
    basis.sort(key=lambda m: weighted_degree(m, W))
    data.basis_B = basis
    data.milnor_number = len(basis)
    counts = Counter(weighted_degree(m, W) for m in basis)
    data.graded_dims = dict(sorted(counts.items()))
    data.hodge = {
        q: data.graded_dims.get(q * N - W.total, 0) for q in range(n + 1)
    }
    logger.debug(f"Milnor number of {f}: {data.milnor_number}")
    return data


def poincare_series_product(W, N):
    """∏ (t^(N - w_i) - 1) / (t^(w_i) - 1) as a polynomial in t.

    Raises
    ------
    PreconditionError
        If N <= w_i for some i or the division is not exact.
    """
    if any(N <= w for w in W.weights):
        raise PreconditionError(
            f"The degree {N} must exceed every weight in {W.weights}"
        )
    t_power = lambda e: Polynomial.from_monomial((e,))  # noqa: E731
    numerator = Polynomial.one(1)
    denominator = Polynomial.one(1)
    for w in W.weights:
        numerator = numerator * (t_power(N - w) - 1)
        denominator = denominator * (t_power(w) - 1)
    quotient = numerator.exact_divide(denominator)
    if quotient is None:
        raise PreconditionError(
            f"The Poincaré product for weights {W.weights} and degree {N} is not "
            "a polynomial"
        )
    return quotient


def series_coefficients(series):
    """The coefficients of a univariate Polynomial, constant term first."""
    if series.is_zero():
        return []
    values = [series.coefficient((d,)) for d in range(series.total_degree() + 1)]
    return [int(v) if v.denominator == 1 else v for v in values]


def principal_quotient_dims(f, W, D):
    """dim (ℚ[x]/(f))_d for d = 0..D.

    {f} is a Gröbner basis of (f), so the standard monomials are those not
    divisible by the leading monomial of f.
    """
    lm, _ = MonomialOrder.weighted(W).leading(f)
    return [
        sum(
            1
            for m in monomials_of_weighted_degree(W, d)
            if not monomial_divides(lm, m)
        )
        for d in range(D + 1)
    ]
