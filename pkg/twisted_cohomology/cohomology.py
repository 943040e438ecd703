# -*- coding: utf-8 -*-

"""Graded cohomology of the twisted complex (Ω^•, d_f^(p)).

For f quasi-homogeneous of degree N the operator d_f^(p) maps k-forms of
weighted degree d to (k+1)-forms of weighted degree d + N, the generator
dx_i weighing w_i. Each weighted degree is a finite-dimensional space, so the
cohomology is computed weight by weight with exact sparse linear algebra.
Cohomology of a germ at the origin is the direct sum of these graded pieces;
totals are only ever truncated sums up to a chosen maximal weight.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
import itertools
import logging
import math
from typing import Dict, List, Optional

import pandas

from .errors import PreconditionError, SolverInconsistencyError
from .forms import (
    DifferentialForm,
    form_weighted_degrees,
    graded_form_component,
    twisted_diff,
)
from .groebner import milnor_data, principal_quotient_dims, quasi_homogeneous_degree
from .linalg import LinearSolver, SparseMatrix, kernel
from .polynomial import (
    Polynomial,
    grevlex_key,
    monomials_of_weighted_degree,
)

logger = logging.getLogger(__name__)

INFINITE = "∞"
UNKNOWN = "?"


def parallel_map(fn, items, threads=None):
    """Map fn over items, in order, optionally on a thread pool."""
    items = list(items)
    if not threads or threads <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=threads) as executor:
        return list(executor.map(fn, items))


def graded_basis(n, k, W, d):
    """The monomial k-forms x^a dx_I of weighted degree d.

    Returns
    -------
    [(tuple, tuple)]
        (exponents, indices) pairs, ordered by the index tuple and then by
        descending grevlex order of the monomial.
    """
    W.check_arity(n)
    if not 0 <= k <= n or d < 0:
        return []
    result = []
    for I in itertools.combinations(range(n), k):
        rest = d - sum(W.weights[i] for i in I)
        for m in monomials_of_weighted_degree(W, rest):
            result.append((m, I))
    return result


def basis_form(element, n):
    m, I = element
    return DifferentialForm.basis(n, I, Polynomial.from_monomial(m))


def coordinates(form, index):
    """The coordinates of a form in a graded basis given as {element: row}."""
    result = {}
    for I, c in form.components.items():
        for m, value in c.terms.items():
            try:
                result[index[(m, I)]] = value
            except KeyError:
                raise PreconditionError(
                    f"The form {form} is not in the span of the graded basis"
                ) from None
    return result


@dataclass
class GradedComplexSlice:
    """The matrix of d_f^(p) from k-forms of weight d to (k+1)-forms of
    weight d + N.
    """

    f: Polynomial
    W: object
    N: int
    p: int
    k: int
    d: int
    domain_basis: list
    codomain_basis: list
    matrix: SparseMatrix
    _rank: Optional[int] = field(default=None, repr=False)

    @property
    def rank(self):
        if self._rank is None:
            self._rank = self.matrix.rank()
        return self._rank

    @property
    def kernel_dim(self):
        return len(self.domain_basis) - self.rank

    def kernel(self):
        """A basis of the cocycles as DifferentialForms."""
        return [self.form(vector) for vector in kernel(self.matrix)]

    def form(self, vector):
        """The domain form with the given coordinates."""
        n = self.f.nvars
        result = DifferentialForm.zero(n, self.k)
        for j, value in vector.items():
            result = result + basis_form(self.domain_basis[j], n).scale(value)
        return result

    def codomain_index(self):
        return {element: i for i, element in enumerate(self.codomain_basis)}


@lru_cache(maxsize=1024)
def complex_slice(f, W, p, k, d):
    """Assemble d_f^(p) on k-forms of weighted degree d.

    Parameters
    ----------
    f : Polynomial
        Quasi-homogeneous for W.
    W : WeightSystem
    p, k, d : int
        The twist, the form degree and the weighted degree.

    Returns
    -------
    GradedComplexSlice
    """
    N = quasi_homogeneous_degree(f, W)
    n = f.nvars
    domain = graded_basis(n, k, W, d)
    codomain = graded_basis(n, k + 1, W, d + N)
    index = {element: i for i, element in enumerate(codomain)}
    columns = {}
    for j, element in enumerate(domain):
        image = twisted_diff(f, p, basis_form(element, n))
        column = coordinates(image, index)
        if column:
            columns[j] = column
    matrix = SparseMatrix(len(codomain), len(domain), columns)
    logger.debug(
        f"slice p={p} k={k} d={d}: {len(codomain)}x{len(domain)}, nnz={matrix.nnz()}"
    )
    return GradedComplexSlice(f, W, N, p, k, d, domain, codomain, matrix)


def graded_cohomology_dim(f, W, p, k, d):
    """dim H^k_{f,p} in weighted degree d."""
    N = quasi_homogeneous_degree(f, W)
    cocycles = complex_slice(f, W, p, k, d).kernel_dim
    if k == 0 or d - N < 0:
        return cocycles
    return cocycles - complex_slice(f, W, p, k - 1, d - N).rank


@dataclass
class CohomologyReport:
    """Graded dimensions of H^k_{f,p} for weights 0..D."""

    f: Polynomial
    W: object
    N: int
    p: int
    k: int
    max_degree: int
    per_degree: Dict[int, int]
    cumulative: Dict[int, int]
    stabilized: bool

    @property
    def total(self):
        return self.cumulative[self.max_degree] if self.cumulative else 0

    def nonzero_degrees(self):
        return [d for d, v in self.per_degree.items() if v]

    def consistent_with_infinite(self):
        """Whether every block of N consecutive weights in the upper half of
        the window holds a class.

        This is evidence for an infinite-dimensional group, never a proof.
        """
        start = math.ceil(self.max_degree / 2)
        blocks = 0
        for low in range(start, self.max_degree + 1, self.N):
            high = low + self.N - 1
            if high > self.max_degree:
                break
            blocks += 1
            if not any(self.per_degree.get(d, 0) for d in range(low, high + 1)):
                return False
        return blocks > 0

    def to_dataframe(self):
        return pandas.DataFrame(
            {
                "weight": list(self.per_degree),
                "dim": list(self.per_degree.values()),
                "cumulative": [self.cumulative[d] for d in self.per_degree],
            }
        )

    def to_dict(self, names=None):
        return {
            "p": self.p,
            "k": self.k,
            "degree": self.N,
            "max_degree": self.max_degree,
            "per_degree": {str(d): v for d, v in self.per_degree.items()},
            "total": self.total,
            "stabilized": self.stabilized,
        }


def total_dims(f, W, p, k, D, threads=None):
    """Per-weight and cumulative dimensions of H^k_{f,p} up to weight D."""
    if D < 0:
        raise PreconditionError(f"The maximal degree must be non-negative, not {D}")
    N = quasi_homogeneous_degree(f, W)
    dims = parallel_map(
        lambda d: graded_cohomology_dim(f, W, p, k, d), range(D + 1), threads
    )
    per_degree = dict(enumerate(dims))
    cumulative = dict(enumerate(itertools.accumulate(dims)))
    window = 2 * N
    stabilized = D + 1 >= window and not any(dims[-window:])
    return CohomologyReport(f, W, N, p, k, D, per_degree, cumulative, stabilized)


# The dimension table


def table1_row(n, p):
    """The row label of the dimension table for the twist p."""
    if p < 0:
        return None
    if p <= n - 3:
        return "0 ≤ p ≤ n-3"
    if p == n - 2:
        return "p = n-2"
    if p == n - 1:
        return "p = n-1"
    return "p ≥ n"


def table1_prediction(data, p):
    """Predicted (dim H^{n-1}, dim H^n) for the twist p.

    Returns integers, INFINITE or UNKNOWN; None outside the table.
    """
    n = data.nvars
    c = data.milnor_number
    h = data.hodge
    row = table1_row(n, p)
    if row is None:
        return None, None
    if p <= n - 3:
        s = sum(h.get(i, 0) for i in range(1, n - p))
        return s, c + s
    if p == n - 2:
        return INFINITE, c + h.get(1, 0)
    if p == n - 1:
        return UNKNOWN, INFINITE
    return 0, c


def _agrees(predicted, report):
    """Whether a finite prediction matches; None when there is nothing to compare.

    An infinite prediction is only ever evidence, reported separately through
    consistent_with_infinite(). For n = 2 and p = n - 2 the graded H^(n-1) is
    finite, so it cannot be held against the computation.
    """
    if predicted is None or predicted in (UNKNOWN, INFINITE):
        return None
    return report.total == predicted


@dataclass
class Table1Row:
    p: int
    row: Optional[str]
    predicted_top_minus_one: object
    computed_top_minus_one: CohomologyReport
    predicted_top: object
    computed_top: CohomologyReport

    @property
    def agrees_top_minus_one(self):
        return _agrees(self.predicted_top_minus_one, self.computed_top_minus_one)

    @property
    def agrees_top(self):
        return _agrees(self.predicted_top, self.computed_top)

    @property
    def agrees(self):
        return all(
            a is not False for a in (self.agrees_top_minus_one, self.agrees_top)
        )


@dataclass
class Table1Report:
    data: object
    max_degree: int
    rows: List[Table1Row]

    @property
    def agrees(self):
        return all(row.agrees for row in self.rows)

    def to_dataframe(self):
        n = self.data.nvars
        table = {
            "p": [],
            "row": [],
            f"H^{n - 1} predicted": [],
            f"H^{n - 1} computed": [],
            f"H^{n} predicted": [],
            f"H^{n} computed": [],
            "agrees": [],
        }
        for row in self.rows:
            table["p"].append(row.p)
            table["row"].append(row.row or "not tabulated")
            table[f"H^{n - 1} predicted"].append(_label(row.predicted_top_minus_one))
            table[f"H^{n - 1} computed"].append(row.computed_top_minus_one.total)
            table[f"H^{n} predicted"].append(_label(row.predicted_top))
            table[f"H^{n} computed"].append(row.computed_top.total)
            table["agrees"].append(row.agrees)
        return pandas.DataFrame(table)

    def to_dict(self, names=None):
        rows = []
        for row in self.rows:
            rows.append(
                {
                    "p": row.p,
                    "row": row.row,
                    "predicted": [
                        _label(row.predicted_top_minus_one),
                        _label(row.predicted_top),
                    ],
                    "computed": [
                        row.computed_top_minus_one.total,
                        row.computed_top.total,
                    ],
                    "per_degree": [
                        row.computed_top_minus_one.to_dict()["per_degree"],
                        row.computed_top.to_dict()["per_degree"],
                    ],
                    "consistent_with_infinite": [
                        row.computed_top_minus_one.consistent_with_infinite(),
                        row.computed_top.consistent_with_infinite(),
                    ],
                    "agrees": row.agrees,
                }
            )
        return {
            "milnor_number": self.data.milnor_number,
            "hodge": {str(q): v for q, v in self.data.hodge.items()},
            "max_degree": self.max_degree,
            "rows": rows,
            "agrees": self.agrees,
        }


def _label(value):
    if value is None:
        return "n/a"
    if value == UNKNOWN:
        return "unknown (?)"
    if value == INFINITE:
        return INFINITE
    return value


def table1_report(f, W, p_range, D, threads=None):
    """Compare the computed dimensions of H^{n-1} and H^n with the table.

    Parameters
    ----------
    f : Polynomial
        An isolated quasi-homogeneous singularity.
    W : WeightSystem
    p_range : iterable of int
        The twists to tabulate.
    D : int
        The maximal weight.
    """
    data = milnor_data(f, W)
    n = f.nvars
    rows = []
    for p in p_range:
        predicted_lower, predicted_top = table1_prediction(data, p)
        lower = total_dims(f, W, p, n - 1, D, threads)
        top = total_dims(f, W, p, n, D, threads)
        rows.append(
            Table1Row(p, table1_row(n, p), predicted_lower, lower, predicted_top, top)
        )
        logger.info(f"p={p}: H^{n - 1} {lower.total}, H^{n} {top.total}")
    return Table1Report(data, D, rows)


# H^0


@dataclass
class H0Report:
    p: int
    max_degree: int
    per_degree: Dict[int, int]
    generator: Optional[Polynomial]
    expected: int

    @property
    def dimension(self):
        return sum(self.per_degree.values())

    @property
    def agrees(self):
        return self.dimension == self.expected

    def to_dict(self, names=None):
        return {
            "p": self.p,
            "max_degree": self.max_degree,
            "dimension": self.dimension,
            "expected": self.expected,
            "generator": (
                None if self.generator is None else self.generator.to_string(names)
            ),
            "per_degree": {str(d): v for d, v in self.per_degree.items()},
        }


def h0_dimension(f, W, p, D, threads=None):
    """The functions g with f dg + p g df = 0, up to weight D.

    The expected answer is 0 for p > 0 and the line spanned by f^{-p}
    otherwise, provided its weight -pN fits in the window.
    """
    if f.is_zero():
        raise PreconditionError("H^0 is only defined for f ≠ 0")
    N = quasi_homogeneous_degree(f, W)
    slices = parallel_map(lambda d: complex_slice(f, W, p, 0, d), range(D + 1), threads)
    per_degree = {s.d: s.kernel_dim for s in slices}
    generator = None
    if sum(per_degree.values()) == 1:
        s = next(s for s in slices if s.kernel_dim)
        g = s.kernel()[0].function
        _, lc = max(g.terms.items(), key=lambda t: grevlex_key(t[0]))
        generator = g.scale(1 / lc)
    expected = 1 if p <= 0 and -p * N <= D else 0
    return H0Report(p, D, per_degree, generator, expected)


# Normal forms of top-degree forms


@dataclass
class NormalFormResult:
    """η = (h_{n-p} + f h_{n-p-1} + ... + f^{n-p-1} h_1) ν + d_f^(p) γ

    ``h[j - 1]`` holds h_j, which is multiplied by f^{n-p-j}. For h_1 that
    is f^{n-p-1}: h_1 has weight N - Σw, and no other power of f puts f^a h_1 ν
    in the weight (n-p)N shared by the other terms.
    """

    f: Polynomial
    W: object
    p: int
    h: List[Polynomial]
    witness: DifferentialForm

    def representative(self):
        """The reconstructed top form Σ f^{n-p-j} h_j ν."""
        n = self.f.nvars
        top = n - self.p
        total = Polynomial.zero(n)
        for j, hj in enumerate(self.h, start=1):
            total = total + hj * self.f ** (top - j)
        return DifferentialForm.volume(n, total)

    def to_dict(self, names=None):
        return {
            "p": self.p,
            "h": {str(j): hj.to_string(names) for j, hj in enumerate(self.h, start=1)},
            "witness": self.witness.to_string(names),
        }


def _nf_candidates(data, p, e):
    """The polynomials f^{n-p-j} x^m allowed in weight e, tagged with j."""
    f, W, N = data.f, data.W, data.N
    n = f.nvars
    top = n - p
    candidates = [
        (top, m, Polynomial.from_monomial(m))
        for m in data.basis_of_degree(e - W.total)
    ]
    if e == top * N:
        for j in range(top - 1, 1, -1):
            power = f ** (top - j)
            for m in data.basis_of_degree(j * N - W.total):
                candidates.append((j, m, power * Polynomial.from_monomial(m)))
        power = f ** (top - 1)
        for m in monomials_of_weighted_degree(W, N - W.total):
            candidates.append((1, m, power * Polynomial.from_monomial(m)))
    return candidates


@lru_cache(maxsize=256)
def _nf_system(f, W, p, e):
    """The system [d_f^(p) on (n-1)-forms | candidates] in weight e."""
    data = milnor_data(f, W)
    n = f.nvars
    image = complex_slice(f, W, p, n - 1, e - data.N) if e - data.N >= 0 else None
    codomain = graded_basis(n, n, W, e)
    index = {element: i for i, element in enumerate(codomain)}
    columns = {}
    offset = 0
    domain = []
    if image is not None:
        columns.update(image.matrix.columns)
        offset = image.matrix.ncols
        domain = image.domain_basis
    candidates = _nf_candidates(data, p, e)
    for j, (_, _, polynomial) in enumerate(candidates):
        column = coordinates(DifferentialForm.volume(n, polynomial), index)
        if column:
            columns[offset + j] = column
    matrix = SparseMatrix(len(codomain), offset + len(candidates), columns)
    solver = LinearSolver(matrix)
    image_rank = image.rank if image is not None else 0
    if solver.rank != image_rank + len(candidates):
        raise SolverInconsistencyError(
            f"The normal-form candidates in weight {e} are not independent modulo "
            f"the coboundaries (rank {solver.rank}, expected "
            f"{image_rank} + {len(candidates)})"
        )
    return index, domain, candidates, solver, offset


def normal_form_nform(f, W, p, eta):
    """Decompose a top-degree form modulo the coboundaries of d_f^(p).

    Parameters
    ----------
    f : Polynomial
        An isolated quasi-homogeneous singularity.
    W : WeightSystem
    p : int
        The twist, p < n - 1.
    eta : DifferentialForm
        A top-degree form.

    Returns
    -------
    NormalFormResult
    """
    n = f.nvars
    if p >= n - 1:
        raise PreconditionError(f"Normal forms need p < n - 1 = {n - 1}, not {p}")
    if eta.nvars != n or eta.degree != n:
        raise PreconditionError(
            "The normal form needs a top-degree form in the variables of f"
        )
    data = milnor_data(f, W)
    top = n - p
    h = [Polynomial.zero(n) for _ in range(top)]
    witness = DifferentialForm.zero(n, n - 1)
    for e in sorted(form_weighted_degrees(eta, W)):
        index, domain, candidates, solver, offset = _nf_system(f, W, p, e)
        piece = graded_form_component(eta, W, e)
        solution = solver.solve(coordinates(piece, index))
        if solution is None:
            raise SolverInconsistencyError(
                f"No decomposition of the weight {e} part of {eta}"
            )
        for column, value in solution.items():
            if column < offset:
                witness = witness + basis_form(domain[column], n).scale(value)
            else:
                j, m, _ = candidates[column - offset]
                h[j - 1] = h[j - 1] + Polynomial.from_monomial(m, value)
    result = NormalFormResult(f, W, p, h, witness)
    if eta - result.representative() != twisted_diff(f, p, witness):
        raise SolverInconsistencyError(f"The witness for {eta} does not verify")
    return result


# Regular case and the principal quotient


def regular_case_predictor(betti_M, betti_S):
    """dim H^k_f = b_k(M) + b_{k-1}(S) for k ≥ 1 and 1 for k = 0."""
    betti_M = [int(b) for b in betti_M]
    betti_S = [int(b) for b in betti_S]
    if any(b < 0 for b in betti_M + betti_S):
        raise PreconditionError("Betti numbers must be non-negative")
    length = max(len(betti_M), len(betti_S) + 1, 1)
    result = [1]
    for k in range(1, length):
        b_M = betti_M[k] if k < len(betti_M) else 0
        b_S = betti_S[k - 1] if k - 1 < len(betti_S) else 0
        result.append(b_M + b_S)
    return result


def germ_quotient_probe(f, W, D):
    """dim (ℚ[x]/(f))_d for d = 0..D."""
    if f.is_constant():
        raise PreconditionError("The quotient probe needs a nonconstant f")
    quasi_homogeneous_degree(f, W)
    return principal_quotient_dims(f, W, D)

