# -*- coding: utf-8 -*-

"""The commands of the twisted-cohomology tool.

Each class computes one kind of report; ``COMMANDS`` maps the command names
used on the command line to the classes.
"""

import logging

import pandas

from .base import CommandBase, results_table, scalar_text, table_text
from .cohomology import (
    germ_quotient_probe,
    h0_dimension,
    normal_form_nform,
    regular_case_predictor,
    table1_report,
    total_dims,
)
from .errors import PreconditionError, ProblemValidationError
from .groebner import milnor_data, poincare_series_product, series_coefficients
from .spectral import e2_degeneration_check, projective_degeneration_check
from .verify import VerificationSuite

logger = logging.getLogger(__name__)

GERM_NOTE = (
    " For quasi-homogeneous f the complex is graded and every weighted degree "
    "is finite dimensional, so the cohomology of the germ is computed degree "
    "by degree up to the maximal weight D. Totals are truncated sums; "
    "stabilization and infinite dimension are reported as evidence, never as "
    "proof."
)


class MilnorCommand(CommandBase):
    name = "milnor"

    def compute(self):
        return milnor_data(self.f, self.W)

    def body_text(self):
        R = self.results
        text = results_table(R, ["degree", "milnor_number", "order"])
        text += "\n\n" + table_text(
            {"Milnor algebra basis": R["basis"]}
        )
        text += "\n\n" + table_text(
            {"Gröbner basis of the Jacobian ideal": R["jacobian_groebner_basis"]}
        )
        return text


class HodgeCommand(CommandBase):
    name = "hodge"

    def compute(self):
        return milnor_data(self.f, self.W)

    def to_results(self, data):
        try:
            series = series_coefficients(poincare_series_product(self.W, data.N))
        except PreconditionError as e:
            logger.warning(f"No Poincaré product: {e}")
            series = None
        return {
            "degree": data.N,
            "milnor_number": data.milnor_number,
            "graded_dims": {str(d): v for d, v in sorted(data.graded_dims.items())},
            "poincare_series": series,
            "hodge": {str(q): v for q, v in sorted(data.hodge.items())},
            "hodge_sum": sum(data.hodge.values()),
        }

    def body_text(self):
        R = self.results
        text = results_table(R, ["degree", "milnor_number", "hodge_sum"])
        series = R["poincare_series"] or []
        weights = sorted(
            set(int(d) for d in R["graded_dims"]) | set(range(len(series)))
        )
        text += "\n\n" + table_text(
            {
                "weight": weights,
                "dim (Q_f)_d": [R["graded_dims"].get(str(d), 0) for d in weights],
                "Poincaré product": [
                    series[d] if d < len(series) else "-" for d in weights
                ],
            }
        )
        text += "\n\n" + table_text(
            {
                "q": list(R["hodge"]),
                f"h^(q,{self.n}-q)": list(R["hodge"].values()),
            }
        )
        return text


class CohomCommand(CommandBase):
    name = "cohom"
    inputs = ("p", "k", "max degree")

    def description_text(self):
        return super().description_text() + GERM_NOTE

    def compute(self):
        degrees = [self.spec.k] if self.spec.k is not None else range(self.n + 1)
        for k in degrees:
            if not 0 <= k <= self.n:
                raise ProblemValidationError(f"k must be between 0 and {self.n}")
        return [
            total_dims(self.f, self.W, self.spec.p, k, self.max_degree, self.threads)
            for k in degrees
        ]

    def to_results(self, reports):
        groups = []
        for report in reports:
            group = report.to_dict(self.names)
            group["consistent_with_infinite"] = report.consistent_with_infinite()
            groups.append(group)
        return {
            "degree": self.N,
            "p": self.spec.p,
            "max_degree": self.max_degree,
            "groups": groups,
        }

    def dataframe(self):
        frames = []
        for report in self.report:
            frame = report.to_dataframe()
            frame.insert(0, "k", report.k)
            frames.append(frame)
        return pandas.concat(frames, ignore_index=True)

    def body_text(self):
        R = self.results
        text = results_table(R, ["degree", "p", "max_degree"])
        summary = {
            "k": [g["k"] for g in R["groups"]],
            "total": [g["total"] for g in R["groups"]],
            "stabilized": [scalar_text(g["stabilized"]) for g in R["groups"]],
            "consistent with ∞": [
                scalar_text(g["consistent_with_infinite"]) for g in R["groups"]
            ],
        }
        text += "\n\n" + table_text(summary)
        text += "\n\n" + table_text(self.dataframe())
        return text


class Table1Command(CommandBase):
    name = "table1"
    inputs = ("p range", "max degree")

    def description_text(self):
        return super().description_text() + GERM_NOTE

    @property
    def p_range(self):
        if self.spec.p_range is not None:
            low, high = self.spec.p_range
        else:
            low, high = 0, self.n + 1
        if low > high:
            raise ProblemValidationError(f"Empty range of p: {low}:{high}")
        return range(low, high + 1)

    def compute(self):
        return table1_report(
            self.f, self.W, self.p_range, self.max_degree, self.threads
        )

    def dataframe(self):
        return self.report.to_dataframe()

    def body_text(self):
        R = self.results
        text = results_table(R, ["milnor_number", "hodge", "max_degree", "agrees"])
        frame = self.dataframe()
        frame["agrees"] = [scalar_text(v) for v in frame["agrees"]]
        return text + "\n\n" + table_text(frame)


class H0Command(CommandBase):
    name = "h0"
    inputs = ("p", "max degree")

    def default_max_degree(self):
        return max(super().default_max_degree(), -self.spec.p * self.N)

    def compute(self):
        return h0_dimension(self.f, self.W, self.spec.p, self.max_degree, self.threads)

    def to_results(self, report):
        results = report.to_dict(self.names)
        results["agrees"] = report.agrees
        return results

    def body_text(self):
        R = self.results
        text = results_table(
            R, ["p", "max_degree", "dimension", "expected", "generator", "agrees"]
        )
        nonzero = {d: v for d, v in R["per_degree"].items() if v}
        if nonzero:
            text += "\n\n" + table_text(
                {"weight": list(nonzero), "dim": list(nonzero.values())}
            )
        return text


class NormalFormCommand(CommandBase):
    name = "nf"
    inputs = ("p", "eta")

    def compute(self):
        eta = self.spec.eta_form()
        if eta is None:
            raise ProblemValidationError("The nf command needs a top form ('eta')")
        return normal_form_nform(self.f, self.W, self.spec.p, eta)

    def to_results(self, result):
        results = result.to_dict(self.names)
        results["representative"] = result.representative().to_string(self.names)
        return results

    def body_text(self):
        R = self.results
        text = results_table(R, ["p", "representative", "witness"])
        text += "\n\n" + table_text(
            {"j": list(R["h"]), "h_j": list(R["h"].values())}
        )
        return text


class SpectralCommand(CommandBase):
    name = "spectral"
    inputs = ("p", "q", "max degree")

    @property
    def q(self):
        if self.spec.q is not None:
            return self.spec.q
        return self.n - 1 - self.spec.p

    def default_max_degree(self):
        return 2 * self.N + self.W.total

    def compute(self):
        return e2_degeneration_check(
            self.f, self.W, self.spec.p, self.q, self.max_degree, self.threads
        )

    def dataframe(self):
        return self.report.to_dataframe()

    def body_text(self):
        R = self.results
        text = results_table(R, ["p", "q", "r", "projective", "passed"])
        frame = self.dataframe()
        frame["inclusion"] = [scalar_text(v) for v in frame["inclusion"]]
        text += "\n\n" + table_text(frame)
        for entry in R["degrees"]:
            if entry["witness"] is not None:
                text += f"\n\ncounterexample in weight {entry['degree']}: "
                text += entry["witness"]
        return text


class SpectralProjectiveCommand(SpectralCommand):
    name = "spectral-proj"
    inputs = ("p", "q", "eta")

    @property
    def q(self):
        if self.spec.q is not None:
            return self.spec.q
        q = self.n - 2 - self.spec.p
        if q <= 0:
            raise ProblemValidationError(
                f"Give q explicitly: the default n - 2 - p = {q} is not positive"
            )
        return q

    def compute(self):
        return projective_degeneration_check(
            self.f, self.W, self.spec.p, self.q, self.spec.eta_form()
        )


class PredictCommand(CommandBase):
    name = "predict"
    requires_poly = False
    inputs = ("betti M", "betti S")

    def compute(self):
        if self.spec.betti_M is None or self.spec.betti_S is None:
            raise ProblemValidationError(
                "The predict command needs the Betti numbers of M and S"
            )
        return regular_case_predictor(self.spec.betti_M, self.spec.betti_S)

    def to_results(self, dimensions):
        return {
            "betti_M": list(self.spec.betti_M),
            "betti_S": list(self.spec.betti_S),
            "dimensions": dimensions,
        }

    def body_text(self):
        R = self.results
        text = results_table(R, ["betti_M", "betti_S"])
        text += "\n\n" + table_text(
            {"k": list(range(len(R["dimensions"]))), "dim H^k_f": R["dimensions"]}
        )
        return text


class ProbeQuotientCommand(CommandBase):
    name = "probe-quotient"
    inputs = ("max degree",)

    def default_max_degree(self):
        return 20

    def compute(self):
        return germ_quotient_probe(self.f, self.W, self.max_degree)

    def to_results(self, dimensions):
        return {
            "degree": self.N,
            "max_degree": self.max_degree,
            "dimensions": dimensions,
        }

    def dataframe(self):
        dims = self.results["dimensions"]
        return pandas.DataFrame({"weight": list(range(len(dims))), "dim": dims})

    def body_text(self):
        text = results_table(self.results, ["degree", "max_degree"])
        return text + "\n\n" + table_text(self.dataframe())


class VerifyCommand(CommandBase):
    name = "verify"
    requires_poly = False

    @property
    def passed(self):
        return self.report is not None and self.report.passed

    def compute(self):
        suite = VerificationSuite(
            seed=self.spec.seed, samples=self.spec.samples, threads=self.threads
        )
        return suite.run()

    def to_results(self, report):
        return report.to_dict()

    def dataframe(self):
        return self.report.to_dataframe()

    def header_text(self):
        return (
            f"{self.description_text()} The random instances are drawn with the "
            f"seed {self.spec.seed}. Each randomized check draws a fixed multiple of "
            f"{self.spec.samples} instances."
        )

    def body_text(self):
        frame = self.dataframe()
        frame["passed"] = [scalar_text(v) for v in frame["passed"]]
        text = table_text(frame)
        for check in self.results["checks"]:
            for failure in check["failures"]:
                text += f"\n{check['name']} failed: {failure}"
        verdict = "All checks passed." if self.passed else "Some checks FAILED."
        return text + "\n\n" + verdict


COMMANDS = {
    cls.name: cls
    for cls in (
        MilnorCommand,
        HodgeCommand,
        CohomCommand,
        Table1Command,
        H0Command,
        NormalFormCommand,
        SpectralCommand,
        SpectralProjectiveCommand,
        PredictCommand,
        ProbeQuotientCommand,
        VerifyCommand,
    )
}
