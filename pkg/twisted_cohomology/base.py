# -*- coding: utf-8 -*-

"""Base class for the commands of the twisted-cohomology tool.

A command takes a validated ProblemSpec, computes its results as a JSON-ready
dictionary, and renders the same numbers as text: a short description of what
was done followed by aligned tables.
"""

import logging

from seamm_util.printing import FormattedText as __
from tabulate import tabulate

from .groebner import quasi_homogeneous_degree
from .metadata import metadata
from .problem_parameters import parameters

logger = logging.getLogger(__name__)


def table_text(data, headers="keys"):
    """Render a DataFrame or a list of rows as a psql-style table."""
    if hasattr(data, "to_dict"):
        data = data.to_dict(orient="list")
    return tabulate(data, headers=headers, tablefmt="psql", disable_numparse=True)


def scalar_text(value):
    if isinstance(value, bool):
        return "yes" if value else "no"
    if value is None:
        return "-"
    if isinstance(value, (list, tuple)):
        return ", ".join(scalar_text(v) for v in value)
    if isinstance(value, dict):
        return ", ".join(f"{k}: {scalar_text(v)}" for k, v in value.items())
    return str(value)


def results_table(results, keys=None):
    """A two-column table of results labelled with their metadata descriptions."""
    if keys is None:
        keys = list(results)
    rows = []
    for key in keys:
        if key not in results:
            continue
        label = metadata["results"].get(key, {}).get("description", key)
        rows.append([label, scalar_text(results[key])])
    return table_text(rows, headers=["Result", "Value"])


class CommandBase:
    """A base class for the commands.

    Parameters
    ----------
    spec : ProblemSpec
        The validated problem.
    options : dict, optional
        Options from the configuration file.
    """

    name = None
    requires_poly = True
    # problem parameters echoed in the text report when given
    inputs = ()

    def __init__(self, spec, options=None):
        self.spec = spec
        self.options = {} if options is None else options
        self.report = None
        self.results = None

    @property
    def names(self):
        return self.spec.vars

    @property
    def f(self):
        return self.spec.f

    @property
    def W(self):
        return self.spec.W

    @property
    def n(self):
        return self.spec.n

    @property
    def threads(self):
        return self.spec.threads

    @property
    def N(self):
        return quasi_homogeneous_degree(self.f, self.W)

    @property
    def max_degree(self):
        """D from the problem, or the command's default."""
        if self.spec.max_degree is not None:
            return self.spec.max_degree
        return self.default_max_degree()

    def default_max_degree(self):
        return 3 * self.N + self.W.total

    @property
    def passed(self):
        """Whether the tool should exit with success."""
        return True

    def description_text(self):
        """Prepare information about what this command does."""
        return metadata["commands"][self.name] + "."

    def compute(self):
        """Do the work, returning the report object."""
        raise NotImplementedError()

    def to_results(self, report):
        """The results dictionary of the JSON document."""
        return report.to_dict(self.names)

    def dataframe(self):
        """The per-degree table for --csv, or None."""
        return None

    def run(self):
        """Compute and return the results dictionary."""
        logger.info(f"{self.name}: {self.description_text()}")
        self.report = self.compute()
        self.results = self.to_results(self.report)
        return self.results

    def analyze(self, indent=4 * " "):
        """The text report, with the same numbers as the results."""
        if self.results is None:
            self.run()
        text = self.header_text()
        text = str(__(text, indent=indent)) + "\n\n"
        inputs = self.inputs_text()
        if inputs:
            text += "\n".join(indent + line for line in inputs.splitlines())
            text += "\n\n"
        body = self.body_text()
        text += "\n".join(indent + line for line in body.splitlines())
        return text + "\n"

    def header_text(self):
        text = self.description_text()
        if self.requires_poly:
            text += (
                f" The polynomial is f = {self.spec.poly} in the variables "
                f"{', '.join(self.names)} with weights "
                f"{', '.join(str(w) for w in self.spec.weights)}."
            )
        return text

    def inputs_text(self):
        """The given problem parameters, labelled with their descriptions."""
        rows = []
        for key in self.inputs:
            value = getattr(self.spec, key.replace(" ", "_"))
            if value is not None:
                rows.append([parameters[key]["description"], scalar_text(value)])
        if not rows:
            return ""
        return table_text(rows, headers=["Parameter", "Value"])

    def body_text(self):
        return results_table(self.results)
