# -*- coding: utf-8 -*-
"""Control parameters for a twisted cohomology problem.

A problem is read from a JSON file and/or command-line flags. Each parameter
is declared once in ``parameters`` below; the command-line options are
generated from the same dictionary and a ProblemSpec validates against it.
Example problem file::

    {
        "vars": ["x", "y"],
        "weights": [1, 1],
        "poly": "x^3 + y^3",
        "p": 0,
        "max degree": 12
    }
"""

from dataclasses import dataclass, field
import json
import logging
from pathlib import Path
from typing import List, Optional

from .errors import PreconditionError, ProblemValidationError
from .parser import parse_form, parse_poly
from .polynomial import WeightSystem, default_variable_names

logger = logging.getLogger(__name__)

parameters = {
    "vars": {
        "default": None,
        "kind": "list of names",
        "flag": "--vars",
        "description": "Variables:",
        "help_text": "The variable names, comma separated, e.g. x,y,z.",
    },
    "weights": {
        "default": None,
        "kind": "list of integers",
        "flag": "--weights",
        "description": "Weights:",
        "help_text": "The positive weight of each variable, all 1 by default.",
    },
    "poly": {
        "default": None,
        "kind": "string",
        "flag": "--poly",
        "description": "Polynomial f:",
        "help_text": "The quasi-homogeneous polynomial f, e.g. 'x^3 + y^3'.",
    },
    "p": {
        "default": 0,
        "kind": "integer",
        "flag": "-p",
        "description": "Twist p:",
        "help_text": "The twist p of the differential d_f^(p).",
    },
    "k": {
        "default": None,
        "kind": "integer",
        "flag": "-k",
        "description": "Form degree k:",
        "help_text": "The degree of the cohomology group; all degrees if omitted.",
    },
    "max degree": {
        "default": None,
        "kind": "integer",
        "flag": "--max-degree",
        "description": "Maximal weight D:",
        "help_text": (
            "Truncate the graded computation at this weighted degree. The "
            "default depends on the command, 3N + Σw for most."
        ),
    },
    "q": {
        "default": None,
        "kind": "integer",
        "flag": "-q",
        "description": "Filtration index q:",
        "help_text": "The index q of the pole filtration; n - 1 - p by default.",
    },
    "p range": {
        "default": None,
        "kind": "range",
        "flag": "--p-range",
        "description": "Range of p:",
        "help_text": "Inclusive range A:B of twists for the table, 0:n+1 by default.",
    },
    "betti M": {
        "default": None,
        "kind": "list of integers",
        "flag": "--betti-m",
        "description": "Betti numbers of M:",
        "help_text": "b_0, b_1, ... of the manifold M.",
    },
    "betti S": {
        "default": None,
        "kind": "list of integers",
        "flag": "--betti-s",
        "description": "Betti numbers of S:",
        "help_text": "b_0, b_1, ... of the hypersurface S = {f = 0}.",
    },
    "eta": {
        "default": None,
        "kind": "form",
        "flag": "--eta",
        "description": "Top form η:",
        "help_text": "The top-degree form to put in normal form, e.g. 'x*dx^dy'.",
    },
    "seed": {
        "default": 20240101,
        "kind": "integer",
        "flag": "--seed",
        "description": "Random seed:",
        "help_text": "The seed for the randomized checks of 'verify'.",
    },
    "samples": {
        "default": 200,
        "kind": "integer",
        "flag": "--samples",
        "description": "Base sample count:",
        "help_text": "The base count of random instances for the checks of 'verify'.",
    },
    "threads": {
        "default": 1,
        "kind": "integer",
        "flag": "--threads",
        "description": "Threads:",
        "help_text": "Number of threads for independent degree slices (a hint).",
    },
}

# The JSON problem file uses underscores as well as the spaced names
ALIASES = {key.replace(" ", "_"): key for key in parameters}
ALIASES.update({"betti_m": "betti M", "betti_s": "betti S"})


def _split(value):
    if isinstance(value, str):
        return [item.strip() for item in value.split(",") if item.strip() != ""]
    return list(value)


def convert(key, value):
    """Convert a raw flag or JSON value to the parameter's kind."""
    if value is None:
        return None
    kind = parameters[key]["kind"]
    try:
        if kind == "integer":
            if isinstance(value, bool):
                raise ValueError("booleans are not integers")
            return int(value)
        if kind == "list of integers":
            return [int(v) for v in _split(value)]
        if kind == "list of names":
            return [str(v) for v in _split(value)]
        if kind == "range":
            if isinstance(value, str):
                low, _, high = value.partition(":")
                return (int(low), int(high if high else low))
            low, high = value
            return (int(low), int(high))
        return str(value)
    except (TypeError, ValueError) as e:
        raise ProblemValidationError(f"Invalid value for '{key}': {value!r} ({e})")


def read_problem_file(path):
    """The parameters in a JSON problem file, with canonical keys."""
    path = Path(path)
    try:
        data = json.loads(path.read_text())
    except FileNotFoundError:
        raise ProblemValidationError(f"The problem file '{path}' does not exist")
    except OSError as e:
        raise ProblemValidationError(f"Cannot read the problem file '{path}': {e}")
    except UnicodeDecodeError as e:
        raise ProblemValidationError(f"The problem file '{path}' is not UTF-8: {e}")
    except json.JSONDecodeError as e:
        raise ProblemValidationError(f"The problem file '{path}' is not JSON: {e}")
    if not isinstance(data, dict):
        raise ProblemValidationError("The problem file must hold a JSON object")
    # An emitted report echoes its inputs; accept it as a problem file
    if "inputs" in data and isinstance(data["inputs"], dict):
        data = data["inputs"]
    result = {}
    for key, value in data.items():
        canonical = key if key in parameters else ALIASES.get(key.lower())
        if canonical is None:
            raise ProblemValidationError(f"Unknown field '{key}' in the problem file")
        result[canonical] = convert(canonical, value)
    return result


@dataclass
class ProblemSpec:
    """A validated problem."""

    vars: List[str]
    weights: List[int]
    poly: Optional[str] = None
    p: int = 0
    k: Optional[int] = None
    max_degree: Optional[int] = None
    q: Optional[int] = None
    p_range: Optional[tuple] = None
    betti_M: Optional[List[int]] = None
    betti_S: Optional[List[int]] = None
    eta: Optional[str] = None
    seed: int = 20240101
    samples: int = 200
    threads: int = 1
    _f: object = field(default=None, repr=False, compare=False)

    @classmethod
    def from_values(cls, values, require_poly=True):
        """Build and validate a spec from canonical parameter values.

        Parameters
        ----------
        values : dict
            Canonical keys from ``parameters``; missing keys take defaults.
        require_poly : bool
            Whether the command needs f.
        """
        P = {key: values.get(key, parameters[key]["default"]) for key in parameters}
        for key in ("seed", "samples", "threads", "p"):
            if P[key] is None:
                P[key] = parameters[key]["default"]

        names = P["vars"]
        poly = P["poly"]
        if poly is None and require_poly:
            raise ProblemValidationError("A polynomial f is required ('poly')")
        if names is None:
            if P["weights"] is not None:
                names = default_variable_names(len(P["weights"]))
            elif require_poly:
                raise ProblemValidationError("The variable names are required ('vars')")
            else:
                names = []
        if len(set(names)) != len(names):
            raise ProblemValidationError(
                f"The variable names must be distinct: {names}"
            )
        for name in names:
            if not name.isidentifier() or (name.startswith("d") and name[1:] in names):
                raise ProblemValidationError(f"Invalid variable name '{name}'")
        weights = P["weights"]
        if weights is None:
            weights = [1] * len(names)
        if len(weights) != len(names):
            raise ProblemValidationError(
                f"{len(weights)} weights given for {len(names)} variables"
            )
        if any(w < 1 for w in weights):
            raise ProblemValidationError(f"Weights must be positive: {weights}")
        if P["samples"] < 1:
            raise ProblemValidationError("The number of samples must be positive")
        if P["threads"] < 1:
            raise ProblemValidationError("The number of threads must be positive")
        if P["max degree"] is not None and P["max degree"] < 0:
            raise ProblemValidationError("The maximal degree must be non-negative")
        spec = cls(
            vars=names,
            weights=weights,
            poly=poly,
            p=P["p"],
            k=P["k"],
            max_degree=P["max degree"],
            q=P["q"],
            p_range=P["p range"],
            betti_M=P["betti M"],
            betti_S=P["betti S"],
            eta=P["eta"],
            seed=P["seed"],
            samples=P["samples"],
            threads=P["threads"],
        )
        if poly is not None:
            spec.f  # parse now so that errors surface during validation
        return spec

    @property
    def n(self):
        return len(self.vars)

    @property
    def W(self):
        try:
            return WeightSystem(tuple(self.weights))
        except PreconditionError as e:
            raise ProblemValidationError(str(e))

    @property
    def f(self):
        if self._f is None:
            if self.poly is None:
                raise ProblemValidationError("A polynomial f is required ('poly')")
            self._f = parse_poly(self.poly, self.vars)
        return self._f

    def eta_form(self):
        if self.eta is None:
            return None
        return parse_form(self.eta, self.vars)

    def to_dict(self):
        """The inputs, echoed in reports; re-reading them gives the same spec."""
        result = {
            "vars": list(self.vars),
            "weights": list(self.weights),
            "poly": self.poly,
            "p": self.p,
        }
        optional = {
            "k": self.k,
            "max_degree": self.max_degree,
            "q": self.q,
            "p_range": None if self.p_range is None else list(self.p_range),
            "betti_M": self.betti_M,
            "betti_S": self.betti_S,
            "eta": self.eta,
        }
        result.update({k: v for k, v in optional.items() if v is not None})
        result["seed"] = self.seed
        result["samples"] = self.samples
        return result
