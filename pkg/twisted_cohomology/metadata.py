"""This file contains metadata to help describe the results of the
twisted-cohomology commands.

The keys of ``metadata["results"]`` are the keys of the ``results`` object in
the JSON report; "calculation" lists the commands that emit each one. The
text reports use the descriptions as labels.
"""

metadata = {}

metadata["schema_version"] = "1.0"

"""The commands and what they compute."""
metadata["commands"] = {
    "milnor": "Milnor algebra: Gröbner basis of the Jacobian ideal and monomial basis",
    "hodge": "Graded dimensions of the Milnor algebra and the Hodge numbers",
    "cohom": "Graded dimensions of the twisted cohomology up to a maximal weight",
    "table1": "Computed top cohomology against the predicted dimension table",
    "h0": "Dimension and generator of H^0",
    "nf": "Normal form of a top-degree form",
    "spectral": "Local degeneration of the pole spectral sequence",
    "spectral-proj": "Degeneration on Euler-primitive forms (projective case)",
    "predict": "Twisted cohomology of a regular function from Betti numbers",
    "probe-quotient": "Graded dimensions of Q[x]/(f)",
    "verify": "The full property-verification suite",
}

"""Results that the commands produce."""
metadata["results"] = {
    "degree": {
        "calculation": ["milnor", "hodge", "cohom", "probe-quotient"],
        "description": "weighted degree N of f",
        "dimensionality": "scalar",
        "type": "integer",
    },
    "milnor_number": {
        "calculation": ["milnor", "hodge", "table1"],
        "description": "Milnor number μ",
        "dimensionality": "scalar",
        "type": "integer",
    },
    "basis": {
        "calculation": ["milnor"],
        "description": "monomial basis of the Milnor algebra",
        "dimensionality": ["milnor_number"],
        "type": "string",
    },
    "jacobian_groebner_basis": {
        "calculation": ["milnor"],
        "description": "reduced Gröbner basis of the Jacobian ideal",
        "dimensionality": ["n_generators"],
        "type": "string",
    },
    "order": {
        "calculation": ["milnor"],
        "description": "monomial order of the Gröbner basis",
        "dimensionality": "scalar",
        "type": "string",
    },
    "graded_dims": {
        "calculation": ["milnor", "hodge"],
        "description": "dimension of each weighted piece of the Milnor algebra",
        "dimensionality": {"weight": "integer"},
        "type": "integer",
    },
    "hodge": {
        "calculation": ["milnor", "hodge", "table1"],
        "description": "Hodge numbers h^(q,n-q)",
        "dimensionality": {"q": "integer"},
        "type": "integer",
    },
    "poincare_series": {
        "calculation": ["hodge"],
        "description": "coefficients of the Poincaré polynomial, constant first",
        "dimensionality": ["n_coefficients"],
        "type": "integer",
    },
    "hodge_sum": {
        "calculation": ["hodge"],
        "description": "sum of the Hodge numbers",
        "dimensionality": "scalar",
        "type": "integer",
    },
    "max_degree": {
        "calculation": ["cohom", "table1", "h0", "probe-quotient"],
        "description": "maximal weighted degree D of the truncation",
        "dimensionality": "scalar",
        "type": "integer",
    },
    "groups": {
        "calculation": ["cohom"],
        "description": "graded dimensions of H^k, one entry per degree k",
        "dimensionality": ["n_groups"],
        "type": "json",
    },
    "rows": {
        "calculation": ["table1"],
        "description": "predicted and computed dimensions for each twist p",
        "dimensionality": ["n_twists"],
        "type": "json",
    },
    "agrees": {
        "calculation": ["table1", "h0"],
        "description": "whether every computed dimension matches its prediction",
        "dimensionality": "scalar",
        "type": "boolean",
    },
    "dimension": {
        "calculation": ["h0"],
        "description": "dimension of H^0 up to the maximal weight",
        "dimensionality": "scalar",
        "type": "integer",
    },
    "expected": {
        "calculation": ["h0"],
        "description": "expected dimension of H^0",
        "dimensionality": "scalar",
        "type": "integer",
    },
    "generator": {
        "calculation": ["h0"],
        "description": "generator of H^0, normalized to leading coefficient 1",
        "dimensionality": "scalar",
        "type": "string",
    },
    "per_degree": {
        "calculation": ["h0"],
        "description": "dimension in each weighted degree",
        "dimensionality": {"weight": "integer"},
        "type": "integer",
    },
    "h": {
        "calculation": ["nf"],
        "description": "the polynomials h_j of the normal form",
        "dimensionality": {"j": "integer"},
        "type": "string",
    },
    "witness": {
        "calculation": ["nf"],
        "description": "the (n-1)-form γ with η - normal form = d_f γ",
        "dimensionality": "scalar",
        "type": "string",
    },
    "representative": {
        "calculation": ["nf"],
        "description": "the normal form as a top-degree form",
        "dimensionality": "scalar",
        "type": "string",
    },
    "p": {
        "calculation": ["cohom", "h0", "nf", "spectral", "spectral-proj"],
        "description": "twist p",
        "dimensionality": "scalar",
        "type": "integer",
    },
    "q": {
        "calculation": ["spectral", "spectral-proj"],
        "description": "filtration index q",
        "dimensionality": "scalar",
        "type": "integer",
    },
    "r": {
        "calculation": ["spectral", "spectral-proj"],
        "description": "page of the spectral sequence",
        "dimensionality": "scalar",
        "type": "integer",
    },
    "projective": {
        "calculation": ["spectral", "spectral-proj"],
        "description": "whether only Euler-primitive forms were checked",
        "dimensionality": "scalar",
        "type": "boolean",
    },
    "passed": {
        "calculation": ["spectral", "spectral-proj", "verify"],
        "description": "whether every check passed",
        "dimensionality": "scalar",
        "type": "boolean",
    },
    "degrees": {
        "calculation": ["spectral", "spectral-proj"],
        "description": "the inclusion d(Z_2) ⊆ B_1 for each weight",
        "dimensionality": ["n_weights"],
        "type": "json",
    },
    "betti_M": {
        "calculation": ["predict"],
        "description": "Betti numbers of M",
        "dimensionality": ["n_betti"],
        "type": "integer",
    },
    "betti_S": {
        "calculation": ["predict"],
        "description": "Betti numbers of S",
        "dimensionality": ["n_betti"],
        "type": "integer",
    },
    "dimensions": {
        "calculation": ["predict", "probe-quotient"],
        "description": "dimension for each degree",
        "dimensionality": ["n_degrees"],
        "type": "integer",
    },
    "seed": {
        "calculation": ["verify"],
        "description": "seed of the random generator",
        "dimensionality": "scalar",
        "type": "integer",
    },
    "samples": {
        "calculation": ["verify"],
        "description": "random instances per check",
        "dimensionality": "scalar",
        "type": "integer",
    },
    "checks": {
        "calculation": ["verify"],
        "description": "outcome of each property check",
        "dimensionality": ["n_checks"],
        "type": "json",
    },
}
