# Copyright (c) 2020 abmod developers
# This file is part of abmod, exact computations with regular (a,b)-modules
# Licensed under the MIT License

report_fields = {
    "rank": "Rank of the module over the formal power series ring in b",
    "trunc": "Working precision: number of powers of b carried by every series",
    "simple_pole": "True when a.E is contained in b.E (the a-matrix vanishes at b = 0)",
    "regular": "True when the saturation by b^-1 a stabilizes within the iteration cap",
    "iterations": "Number of lattice-changing steps of the fixed point iteration",
    "bernstein": "Minimal polynomial of -b^-1 a acting on the saturation modulo b",
    "dual_bernstein": "Minimal polynomial of -b^-1 a acting on the biggest simple pole submodule modulo b",
    "predictions": "Pole predictions, one per class of roots modulo the integers",
    "chain": "Jordan chain e_1..e_d with a.e_j = beta.b.e_j + b.e_(j-1)",
    "cases": "Per-case outcome of a verification suite",
    "summary": "Number of passed, failed and inconclusive cases per suite",
}

caveats = {
    "multiplicity": "The order d of a predicted pole is the multiplicity of alpha in the minimal polynomial.",
    "symbolic": "Classes of irrational roots carry no numeric pole prediction.",
    "precision": "A morphism space searched by a duality check was still changing at the working precision.",
}

profiles = {
    # random simple pole start module followed by an a-stable closure
    "default": {"upper": True, "closure": True},
    "diagonal": {"upper": False, "closure": True},
    "simple_pole": {"upper": True, "closure": False},
}

config = {
    "trunc_per_rank": 4,
    "trunc_offset": 10,
    "max_trunc": 320,
    "iteration_cap_per_rank": 2,
    "iteration_cap_offset": 4,
    "height_bound": 5,
    "max_valuation": 2,
    "generation_retries": 20,
    "shift_bound": None,
    "sweep_coefficients": [1, 0, -1, 2, -2],
    "sweep_limit": 4096,
    "random_tries": 256,
    "seed": 0,
    "n_jobs": 1,
    "deltas": [0, 1, 2],
}


def default_trunc(rank):
    """Default working precision for a module of the given rank.

    :param int rank: rank of the module
    :return: 4 * rank + 10 with the default configuration
    :rtype: int
    """
    return config["trunc_per_rank"] * rank + config["trunc_offset"]


def iteration_cap(rank):
    """Number of lattice-growth steps allowed before a fixed point gives up.

    :param int rank: rank of the module
    :return: 2 * rank + 4 with the default configuration
    :rtype: int
    """
    return config["iteration_cap_per_rank"] * rank + config["iteration_cap_offset"]


def get_field_description(name):
    """Gets the description of a report field.

    :param str name: the name of the field.

    :returns str: the description of the field. If not found, returns an empty string
    """
    if not isinstance(name, str):
        raise TypeError("Field name should be a string.")
    return report_fields.get(name, "")
