# Copyright (c) 2020 abmod developers
# This file is part of abmod, exact computations with regular (a,b)-modules
# Licensed under the MIT License

from ..base import Module
from ..config import iteration_cap
from ..core.bernstein import bernstein_of_simple_pole, predict_poles
from ..core.fixed_points import biggest_simple_pole_sub, saturate, series_coordinates
from ..core.jordan import chain_is_exact, chain_residuals, jordan_chain_lift
from ..core.module import AbModule, is_simple_pole
from ..core.precision import with_precision_retry, working_trunc
from ..errors import NotRegular, PrecisionExhausted
from ..constructors.factories import e_lambda, jordan_module, pham, random_regular
from ..io.description import ModuleDescription, print_description
from ..linalg.matrix import vector_valuation
from ..series import format_rational
from .report import (
    bernstein_to_dict,
    lattice_to_dict,
    prediction_to_dict,
    valuation_to_json,
    vector_to_list,
)


class ModuleBuilder(Module):
    """Turns a ModuleDescription into an AbModule and records the effective precision settings.
    """

    def __init__(
        self,
        read_key="description",
        store_key="module",
        trunc=None,
        max_iter=None,
        parameters_key="parameters",
        digest_key="input_digest",
    ):
        super().__init__()
        self.read_key = read_key
        self.store_key = store_key
        self.trunc = trunc
        self.max_iter = max_iter
        self.parameters_key = parameters_key
        self.digest_key = digest_key

    def transform(self, datastore):
        description = self.get_datastore_object(datastore, self.read_key, dtype=ModuleDescription)
        module = description.to_module()
        trunc = working_trunc(module, self.trunc)
        max_iter = self.max_iter if self.max_iter is not None else iteration_cap(module.rank)

        datastore[self.store_key] = module.with_trunc(trunc)
        datastore[self.digest_key] = description.digest()
        datastore["description_text"] = print_description(description)
        parameters = datastore.setdefault(self.parameters_key, {})
        parameters.update({"trunc": trunc, "max_iter": max_iter})
        self.logger.info(f"{module!r} loaded, working precision {trunc}.")
        return datastore


class InfoCalculator(Module):
    """Rank, simple pole test and regularity of a module.
    """

    def __init__(self, read_key="module", store_key="results", max_iter=None):
        super().__init__()
        self.read_key = read_key
        self.store_key = store_key
        self.max_iter = max_iter

    def transform(self, datastore):
        module = self.get_datastore_object(datastore, self.read_key, dtype=AbModule)
        results = self.results(datastore, self.store_key)
        results["rank"] = module.rank
        results["trunc"] = module.trunc
        results["simple_pole"] = is_simple_pole(module)
        try:
            sat = with_precision_retry(saturate, module, trunc=module.trunc, max_iter=self.max_iter)
        except NotRegular as exc:
            results["regular"] = False
            results["iterations"] = exc.cap
        except PrecisionExhausted as exc:
            self.logger.warning(f"regularity undecided: {exc}")
            results["regular"] = "undecided"
            results["iterations"] = None
        else:
            results["regular"] = True
            results["iterations"] = sat.iterations
        return datastore


class BernsteinCalculator(Module):
    """Bernstein polynomial (saturation) or dual Bernstein polynomial (simple pole submodule).
    """

    def __init__(self, read_key="module", store_key="results", dual=False, max_iter=None):
        super().__init__()
        self.read_key = read_key
        self.store_key = store_key
        self.dual = dual
        self.max_iter = max_iter

    def transform(self, datastore):
        module = self.get_datastore_object(datastore, self.read_key, dtype=AbModule)
        fixed_point = biggest_simple_pole_sub if self.dual else saturate
        result = with_precision_retry(
            fixed_point, module, trunc=module.trunc, max_iter=self.max_iter
        )
        poly = bernstein_of_simple_pole(result.module)

        key = "dual_bernstein" if self.dual else "bernstein"
        results = self.results(datastore, self.store_key)
        results[key] = bernstein_to_dict(poly)
        results["lattice"] = lattice_to_dict(result.lattice)
        results["iterations"] = result.iterations
        datastore[key] = poly
        self.logger.info(f"{key}: {poly}")
        return datastore


class PolePredictor(Module):
    """Pole predictions, one per class of Bernstein roots modulo the integers.
    """

    def __init__(self, n, read_key="bernstein", store_key="results", shift_bound=None):
        super().__init__()
        if n < 1:
            raise ValueError("number of variables should be at least 1")
        self.n = n
        self.read_key = read_key
        self.store_key = store_key
        self.shift_bound = shift_bound

    def transform(self, datastore):
        poly = datastore[self.read_key]
        predictions = predict_poles(poly, self.n, self.shift_bound)
        results = self.results(datastore, self.store_key)
        results["n"] = self.n
        results["predictions"] = [prediction_to_dict(p) for p in predictions]
        if any(not p.symbolic for p in predictions):
            self.add_caveats(datastore, "multiplicity")
        if any(p.symbolic for p in predictions):
            self.add_caveats(datastore, "symbolic")
        return datastore


class JordanLifter(Module):
    """Jordan chain lifted in the biggest simple pole submodule F of a module.
    """

    def __init__(self, beta, d, read_key="module", store_key="results", max_iter=None):
        super().__init__()
        self.beta = beta
        self.d = d
        self.read_key = read_key
        self.store_key = store_key
        self.max_iter = max_iter

    def transform(self, datastore):
        module = self.get_datastore_object(datastore, self.read_key, dtype=AbModule)
        sub = with_precision_retry(
            biggest_simple_pole_sub, module, trunc=module.trunc, max_iter=self.max_iter
        )
        chain = jordan_chain_lift(sub.module, self.beta, self.d)
        residuals = chain_residuals(sub.module, self.beta, chain)

        results = self.results(datastore, self.store_key)
        results["beta"] = format_rational(self.beta)
        results["d"] = self.d
        results["submodule"] = lattice_to_dict(sub.lattice)
        results["chain"] = [vector_to_list(v) for v in chain]
        results["chain_ambient"] = [vector_to_list(series_coordinates(sub, v)) for v in chain]
        results["residual_valuations"] = [valuation_to_json(vector_valuation(r)) for r in residuals]
        results["residual_zero"] = chain_is_exact(sub.module, self.beta, chain)
        results["precision"] = sub.module.trunc
        return datastore


class ModuleGenerator(Module):
    """Builds a module from a constructor and stores its description.
    """

    def __init__(self, kind, args, trunc=None, store_key="description", text_key="description_text"):
        """Initialize an instance.

        :param str kind: "pham", "jordan", "elambda" or "random"
        :param tuple args: constructor arguments, e.g. ((3, 3),) for pham
        :param int trunc: truncation of the generated module (optional)
        """
        super().__init__()
        constructors = {
            "pham": pham,
            "jordan": jordan_module,
            "elambda": e_lambda,
            "random": random_regular,
        }
        if kind not in constructors:
            raise ValueError(f"unknown generator {kind!r}, use one of {sorted(constructors)}")
        self.kind = kind
        self.constructor = constructors[kind]
        self.args = args
        self.trunc = trunc
        self.store_key = store_key
        self.text_key = text_key

    def provenance(self):
        return f"{self.kind}" + "".join(f" {a}" for a in self.args)

    def transform(self, datastore):
        if self.kind == "random":
            k, seed, profile = self.args
            module = random_regular(k, seed, trunc=self.trunc, profile=profile)
        else:
            module = self.constructor(*self.args, trunc=self.trunc)
        description = ModuleDescription.from_module(module, self.provenance())
        datastore[self.store_key] = description
        datastore[self.text_key] = print_description(description)
        self.logger.info(f"Generated {module!r}.")
        return datastore
