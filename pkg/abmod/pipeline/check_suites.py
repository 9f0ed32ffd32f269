# Copyright (c) 2020 abmod developers
# This file is part of abmod, exact computations with regular (a,b)-modules
# Licensed under the MIT License

import numpy as np
import pandas as pd
from joblib import Parallel, delayed
from tqdm import tqdm

from ..base import Module
from ..config import config
from ..constructors.factories import random_regular
from ..core.bernstein import bernstein, dual_bernstein
from ..core.fixed_points import biggest_simple_pole_sub, saturate
from ..core.precision import with_precision_retry
from ..duality.checks import (
    discover_delta,
    find_self_duality,
    reflection_check,
    verify_bidual,
    verify_prop_dual,
    verify_simple_pole_hom,
    verify_twist_hom,
)
from ..duality.hom import e_delta, twist
from ..errors import NotFound
from ..io.description import load_module
from ..series import format_rational

SUITES = ("lemma32", "bidual", "twist", "propdual", "reflection")

PASS, FAIL, INCONCLUSIVE = "pass", "fail", "inconclusive"


def _status(flag):
    return PASS if flag else FAIL


def check_lemma32(module, other):
    """Hom between simple pole modules has a simple pole, on (E~, F) and (F, E~) or on a random pair"""
    if other is None:
        sat = with_precision_retry(saturate, module).module
        sub = with_precision_retry(biggest_simple_pole_sub, module).module
        pairs = [(sat, sub), (sub, sat)]
    else:
        pairs = [(module, other), (other, module)]
    flags = [verify_simple_pole_hom(first, second) for first, second in pairs]
    return _status(all(flags)), {"pairs": len(pairs), "simple_pole": flags}


def check_bidual(module, deltas):
    flags = {format_rational(delta): verify_bidual(module, delta) for delta in deltas}
    return _status(all(flags.values())), {"deltas": flags}


def check_twist(module, other):
    targets = [module, twist(module), e_delta(1, module.trunc)]
    if other is not None:
        targets.append(other)
    flags = [verify_twist_hom(module, target) for target in targets]
    involution = twist(twist(module)).a_matrix == module.a_matrix
    return _status(all(flags) and involution), {"hom": flags, "involution": involution}


def _self_dual_delta(module, delta):
    if delta is not None:
        return delta
    return discover_delta(bernstein(module), dual_bernstein(module))


def check_propdual(module, delta, seed):
    delta = _self_dual_delta(module, delta)
    if delta is None:
        return INCONCLUSIVE, {"reason": "no candidate delta"}
    try:
        certificate = find_self_duality(module, delta, seed=seed)
    except NotFound as exc:
        return INCONCLUSIVE, {
            "delta": format_rational(delta),
            "reason": str(exc),
            "precision_caveat": exc.precision_caveat,
        }
    report = verify_prop_dual(module, delta, certificate, seed=seed)
    details = {
        "delta": format_rational(delta),
        "saturation_map": report.saturation_map is not None,
        "submodule_map": report.submodule_map is not None,
        "reflection": report.reflection,
        "precision_caveat": report.precision_caveat,
    }
    if not report.reflection:
        return FAIL, details
    if report.saturation_map is None or report.submodule_map is None:
        return INCONCLUSIVE, details
    return PASS, details


def check_reflection(module, delta, seed):
    b_poly, b_dual = bernstein(module), dual_bernstein(module)
    candidate = delta if delta is not None else discover_delta(b_poly, b_dual)
    if candidate is None:
        return INCONCLUSIVE, {"reason": "no candidate delta"}
    details = {"delta": format_rational(candidate)}
    try:
        certificate = find_self_duality(module, candidate, seed=seed)
    except NotFound as exc:
        details["reason"] = str(exc)
        details["precision_caveat"] = exc.precision_caveat
        return INCONCLUSIVE, details
    details["precision_caveat"] = certificate.precision_caveat
    details["bernstein"] = str(b_poly)
    details["dual_bernstein"] = str(b_dual)
    return _status(reflection_check(b_poly, b_dual, candidate)), details


def run_check_case(
    suite, index, description=None, rank=None, seed=None, delta=None, trunc=None
):
    """Run one case of a suite; the module comes from a description text or from a seed.

    Kept at module level so that joblib can ship it to worker processes.
    Only a failed certificate search (NotFound) makes a case inconclusive,
    every other domain error propagates to the command. A morphism space
    that was still changing at the working precision puts "precision" in
    the caveats of the case.

    :return: dict with case index, suite, status, details and caveats
    """
    if description is not None:
        module, other = load_module(description), None
    else:
        profile = "simple_pole" if suite == "lemma32" else "default"
        module = random_regular(rank, seed, profile=profile)
        other = random_regular(rank, seed + 1000003, profile=profile)
    if trunc is not None:
        module = module.with_trunc(trunc)
    case_seed = config["seed"] if seed is None else seed
    try:
        if suite == "lemma32":
            status, details = check_lemma32(module, other)
        elif suite == "bidual":
            deltas = [delta] if delta is not None else config["deltas"]
            status, details = check_bidual(module, deltas)
        elif suite == "twist":
            status, details = check_twist(module, other)
        elif suite == "propdual":
            status, details = check_propdual(module, delta, case_seed)
        elif suite == "reflection":
            status, details = check_reflection(module, delta, case_seed)
        else:
            raise ValueError(f"unknown suite {suite!r}")
    except NotFound as exc:
        status, details = INCONCLUSIVE, {
            "error": type(exc).__name__,
            "reason": str(exc),
            "precision_caveat": exc.precision_caveat,
        }
    caveats = ["precision"] if details.pop("precision_caveat", False) else []
    return {
        "suite": suite,
        "case": index,
        "module": module.name,
        "status": status,
        "details": details,
        "caveats": caveats,
    }


def random_cases(k, seed, count):
    """Case parameters (rank, seed) for a random sweep, ranks drawn from 1..k"""
    rng = np.random.RandomState(seed)
    ranks = rng.randint(1, k + 1, size=count)
    return [{"rank": int(rank), "seed": seed + i} for i, rank in enumerate(ranks)]


def summarize(cases):
    """Pass/fail/inconclusive counts per suite"""
    frame = pd.DataFrame(cases, columns=["suite", "case", "status"])
    counts = frame.groupby(["suite", "status"]).size().unstack(fill_value=0)
    counts = counts.reindex(columns=[PASS, FAIL, INCONCLUSIVE], fill_value=0)
    return {
        suite: {status: int(n) for status, n in row.items()}
        for suite, row in counts.iterrows()
    }


def exit_status(cases):
    """0 when every case passed, 1 on any failure, 2 when only inconclusive cases remain"""
    statuses = {case["status"] for case in cases}
    if FAIL in statuses:
        return 1
    if INCONCLUSIVE in statuses:
        return 2
    return 0


class CheckSuiteRunner(Module):
    """Runs verification suites on a module description or on seeded random modules.

    Cases run through joblib and are reported in case order, so the report
    does not depend on the number of jobs.
    """

    def __init__(
        self,
        suite,
        description_key="description_text",
        random=None,
        delta=None,
        trunc=None,
        store_key="results",
        n_jobs=None,
        progress=False,
    ):
        """Initialize an instance.

        :param str suite: one of SUITES or "all"
        :param str description_key: key of the description text in the datastore (file input)
        :param tuple random: (k, seed, count) for a random sweep (optional)
        :param delta: fixed delta for the duality suites (optional)
        :param int trunc: working precision of every case (optional)
        :param str store_key: key of the results in the datastore
        :param int n_jobs: number of joblib workers, default from config
        :param bool progress: show a tqdm progress bar
        """
        super().__init__()
        if suite != "all" and suite not in SUITES:
            raise ValueError(f"unknown suite {suite!r}, use one of {SUITES + ('all',)}")
        self.suites = SUITES if suite == "all" else (suite,)
        self.description_key = description_key
        self.random = random
        self.delta = delta
        self.trunc = trunc
        self.store_key = store_key
        self.n_jobs = n_jobs if n_jobs is not None else config["n_jobs"]
        self.progress = progress

    def _jobs(self, datastore):
        if self.random is not None:
            k, seed, count = self.random
            params = random_cases(k, seed, count)
        else:
            text = datastore[self.description_key]
            params = [{"description": text}]
        return [
            dict(suite=suite, index=i, delta=self.delta, trunc=self.trunc, **p)
            for suite in self.suites
            for i, p in enumerate(params)
        ]

    def transform(self, datastore):
        jobs = self._jobs(datastore)
        self.logger.info(f"Running {len(jobs)} check case(s) for suite(s) {list(self.suites)}.")
        cases = Parallel(n_jobs=self.n_jobs)(
            delayed(run_check_case)(**job)
            for job in tqdm(jobs, disable=not self.progress, desc="check cases")
        )
        cases = sorted(cases, key=lambda case: (SUITES.index(case["suite"]), case["case"]))

        results = self.results(datastore, self.store_key)
        results["cases"] = cases
        results["summary"] = summarize(cases)
        results["all_pass"] = exit_status(cases) == 0
        self.add_caveats(datastore, *sorted({c for case in cases for c in case["caveats"]}))
        datastore["exit_code"] = exit_status(cases)
        parameters = datastore.setdefault("parameters", {})
        parameters.update(
            {
                "suites": list(self.suites),
                "delta": format_rational(self.delta) if self.delta is not None else None,
                "random": list(self.random) if self.random is not None else None,
            }
        )
        return datastore
