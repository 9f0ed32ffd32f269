# Copyright (c) 2020 abmod developers
# This file is part of abmod, exact computations with regular (a,b)-modules
# Licensed under the MIT License

from ..base import Pipeline
from ..errors import AbModuleError
from ..io.file_reader import DescriptionReader
from ..io.file_writer import FileWriter
from .check_suites import CheckSuiteRunner
from .computations import (
    BernsteinCalculator,
    InfoCalculator,
    JordanLifter,
    ModuleBuilder,
    ModuleGenerator,
    PolePredictor,
)
from .report import ReportBuilder


def _input_modules(file_path, trunc=None, max_iter=None):
    return [
        DescriptionReader(store_key="description", file_path=file_path),
        ModuleBuilder(trunc=trunc, max_iter=max_iter),
    ]


def run_command(command, modules, timestamp=False, cancel=None, datastore=None):
    """Run a command pipeline and assemble its report.

    Errors raised by the computations end up in the report with exit code 1.

    :param str command: name of the command, stored in the report
    :param list modules: pipeline modules
    :param bool timestamp: add a timestamp to the report
    :param threading.Event cancel: checked between modules (optional)
    :return: datastore with "report", "report_text" and "exit_code"
    :rtype: dict
    """
    datastore = {} if datastore is None else datastore
    pipeline = Pipeline(modules, cancel=cancel)
    try:
        datastore = pipeline.transform(datastore)
    except AbModuleError as exc:
        pipeline.logger.error(f"{command} failed: {exc}")
        datastore["error"] = {"type": type(exc).__name__, "message": str(exc)}
        datastore["exit_code"] = 1
    datastore.setdefault("exit_code", 0)
    return ReportBuilder(command, timestamp=timestamp).transform(datastore)


def cmd_info(file_path, trunc=None, max_iter=None, **kwargs):
    """Rank, simple pole flag and regularity of the module in a description file"""
    modules = _input_modules(file_path, trunc, max_iter) + [InfoCalculator(max_iter=max_iter)]
    return run_command("info", modules, **kwargs)


def cmd_bernstein(file_path, dual=False, trunc=None, max_iter=None, **kwargs):
    """Bernstein polynomial, or dual Bernstein polynomial, with factorization"""
    modules = _input_modules(file_path, trunc, max_iter) + [
        BernsteinCalculator(dual=dual, max_iter=max_iter)
    ]
    return run_command("bernstein", modules, **kwargs)


def cmd_poles(file_path, n, trunc=None, max_iter=None, **kwargs):
    """Pole predictions for n variables from the Bernstein polynomial"""
    modules = _input_modules(file_path, trunc, max_iter) + [
        BernsteinCalculator(max_iter=max_iter),
        PolePredictor(n),
    ]
    return run_command("poles", modules, **kwargs)


def cmd_jordan(file_path, beta, d, trunc=None, max_iter=None, **kwargs):
    """Jordan chain lifted in the biggest simple pole submodule"""
    modules = _input_modules(file_path, trunc, max_iter) + [
        JordanLifter(beta, d, max_iter=max_iter)
    ]
    return run_command("jordan", modules, **kwargs)


def cmd_check(
    suite,
    file_path=None,
    random=None,
    delta=None,
    trunc=None,
    n_jobs=None,
    progress=False,
    **kwargs,
):
    """Verification suites on a description file or on a seeded random sweep.

    :param str suite: suite name or "all"
    :param str file_path: description file (when random is not given)
    :param tuple random: (k, seed, count)
    :return: datastore whose exit code is 0 (all pass), 1 (a failure) or 2 (inconclusive)
    """
    if (file_path is None) == (random is None):
        raise ValueError("give either a description file or a random sweep")
    modules = [] if file_path is None else _input_modules(file_path, trunc)
    modules.append(
        CheckSuiteRunner(
            suite, random=random, delta=delta, trunc=trunc, n_jobs=n_jobs, progress=progress
        )
    )
    datastore = {}
    if random is not None:
        k, seed, count = random
        datastore["input_digest"] = f"random:{k}:{seed}:{count}"
    return run_command("check", modules, datastore=datastore, **kwargs)


def cmd_gen(kind, args, trunc=None, output=None, stream=None):
    """Write a module description built by a constructor.

    :param str kind: "pham", "jordan", "elambda" or "random"
    :param tuple args: constructor arguments
    :param str output: file to write, standard output when omitted
    :return: datastore with "description" and "description_text"
    """
    modules = [
        ModuleGenerator(kind, args, trunc=trunc),
        FileWriter("description_text", file_path=output, stream=stream),
    ]
    return Pipeline(modules).transform({})
