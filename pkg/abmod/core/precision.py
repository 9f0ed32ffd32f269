# Copyright (c) 2020 abmod developers
# This file is part of abmod, exact computations with regular (a,b)-modules
# Licensed under the MIT License

import logging

from ..config import config, default_trunc
from ..errors import Cancelled, PrecisionExhausted

logger = logging.getLogger()


def working_trunc(module, trunc=None):
    """Truncation used for computations on a module.

    An explicit trunc wins, otherwise the larger of the module truncation
    and the rank dependent default.
    """
    if trunc is not None:
        return trunc
    return max(module.trunc, default_trunc(module.rank))


def check_cancelled(cancel):
    """Raise Cancelled when the given threading.Event (if any) is set"""
    if cancel is not None and cancel.is_set():
        raise Cancelled("computation cancelled")


def with_precision_retry(func, module, *args, trunc=None, max_trunc=None, **kwargs):
    """Call func(module, ...) and double the precision on PrecisionExhausted.

    :param func: computation taking the module as first argument and a trunc keyword
    :param AbModule module: input module, padded or truncated to the working precision
    :param int trunc: initial working precision (optional)
    :param int max_trunc: give up above this precision, default from config
    :return: whatever func returns
    """
    trunc = working_trunc(module, trunc)
    max_trunc = max_trunc or config["max_trunc"]
    while True:
        try:
            return func(module.with_trunc(trunc), *args, trunc=trunc, **kwargs)
        except PrecisionExhausted as exc:
            if 2 * trunc > max_trunc:
                raise
            logger.warning(
                f"{exc}. Retrying {func.__name__} at precision {2 * trunc}."
            )
            trunc *= 2
