import logging
import threading

import pytest

from abmod.config import default_trunc
from abmod.core.precision import check_cancelled, with_precision_retry, working_trunc
from abmod.errors import Cancelled, PrecisionExhausted


def test_working_trunc():
    module = pytest.e2
    assert working_trunc(module) == max(module.trunc, default_trunc(2))
    assert working_trunc(module, 7) == 7
    assert working_trunc(module.with_trunc(40)) == 40


def test_check_cancelled():
    check_cancelled(None)
    event = threading.Event()
    check_cancelled(event)
    event.set()
    with pytest.raises(Cancelled):
        check_cancelled(event)


def test_with_precision_retry_doubles(caplog):
    calls = []

    def needs_precision(module, trunc=None):
        calls.append((module.trunc, trunc))
        if trunc < 40:
            raise PrecisionExhausted("not enough", precision=trunc)
        return trunc

    with caplog.at_level(logging.WARNING):
        result = with_precision_retry(needs_precision, pytest.e2, trunc=10)
    assert result == 40
    assert calls == [(10, 10), (20, 20), (40, 40)]
    assert "Retrying needs_precision at precision 20" in caplog.text


def test_with_precision_retry_gives_up():
    def never(module, trunc=None):
        raise PrecisionExhausted("never", precision=trunc)

    with pytest.raises(PrecisionExhausted):
        with_precision_retry(never, pytest.e2, trunc=10, max_trunc=30)
