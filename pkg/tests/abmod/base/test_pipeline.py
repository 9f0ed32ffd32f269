import logging
import threading

import pytest

from abmod.base import Module, Pipeline
from abmod.core import AbModule
from abmod.core.bernstein import BernsteinPoly, bernstein_of_simple_pole
from abmod.core.fixed_points import biggest_simple_pole_sub, saturate
from abmod.errors import Cancelled


class FixedPoint(Module):
    def __init__(self, input_key, output_key, func):
        super().__init__()
        self.input_key = input_key
        self.output_key = output_key
        self.func = func

    def transform(self, datastore):
        module = self.get_datastore_object(datastore, self.input_key, dtype=AbModule)
        datastore[self.output_key] = self.func(module).module
        self.logger.info(f"{self.__class__.__name__} is calculated.")
        return datastore


class ResiduePolynomial(Module):
    def __init__(self, input_key, output_key):
        super().__init__()
        self.input_key = input_key
        self.output_key = output_key

    def transform(self, datastore):
        module = self.get_datastore_object(datastore, self.input_key, dtype=AbModule)
        datastore[self.output_key] = bernstein_of_simple_pole(module)
        return datastore


def test_abmod_pipeline():
    logger = logging.getLogger()
    logger.addHandler(logging.StreamHandler())
    logger.setLevel(logging.INFO)

    saturation_pipeline = Pipeline(
        modules=[
            FixedPoint(input_key="e2", output_key="sat", func=saturate),
            ResiduePolynomial(input_key="sat", output_key="bernstein"),
        ]
    )

    pipeline = Pipeline(
        modules=[
            saturation_pipeline,
            FixedPoint(input_key="e2", output_key="sub", func=biggest_simple_pole_sub),
            ResiduePolynomial(input_key="sub", output_key="dual_bernstein"),
        ],
        logger=logger,
    )

    datastore = pipeline.transform({"e2": pytest.e2})
    assert isinstance(datastore["bernstein"], BernsteinPoly)
    assert str(datastore["bernstein"]) == "z^2 - z - 1"
    assert str(datastore["dual_bernstein"]) == "z^2 + z - 1"


def test_pipeline_add_modules():
    pipeline = Pipeline(modules=[])
    pipeline.add_modules([FixedPoint(input_key="e2", output_key="sat", func=saturate)])
    assert len(pipeline.modules) == 1
    assert pipeline.modules[0].logger is pipeline.logger


def test_pipeline_cancel():
    cancel = threading.Event()
    cancel.set()
    pipeline = Pipeline(
        modules=[FixedPoint(input_key="e2", output_key="sat", func=saturate)],
        cancel=cancel,
    )
    with pytest.raises(Cancelled):
        pipeline.transform({"e2": pytest.e2})
