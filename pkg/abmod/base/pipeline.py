# Copyright (c) 2020 abmod developers
# This file is part of abmod, exact computations with regular (a,b)-modules
# Licensed under the MIT License

import logging

from ..base import Module
from ..core.precision import check_cancelled


class Pipeline(Module):
    """Runs computation modules one after the other on a shared datastore.
    """

    def __init__(self, modules, logger=None, cancel=None):
        """Initialization of the pipeline

        :param list modules: modules of the pipeline.
        :param logger: logger to be used by each module.
        :param threading.Event cancel: checked before every module (optional)
        """
        super().__init__()
        self.modules = modules
        self.cancel = cancel
        self.set_logger(logger)

    def set_logger(self, logger):
        """Set the logger to be used by each module

        :param logger: input logger
        """
        self.logger = logger
        if self.logger is None:
            self.logger = logging.getLogger()
        for module in self.modules:
            module.set_logger(self.logger)

    def add_modules(self, modules):
        """Add more modules to existing list of modules.

        :param list modules: list of more modules
        """
        if len(modules):
            self.modules.extend(modules)
            for module in modules:
                module.set_logger(self.logger)

    def transform(self, datastore):
        """Calls transform() of each module in the pipeline.

        :param dict datastore: input datastore
        :return: updated output datastore
        :rtype: dict
        :raises Cancelled: when the cancel event is set between two modules
        """
        for module in self.modules:
            check_cancelled(self.cancel)
            self.logger.debug(f"Running {module!r}.")
            datastore = module.transform(datastore)
        return datastore
