# Copyright (c) 2020 abmod developers
# This file is part of abmod, exact computations with regular (a,b)-modules
# Licensed under the MIT License

import logging


class Module:
    """Base class of the computation steps of a command.

    A step reads its inputs from a shared datastore (a dict), computes, and
    writes its outputs back under its own keys. Report entries are collected
    in the "results" dict and caveat keys in the "caveats" list.
    """

    def __init__(self):
        self.logger = logging.getLogger()

    def __repr__(self):
        return self.__class__.__name__

    def set_logger(self, logger):
        """Set logger of module

        :param logger: input logger
        """
        self.logger = logger

    def get_datastore_object(self, datastore, key, dtype, default=None):
        """Get an object of a given type from the datastore.

        :param dict datastore: input datastore
        :param str key: key of object to retrieve
        :param obj dtype: required type of the object, or a tuple of types
        :param obj default: object to fall back on when the key is missing
        :return: retrieved object
        :raises RuntimeError: when the key is missing without default, or the object has the wrong type
        """
        obj = datastore.get(key, default)
        if obj is None:
            raise RuntimeError(f"`{key}` not found in the datastore!")
        if not isinstance(obj, dtype):
            raise RuntimeError(f"obj `{key}` is not an instance of `{dtype}`!")
        return obj

    @staticmethod
    def results(datastore, key="results"):
        """The dict of report entries, created on first use"""
        return datastore.setdefault(key, {})

    @staticmethod
    def add_caveats(datastore, *caveats, key="caveats"):
        """Flag caveat keys for the report; duplicates are merged by the report builder"""
        datastore.setdefault(key, []).extend(caveats)

    def transform(self, datastore):
        """Central function of the module.

        :param dict datastore: input datastore
        :return: updated output datastore
        :rtype: dict
        """
        return datastore
