# Copyright (c) 2020 abmod developers
# This file is part of abmod, exact computations with regular (a,b)-modules
# Licensed under the MIT License

import collections.abc
import sys
from pathlib import Path
from typing import Callable, Optional, Union

from ..base import Module
from .description import parse_description


class FileReader(Module):
    """Module to read text from a file (or standard input for "-"), transform it and store it in the datastore.
    """

    def __init__(
        self,
        store_key: str,
        file_path: Union[str, Path],
        apply_func: Optional[Callable] = None,
        **kwargs,
    ):
        """Initialize an instance.

        :param str store_key: key of the (transformed) contents in the datastore
        :param str file_path: the file path to read, "-" reads standard input
        :param callable apply_func: function to be used for the transformation of the text (optional)
        :param dict kwargs: additional keyword arguments which would be passed to `apply_func`
        """
        super().__init__()
        if not isinstance(file_path, (str, Path)):
            raise TypeError("file_path should be of type `str` or `pathlib.Path`")
        if apply_func is not None and not isinstance(
            apply_func, collections.abc.Callable
        ):
            raise TypeError("transformation function must be a callable object")

        self.store_key = store_key
        self.file_path = file_path
        self.apply_func = apply_func
        self.kwargs = kwargs

    def read(self):
        if str(self.file_path) == "-":
            return sys.stdin.read()
        with open(self.file_path, encoding="utf-8") as file:
            return file.read()

    def transform(self, datastore):
        data = self.read()
        if self.apply_func is not None:
            data = self.apply_func(data, **self.kwargs)

        self.logger.info(f'Object "{self.store_key}" read from "{self.file_path}".')
        datastore[self.store_key] = data
        return datastore


class DescriptionReader(FileReader):
    """Reads a module description file into a ModuleDescription.
    """

    def __init__(self, store_key: str, file_path: Union[str, Path]):
        super().__init__(store_key, file_path, apply_func=parse_description)
