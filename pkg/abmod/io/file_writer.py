# Copyright (c) 2020 abmod developers
# This file is part of abmod, exact computations with regular (a,b)-modules
# Licensed under the MIT License

import collections.abc
import sys
from pathlib import Path
from typing import Callable, Optional, Union

from ..base import Module


class FileWriter(Module):
    """Module transforms datastore content to text and writes it to a file or a stream.
    """

    def __init__(
        self,
        read_key: str,
        file_path: Optional[Union[str, Path]] = None,
        apply_func: Optional[Callable] = None,
        stream=None,
        **kwargs,
    ):
        """Initialize an instance.

        :param str read_key: key of the object to write
        :param str file_path: the file path where to output the text (optional)
        :param callable apply_func: function turning the object into text (optional)
        :param stream: text stream used when no file path is given, default is standard output
        :param dict kwargs: additional keyword arguments which would be passed to `apply_func`
        """
        super().__init__()
        if file_path is not None and not isinstance(file_path, (str, Path)):
            raise TypeError("file_path should be of type `str` or `pathlib.Path`")
        if apply_func is not None and not isinstance(
            apply_func, collections.abc.Callable
        ):
            raise TypeError("transformation function must be a callable object")
        self.read_key = read_key
        self.file_path = file_path
        self.apply_func = apply_func
        self.stream = stream
        self.kwargs = kwargs

    def transform(self, datastore):
        data = datastore[self.read_key]
        if self.apply_func is not None:
            data = self.apply_func(data, **self.kwargs)

        if self.file_path is None:
            stream = self.stream if self.stream is not None else sys.stdout
            stream.write(data)
        else:
            with open(self.file_path, "w", encoding="utf-8") as file:
                file.write(data)
            self.logger.info(
                f'Object "{self.read_key}" written to file "{self.file_path}".'
            )
        return datastore
