# Copyright (c) 2020 abmod developers
# This file is part of abmod, exact computations with regular (a,b)-modules
# Licensed under the MIT License

# Resources lookup file for abmod

import pathlib

from pkg_resources import resource_filename

import abmod

# module descriptions that are shipped with abmod.
_DATA = dict(
    (_.name, _)
    for _ in pathlib.Path(resource_filename(abmod.__name__, "test_data")).glob("*.json")
)

# Resource types
_RESOURCES = dict(data=_DATA)


def _resource(resource_type, name: str) -> str:
    """Return the full path filename of a resource.

    :param str resource_type: The type of the resource.
    :param str  name: The name of the resource.
    :returns: The full path filename of the resource.
    :rtype: str
    :raises FileNotFoundError: If the resource cannot be found.
    """
    full_path = _RESOURCES[resource_type].get(name, None)

    if full_path and full_path.exists():
        return str(full_path)

    raise FileNotFoundError(f'Could not find {resource_type} "{name!s}"! Does it exist?')


def data(name: str) -> str:
    """Return the full path filename of a shipped module description.

    :param str name: The name of the description file, e.g. "e2.json".
    :returns: The full path filename of the description.
    :rtype: str
    :raises FileNotFoundError: If the description cannot be found.
    """
    return _resource("data", name)
