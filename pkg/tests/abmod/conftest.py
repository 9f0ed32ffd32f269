import pytest

from abmod import resources
from abmod.core.module import apply_a
from abmod.io import load_module
from abmod.linalg import Lattice, SeriesMatrix, canonical_form
from abmod.linalg.matrix import standard_vector, vector_sub, vector_with_trunc


def _load(name):
    with open(resources.data(name), encoding="utf-8") as file:
        return file.read()


def saturation_oracle(module, trunc, depth=None):
    """Saturation by brute force: all iterates (b^-1 a)^m e_i for m < depth.

    Iterates are computed as z = b^J x inside E, where b^-1 a acts as
    z -> (a(z) - J.b.z) / b.
    """
    size = module.rank
    depth = depth if depth is not None else 2 * size + 2
    module = module.with_trunc(trunc + 2 * depth)
    columns = []
    for i in range(size):
        z = tuple(x.shift(depth) for x in standard_vector(size, i, trunc + depth))
        for _ in range(depth + 1):
            columns.append(vector_with_trunc(z, trunc))
            image = vector_sub(apply_a(module, z), tuple(x.shift(1) * depth for x in z))
            z = tuple(x.divide_b_power(1) for x in image)
    matrix = SeriesMatrix.from_columns(columns, size, trunc)
    return canonical_form(Lattice(matrix, shift=-depth))


def pytest_configure(config):
    config.addinivalue_line("markers", 'slow: exhaustive sweeps, deselect with -m "not slow"')

    # attach common module descriptions
    pytest.e1_text = _load("e1.json")
    pytest.e2_text = _load("e2.json")
    pytest.pham_3_3_text = _load("pham_3_3.json")

    pytest.e1 = load_module(pytest.e1_text)
    pytest.e2 = load_module(pytest.e2_text)
    pytest.pham_3_3 = load_module(pytest.pham_3_3_text)
    pytest.jordan_half_2 = load_module(_load("jordan_half_2.json"))
    pytest.jordan_perturbed = load_module(_load("jordan_perturbed.json"))
    pytest.e1_e2 = load_module(_load("e1_e2.json"))
    pytest.not_regular_text = _load("not_regular.json")
    pytest.not_regular = load_module(pytest.not_regular_text)

    pytest.saturation_oracle = saturation_oracle
