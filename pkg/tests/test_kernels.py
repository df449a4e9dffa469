import random
import subprocess
import sys

import numpy as np
import pytest
from helpers import naive_closure, random_abelian_action, random_invariant_order

from invorder import kernels

BACKENDS = kernels.available_backends()


def test_backend_selection():
    assert "python" in BACKENDS
    assert kernels.BACKEND in BACKENDS
    with pytest.raises(ValueError):
        kernels.get_backend("fortran")


@pytest.mark.parametrize("name", BACKENDS)
def test_closure_matches_naive(name):
    be = kernels.get_backend(name)
    rng = np.random.default_rng(7)
    for _ in range(100):
        n = int(rng.integers(1, 9))
        m = rng.random((n, n)) < 0.25
        out = np.asarray(be.transitive_closure(m), dtype=bool)
        assert np.array_equal(out, naive_closure(m))


@pytest.mark.parametrize("name", BACKENDS)
def test_leq_g_and_invariance_agree_with_python(name):
    be, ref = kernels.get_backend(name), kernels.get_backend("python")
    rng = random.Random(9)
    nrng = np.random.default_rng(9)
    for _ in range(100):
        a = random_abelian_action(rng)
        leq = random_invariant_order(rng, a, partial=rng.random() < 0.5)
        args = (leq.matrix, a.perm_array, a.mult_table, a.identity_index)
        assert np.array_equal(np.asarray(be.leq_g_matrix(*args), dtype=bool), ref.leq_g_matrix(*args))
        assert be.invariance_violation(leq.matrix, a.generator_array) is None
        noisy = leq.matrix ^ (nrng.random(leq.matrix.shape) < 0.2)
        assert be.invariance_violation(noisy, a.generator_array) == ref.invariance_violation(noisy, a.generator_array)


def test_fallback_when_extension_missing():
    code = (
        "import sys, importlib.abc\n"
        "class Block(importlib.abc.MetaPathFinder):\n"
        "    def find_spec(self, name, path, target=None):\n"
        "        if name == 'invorder._kernels':\n"
        "            raise ImportError('blocked')\n"
        "sys.meta_path.insert(0, Block())\n"
        "import invorder\n"
        "from invorder import Relation, transitive_closure\n"
        "r = transitive_closure(Relation.from_pairs(3, [(0, 1), (1, 2)]))\n"
        "assert (0, 2) in r\n"
        "print(invorder.BACKEND)\n"
    )
    out = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
