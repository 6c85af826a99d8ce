import os
import subprocess
import sys

import numpy as np
import pytest

from braidcohom import _kernels


@pytest.fixture(scope="module")
def backends():
    return {name: _kernels.load_backend(name) for name in _kernels.BACKENDS}


def test_necklace_scan_parity(backends):
    for lam in range(1, 19):
        a = backends["numba"].necklace_scan(lam)
        b = backends["numpy"].necklace_scan(lam)
        for x, y in zip(a, b):
            np.testing.assert_array_equal(x, y)


def test_necklace_scan_masks_are_max_rotations(backends):
    lam = 8
    full = (1 << lam) - 1
    masks, weights, mults = backends["numpy"].necklace_scan(lam)
    for x, w, m in zip(masks.tolist(), weights.tolist(), mults.tolist()):
        rots = [((x << r) | (x >> (lam - r))) & full for r in range(lam)]
        assert x == max(rots)
        assert w == bin(x).count("1")
        assert m == rots.count(x)


def test_permutation_table():
    perms, signs = _kernels.permutation_table(4)
    assert perms.shape == (24, 4)
    assert len({tuple(r) for r in perms.tolist()}) == 24
    for row, s in zip(perms.tolist(), signs.tolist()):
        inv = sum(1 for i in range(4) for j in range(i + 1, 4) if row[i] > row[j])
        assert s == (-1) ** inv
    assert _kernels.permutation_table(0)[0].shape == (1, 0)


def test_unknown_backend():
    with pytest.raises(ValueError):
        _kernels.load_backend("fortran")


def test_env_flag_selects_backend():
    for name in _kernels.BACKENDS:
        env = dict(os.environ, BRAIDCOHOM_BACKEND=name)
        out = subprocess.run(
            [sys.executable, "-c", "from braidcohom import _kernels; print(_kernels.BACKEND_NAME)"],
            env=env, capture_output=True, text=True, check=True,
        )
        assert out.stdout.strip() == name
