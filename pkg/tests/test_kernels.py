"""Backend parity and properties of the compiled kernels."""

import os
import subprocess
import sys

import numpy as np

from sobolev_banach import _kernels


def test_backend_name_is_known():
    assert _kernels.backend() in ("numba", "numpy")


def test_holder_max_parity():
    rng = np.random.default_rng(11)
    V = rng.normal(size=(120, 5))
    P = rng.random(size=(120, 2))
    w = np.full(5, 0.2)
    for rcode in (-1.0, 1.0, 2.0, 3.5):
        a = _kernels.holder_max(V, P, 0.5, rcode, w)
        b = _kernels.holder_max_np(V, P, 0.5, rcode, w)
        assert abs(a - b) <= 1e-12 * (1.0 + abs(b))


def test_greedy_radii_parity_and_shape():
    rng = np.random.default_rng(5)
    pts = rng.normal(size=(40, 3))
    D = np.sqrt(((pts[:, None] - pts[None]) ** 2).sum(-1))
    r1 = _kernels.greedy_radii(D)
    r2 = _kernels.greedy_radii_np(D)
    assert np.allclose(r1, r2, rtol=0, atol=1e-12)
    assert r1.shape == (40,)
    # covering radii shrink as centers are added and hit zero at the end
    assert np.all(np.diff(r1) <= 1e-15)
    assert r1[-1] == 0.0


def test_greedy_radii_three_clusters():
    # three tight clusters: two centers leave one cluster uncovered,
    # three centers cover everything at the cluster scale
    rng = np.random.default_rng(3)
    centers = np.array([[0.0, 0.0], [10.0, 0.0], [0.0, 10.0]])
    pts = np.concatenate([c + 0.01 * rng.normal(size=(15, 2)) for c in centers])
    D = np.sqrt(((pts[:, None] - pts[None]) ** 2).sum(-1))
    radii = _kernels.greedy_radii(D)
    assert radii[1] > 5.0
    assert radii[2] < 0.1


def test_sup_pairing_parity_and_zero_rows():
    rng = np.random.default_rng(7)
    X = rng.normal(size=(300, 6))
    X[17] = 0.0
    H = rng.normal(size=(300, 6))
    p1, m1 = _kernels.sup_pairing(X, H, 1e-12)
    p2, m2 = _kernels.sup_pairing_np(X, H, 1e-12)
    assert np.array_equal(p1, p2) and np.array_equal(m1, m2)
    assert p1[17] == np.abs(H[17]).max()
    assert m1[17] == -np.abs(H[17]).max()


def test_lr_pairing_parity():
    rng = np.random.default_rng(9)
    X = rng.normal(size=(300, 4))
    H = rng.normal(size=(300, 4))
    w = np.full(4, 0.25)
    for r in (1.5, 2.0, 3.0):
        v1, n1 = _kernels.lr_pairing(X, H, r, w)
        v2, n2 = _kernels.lr_pairing_np(X, H, r, w)
        assert np.allclose(v1, v2, rtol=1e-12, atol=1e-14)
        assert np.allclose(n1, n2, rtol=1e-12, atol=1e-14)


def test_forced_numpy_backend_subprocess():
    env = dict(os.environ, SOBOLEV_BANACH_KERNELS="numpy")
    out = subprocess.run(
        [sys.executable, "-c",
         "from sobolev_banach import _kernels; print(_kernels.backend())"],
        capture_output=True, text=True, env=env,
    )
    assert out.returncode == 0
    assert out.stdout.strip() == "numpy"


def test_invalid_backend_subprocess():
    env = dict(os.environ, SOBOLEV_BANACH_KERNELS="cuda")
    out = subprocess.run(
        [sys.executable, "-c", "import sobolev_banach._kernels"],
        capture_output=True, text=True, env=env,
    )
    assert out.returncode != 0
    assert "SOBOLEV_BANACH_KERNELS" in out.stderr
