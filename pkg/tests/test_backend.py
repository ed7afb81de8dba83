import subprocess
import sys

import numpy as np
import pytest

from naring import _backend, _slowops
from naring.magma import l_loop, jordan_loop

fastops = pytest.importorskip("naring._fastops")


CASES = [
    (l_loop(5, 3).table, 2),
    (l_loop(5, 2).table, 3),
    (jordan_loop(5).table, 2),
]


class TestKernelAgreement:
    @pytest.mark.parametrize("table,m", CASES)
    def test_scan_circle_zero(self, table, m):
        fr, fl = fastops.scan_circle_zero(table, m)
        sr, sl = _slowops.scan_circle_zero(table, m)
        assert np.array_equal(np.asarray(fr), np.asarray(sr))
        assert np.array_equal(np.asarray(fl), np.asarray(sl))

    @pytest.mark.parametrize("table,m", CASES)
    def test_square_codes(self, table, m):
        assert np.array_equal(np.asarray(fastops.square_codes(table, m)),
                              np.asarray(_slowops.square_codes(table, m)))

    @pytest.mark.parametrize("table,m", CASES)
    def test_jordan_counterexample(self, table, m):
        assert fastops.jordan_counterexample(table, m) == \
            _slowops.jordan_counterexample(table, m)

    def test_all_vectors(self):
        assert np.array_equal(np.asarray(fastops.all_vectors(3, 4)),
                              _slowops.all_vectors(3, 4))

    def test_convolve(self):
        table = l_loop(5, 3).table
        x = [1, 2, 0, 3, 4, 1]
        y = [0, 1, 1, 0, 2, 3]
        assert list(fastops.convolve(x, y, table, 5)) == \
            list(_slowops.convolve(x, y, table, 5))


class TestSelection:
    def test_default_backend_is_compiled(self):
        assert _backend.BACKEND == "compiled"

    def test_env_forces_python(self):
        out = subprocess.run(
            [sys.executable, "-c",
             "from naring import _backend; print(_backend.BACKEND)"],
            env={"NARING_BACKEND": "python", "PATH": "/usr/bin:/bin"},
            capture_output=True, text=True)
        assert out.stdout.strip() == "python"

    def test_python_backend_runs_full_stack(self):
        prog = (
            "from naring.magma import l_loop\n"
            "from naring.ring import ring\n"
            "from naring.elements import quasi_regular_scan\n"
            "out = quasi_regular_scan(ring(l_loop(5, 3), 2))\n"
            "print(out['all_W_rqr'], len(out['W']))\n"
        )
        out = subprocess.run(
            [sys.executable, "-c", prog],
            env={"NARING_BACKEND": "python", "PATH": "/usr/bin:/bin"},
            capture_output=True, text=True)
        assert out.stdout.strip() == "True 32"
