"""Compare the compiled scan kernels against the pure-Python fallback.

Runs the same full-ring scans through both kernel modules and prints a
timing table.  The library picks the compiled module automatically at
import; NARING_BACKEND=python forces the fallback.
"""

import time

from naring.magma import l_loop, jordan_loop
from naring import _slowops

try:
    from naring import _fastops
except ImportError:
    _fastops = None


def _timed(fn, *args):
    t0 = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - t0


def _same(a, b):
    if a is None or b is None:
        return a == b
    if isinstance(a, tuple):
        return all(_same(x, y) for x, y in zip(a, b))
    try:
        return (a == b).all()
    except AttributeError:
        return a == b


def main():
    cases = [
        ("circle scan Z3[L5(2)]", "scan_circle_zero", l_loop(5, 2).table, 3),
        ("circle scan Z2[L7(3)]", "scan_circle_zero", l_loop(7, 3).table, 2),
        ("square scan Z5[L5(3)]", "square_codes", l_loop(5, 3).table, 5),
        ("jordan scan Z2[J(7)]", "jordan_counterexample", jordan_loop(7).table, 2),
    ]
    print(f"{'case':<26}{'python':>10}{'compiled':>10}{'speedup':>9}  agree")
    for label, op, table, m in cases:
        slow, t_slow = _timed(getattr(_slowops, op), table, m)
        if _fastops is None:
            print(f"{label:<26}{t_slow:>9.3f}s{'n/a':>10}{'':>9}")
            continue
        fast, t_fast = _timed(getattr(_fastops, op), table, m)
        ratio = t_slow / t_fast if t_fast > 0 else float("inf")
        print(f"{label:<26}{t_slow:>9.3f}s{t_fast:>9.3f}s{ratio:>8.1f}x  {_same(slow, fast)}")
    if _fastops is None:
        print("compiled kernels not built; only the fallback was timed")


if __name__ == "__main__":
    main()
