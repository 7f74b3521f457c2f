"""Smoke test for the compiled `dickson` extension module.

Build it with
    cargo build -p dickson-py --release --features extension-module
and copy target/release/libdickson.so next to this file as dickson.so
(dickson.pyd on Windows, dickson.so on macOS), or point PYTHONPATH at it.
"""

import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))

import dickson  # noqa: E402


def main() -> int:
    assert dickson.eval(29, 5, 10) == 17
    assert dickson.poly(7) == ["1", "0", "-7", "0", "14", "0", "-7", "0"]
    assert dickson.subset(29, "A2++") == [3, 7, 11, 18, 22, 26]
    assert dickson.cycles(29, 5, "A2--") == "(0)(10 17 13 19 12 16)"
    assert dickson.cycles(29, 7, "A2--") == "not a permutation; image={0}"
    assert dickson.product(7, "T40--") == 2
    assert [dickson.sigma(29, s, j) for s, j in [("B2++", 2), ("B2++", 4), ("B2--", 2), ("B2--", 4)]] == [24, 6, 22, 14]
    try:
        dickson.eval(12, 2, 1)
    except ValueError:
        pass
    else:
        raise AssertionError("q = 12 should be rejected")
    report = json.loads(dickson.verify(3, 31, parity="odd"))
    statuses = {v["status"] for v in report["verdicts"]}
    assert "fail" not in statuses, report
    print(f"ok: {len(report['verdicts'])} verdicts, {len(dickson.check_names())} checks")
    return 0


if __name__ == "__main__":
    sys.exit(main())
