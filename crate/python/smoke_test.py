"""Import the compiled extension and exercise it once.

Builds the extension with cargo if no build is found, copies it next to a
temporary import path and runs a handful of exact checks.
"""

import glob
import json
import os
import shutil
import subprocess
import sys
import tempfile
from fractions import Fraction

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


def find_library():
    for profile in ("release", "debug"):
        hits = glob.glob(os.path.join(ROOT, "target", profile, "libberkdyn_py.*"))
        hits = [h for h in hits if h.endswith((".so", ".dylib"))]
        if hits:
            return hits[0]
    return None


def load():
    lib = find_library()
    if lib is None:
        subprocess.check_call(
            ["cargo", "build", "--release", "-p", "berkdyn-py", "--features", "extension-module"],
            cwd=ROOT,
        )
        lib = find_library()
    tmp = tempfile.mkdtemp()
    shutil.copy(lib, os.path.join(tmp, "berkdyn_py.so"))
    sys.path.insert(0, tmp)
    import berkdyn_py

    return berkdyn_py


def main():
    b = load()
    half = b.RationalMap(2, ["0", "0", "1/2"], ["1"])
    assert half.ord_res() == 2
    assert half.min_res_loc()["ends"] == ["disk:0:1"]
    cm = half.crucial_measure(3)
    assert cm["complete"]
    assert sum(Fraction(m) for _, _, m in cm["atoms"]) == 1

    skew = b.RationalMap(3, ["0", "-1", "1"], ["3"])
    loc = skew.min_res_loc()
    assert loc["ends"] == ["disk:0:0"] and loc["value"] == "2"
    assert Fraction(half.lyapunov(1)) == -1

    code, out, _ = b.run_cli(["crucial", "--p", "3", "--num", "0,-1,1", "--den", "3", "--n", "2"])
    assert code == 0
    report = json.loads(out)
    assert report["certificates"]["weight_sum"]["pass"]
    assert report["certificates"]["barycenter_cross_check"]["equal"]
    print("smoke test ok:", repr(half), "atoms of the second iterate of (z^2-z)/3:", len(report["atoms"]))


if __name__ == "__main__":
    main()
