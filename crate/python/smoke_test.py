"""Smoke test for the compiled extension.

Build first with `cargo build -p sln-ext-py` (add `--release` for speed), then
run `python3 python/smoke_test.py`. The shared library is copied
to a temporary directory as `sln_ext.so` and imported from there.
"""

import importlib
import pathlib
import shutil
import sys
import tempfile

ROOT = pathlib.Path(__file__).resolve().parents[1]


def find_library():
    for profile in ("release", "debug"):
        lib = ROOT / "target" / profile / "libsln_ext_py.so"
        if lib.exists():
            return lib
    sys.exit("libsln_ext_py.so not found; run `cargo build -p sln-ext-py` first")


def main():
    tmp = pathlib.Path(tempfile.mkdtemp())
    shutil.copy(find_library(), tmp / "sln_ext.so")
    sys.path.insert(0, str(tmp))
    sln_ext = importlib.import_module("sln_ext")

    t = sln_ext.theorem2_table(2)
    assert t.dims == [[1, 0], [0, 1]], t.dims
    print(t.to_json())

    t6 = sln_ext.theorem2_table(6)
    assert t6.ep_vector() == [sln_ext.ramanujan_sum(6, j) for j in range(6)]
    assert all(t6.dim(1, j) == (j != 0) for j in range(6))

    a = sln_ext.LatticeRep.standard_a(5)
    for r in range(5):
        for j in range(5):
            assert sln_ext.isotypic_mult(a, r, j) == sln_ext.subset_sum_mult(5, r, j)
    assert sln_ext.koszul_dims(5, [1, 0, 2, 0]) == [0] * 5
    assert sln_ext.ext_transfer(4, 0, 2) == sln_ext.theorem2_table(4).column(2)
    assert sln_ext.conjugation_twist(3, 1) in (1, 2)

    report = sln_ext.verify(6)
    assert report["ok"], report
    print("verify n=6:", report["cells_checked"], "cells, pipelines", report["pipelines"])

    try:
        sln_ext.theorem2_table(1)
    except ValueError as err:
        print("rejected n=1:", err)
    else:
        raise AssertionError("n=1 accepted")
    print("smoke test passed")


if __name__ == "__main__":
    main()
