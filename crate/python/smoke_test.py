#!/usr/bin/env python3
"""Builds the extension module, imports it, and checks exact values end to end.

Run from the repository root:  python3 python/smoke_test.py
"""

import shutil
import subprocess
import sys
import tempfile
from fractions import Fraction
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


def build_extension() -> Path:
    subprocess.run(
        ["cargo", "build", "-p", "bratteli-py"],
        cwd=ROOT,
        check=True,
    )
    lib = ROOT / "target" / "debug" / "libbratteli.so"
    if not lib.exists():
        sys.exit(f"extension library not found at {lib}")
    stage = Path(tempfile.mkdtemp(prefix="bratteli-py-"))
    shutil.copy2(lib, stage / "bratteli.so")
    return stage


def main() -> None:
    sys.path.insert(0, str(build_extension()))
    import bratteli

    young = bratteli.Graph.build("young", 4)
    assert young.level_size(4) == 5
    assert young.dimension(3, "[2,1]") == 2
    assert young.total_paths(4) == 10
    assert bratteli.hook_dimension([4, 4]) == 14
    assert young.skew_dimension(1, "[1]", 3, "[2,1]") == 2

    pascal = bratteli.Graph.build("pascal", 4)
    assert pascal.dimension(4, "2,2") == 6
    assert pascal.adic_orbit(2, "1,1") == [
        ["0,0", "0,1", "1,1"],
        ["0,0", "1,0", "1,1"],
    ]

    solvable = bratteli.Graph.build("solvable", 2)
    assert [solvable.level_size(n) for n in range(3)] == [1, 3, 7]
    assert solvable.multiplicity(1, "0", "1") == 2

    half = bratteli.ThomaParameter([Fraction(1, 2), Fraction(1, 2)])
    assert half.character([2]) == Fraction(1, 2)
    assert half.gamma() == 0
    assert half.shape_sequence(9) == [5, 4]

    zero = bratteli.ThomaParameter.parse("", "")
    plancherel = bratteli.Measure.thoma(zero, 4)
    assert plancherel.is_coherent()
    assert plancherel.mass(4, "[2,2]") == Fraction(1, 6)
    assert plancherel.nu(2, "[2]") == Fraction(1, 2)

    mixed = bratteli.Measure.thoma(half, 6)
    assert mixed.mass(2, "[2]") == Fraction(3, 4)
    once = mixed.sample_path(6, seed=11)
    again = mixed.sample_path(6, seed=11)
    assert once == again and len(once) == 7

    assert bratteli.irreducible_character([2, 1], [1, 1, 1]) == 2
    assert bratteli.irreducible_character([2, 2], [2, 2]) == 2

    witness = bratteli.poulsen(1, Fraction(0))
    assert witness["depth"] == 2
    assert witness["distance"] == 0
    assert witness["reached"] and witness["invariant"]

    trivial = bratteli.ThomaParameter([Fraction(1)])
    matrix = bratteli.separation([zero, trivial], 2)
    assert matrix[0][1] == Fraction(1, 2)

    coin = bratteli.Measure.bernoulli(2)
    assert coin.mass(2, "1") == Fraction(4, 16)

    print("smoke test passed")


if __name__ == "__main__":
    main()
