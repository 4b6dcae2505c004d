import math
import os
from pathlib import Path

import numpy as np
import pytest

import orthospec

SRC = Path(os.environ.get("ORTHOSPEC_SOURCE_DIR", Path(__file__).resolve().parents[2]))


def test_pants_basics():
    r = orthospec.fuchsian_pants(2, 2, 2)
    assert (r.n, r.rank, r.boundary_count) == (2, 2, 3)
    assert r.names == ["c1", "c2"]
    assert r.alpha(2) == "C2 C1"
    for k in range(2):
        g = r.generator(k)
        assert g.shape == (2, 2)
        assert abs(np.linalg.det(g) - 1) < 1e-12
        assert abs(abs(np.trace(g)) - 2 * math.cosh(1)) < 1e-12
    assert abs(r.length("c1 c2") - r.length("c2 c1")) < 1e-12


def test_hexagon_summand():
    r = orthospec.fuchsian_pants(2, 2, 2)
    d = math.acosh((math.cosh(1) + math.cosh(1) ** 2) / math.sinh(1) ** 2)
    assert abs(r.G((0, 1, "")) - 2 * math.log(1 / math.tanh(d / 2))) < 1e-10
    assert abs(orthospec.basmajian_term(d) - r.G((0, 1, ""))) < 1e-10


def test_veronese_and_series():
    base = orthospec.fuchsian_pants(2, 2, 2)
    r3 = orthospec.irreducible_embed(base, 3)
    assert r3.n == 3
    for x in base.orthoset(3)[:20]:
        assert abs(r3.G(x) - 2 * base.G(x)) < 1e-9 * r3.G(x)
    s = base.series(6)
    totals = [row["total"] for row in s]
    assert [row["L"] for row in s] == [0, 2, 4, 6]
    assert all(a < b for a, b in zip(totals, totals[1:]))
    assert totals[-1] <= 6 + 1e-9
    assert abs(base.partial_sum(4)["total"] - totals[2]) < 1e-14


def test_cross_ratio_and_pants():
    r = orthospec.fuchsian_pants(2, 2.5, 3)
    x, y, z, t = ("c1", 1), ("c2", 1), ("c1", -1), ("c2", -1)
    assert r.cross_ratio(x, x, z, t) == 0
    assert abs(r.cross_ratio(x, y, x, t) - 1) < 1e-14
    assert r.cyclic_order(x, y, z, t) in ("positive", "negative", "unordered")
    assert r.cyclic_order(x, x, z, t) == "degenerate"
    (beta, gamma), = r.pants()
    assert abs(r.gap_H(beta, gamma) - 2) < 1e-9
    with pytest.raises(orthospec.ConfigError):
        r.cross_ratio(("", 1), y, z, t)


def test_run_from_config():
    text = (SRC / "configs" / "pants_222.conf").read_text()
    code, out, err = orthospec.run(text + "\n", "basmajian")
    assert code == 0
    assert "L,boundary_index,partial_sum" in out
    assert "wall_clock_seconds" in err
    r = orthospec.from_config(text)
    assert r.validate(3)["pass"]
    with pytest.raises(orthospec.ConfigError):
        orthospec.run("[rep]\nn = 2\n", "validate")


def test_explicit_and_hilbert():
    base = orthospec.fuchsian_pants(2, 2, 2)
    gens = [orthospec.sym_power(base.generator(k), 3) for k in range(2)]
    r = orthospec.explicit_representation(0, 3, gens)
    assert r.construction == "explicit"
    assert abs(r.length("c1") - 4) < 1e-9
    p, q = np.array([0.3, -0.2]), np.array([-0.1, 0.5])
    klein = math.acosh((1 - p @ q) / math.sqrt((1 - p @ p) * (1 - q @ q)))
    assert abs(orthospec.hilbert_distance_disk(p, q) - 2 * klein) < 1e-10
