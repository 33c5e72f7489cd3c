import json
import os
import subprocess
from pathlib import Path

import pytest

import smith_arrow as sa

DATA = Path(os.environ.get("SMITH_DATA", Path(__file__).resolve().parents[2] / "data"))
BIN = os.environ.get("SMITH_ARROW_BIN")


def load(name):
    return json.loads((DATA / name).read_text())


def test_validate_examples():
    assert sa.validate("complex", load("sphere.json")) == (True, "")
    ok, why = sa.validate("complex", load("bad_d2.json"))
    assert not ok and "degree 2" in why
    assert sa.validate("smith", load("square_zero_smith.json"))[0]


def test_parse_error_is_value_error():
    with pytest.raises(ValueError, match="/p"):
        sa.validate("complex", {"lo": 0, "hi": 0, "dims": {}})
    with pytest.raises(sa.ParseError):
        sa.validate("complex", "{not json")


def test_homology_and_quotient():
    assert sa.homology(load("sphere.json")) == {0: 1}
    q = sa.quotient(load("square_zero_smith.json"))
    assert q["carrier"]["dims"] == {"0": 1}
    assert q["unit"]["comps"] == {"0": [[1]]}


def test_products_of_sphere_into_disk():
    f = load("sphere_into_disk.json")
    t = sa.tensor(f, f)
    assert t["f"]["dst"]["dims"] == {"0": 1, "1": 2, "2": 1}
    box = sa.pushout_product(f, f)
    assert box["f"]["dst"] == t["f"]["dst"]
    assert sa.validate("map", box["f"])[0]
    # coker of S -> D^1 is S^1
    c = sa.coker(f)
    assert c["f"]["dst"]["dims"] == {"0": 0, "1": 1}


@pytest.mark.parametrize("kind", ["complex", "dga", "smith", "module"])
def test_generators_validate_and_are_deterministic(kind):
    for p in (2, 3, 5, 101):
        x = sa.generate(kind, seed=11, p=p)
        assert sa.validate(kind, x) == (True, "")
        assert sa.generate(kind, seed=11, p=p) == x


def test_generate_arrow_and_zero_dim():
    x = sa.generate("arrow", seed=4, p=3)
    assert sa.validate("map", x["f"])[0]
    z = sa.generate("complex", seed=4, max_dim=0)
    assert all(d == 0 for d in z["dims"].values())


def test_run_suites_is_deterministic():
    assert "coker-monoidal" in sa.suite_names()
    a = sa.run_suites(seed=7, trials=5, p=3, suites=["coker-monoidal"])
    b = sa.run_suites({"seed": 7, "trials": 5, "p": 3, "suites": ["coker-monoidal"]})
    assert a == b and a["ok"]
    assert a["suites"][0]["passed"] == 5
    empty = sa.run_suites(trials=0)
    assert empty["ok"] and all(s["passed"] == 0 for s in empty["suites"])
    with pytest.raises(ValueError):
        sa.run_suites(suites=["nope"])


@pytest.mark.skipif(not BIN, reason="CLI binary not provided")
def test_cli_exit_codes(tmp_path):
    def run(*args, env=None):
        return subprocess.run([BIN, *map(str, args)], capture_output=True, text=True, env=env)

    assert run("validate", "complex", DATA / "sphere.json").returncode == 0
    bad = run("validate", "complex", DATA / "bad_d2.json")
    assert bad.returncode == 1 and "degree 2" in bad.stdout
    assert run("validate", "smith", DATA / "square_zero_smith.json").returncode == 0
    assert run("validate", "complex", tmp_path / "missing.json").returncode == 2
    assert run("frobnicate").returncode == 2

    out = tmp_path / "q.json"
    r = run("quotient", DATA / "square_zero_smith.json", "-o", out)
    assert r.returncode == 0
    assert r.stdout.split("\n")[1].split() == ["0", "2", "1", "1"]
    assert json.loads(out.read_text())["carrier"]["dims"] == {"0": 1}

    chk = run("check", "coker-monoidal,eval-adjoints", "--seed", 7, "--trials", 5, "--p", 5,
              "--window", "-3:3", "--max-dim", 6, "--counterexamples", tmp_path / "cex")
    assert chk.returncode == 0
    report = json.loads(chk.stdout)
    assert [s["passed"] for s in report["suites"]] == [5, 5]
    assert run("check", "nope").returncode == 2

    env = dict(os.environ, SMITH_ARROW_SEED="9")
    assert run("gen", "complex", env=env).stdout == run("gen", "complex", "--seed", 9).stdout
