import json
import subprocess
import sys

import pytest

from geograph import certificate
from geograph.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_check_admissible(capsys):
    code, out, _ = run(capsys, "check", "0", "0", "0", "0", "0")
    assert code == 0 and "admissible" in out


def test_check_json_and_negative_numbers(capsys):
    code, out, _ = run(capsys, "check", "60", "108", "96", "12", "-336", "--json")
    assert code == 0 and json.loads(out)["admissible"] is True
    code, out, _ = run(capsys, "check", "1", "0", "0", "0", "0", "--json")
    assert code == 1
    assert json.loads(out)["residues"]["mod720"] == 719


def test_convert_both_ways(capsys):
    code, out, _ = run(capsys, "convert", "60", "108", "96", "12", "-336")
    assert code == 0 and json.loads(out) == {"a": 60, "m": -3, "j": 1, "k": -55, "b": -336}
    code, out, _ = run(capsys, "convert", "--inverse", "60", "-3", "1", "-55", "-336")
    assert code == 0 and json.loads(out)["c2sq"] == 96


def test_convert_errors(capsys):
    assert run(capsys, "convert", "1", "0", "0", "0", "0")[0] == 1
    assert run(capsys, "convert", "--inverse", "1", "1", "0", "0", "0")[0] == 1


def test_realize_verify_round_trip(capsys, tmp_path):
    path = tmp_path / "plan.json"
    code, out, _ = run(capsys, "realize", "--params", "63", "-6", "1", "-70", "-417", "-o", str(path))
    assert code == 0 and "x=45" in out
    code, out, _ = run(capsys, "verify", str(path))
    assert code == 0 and "PASS" in out
    code, out, _ = run(capsys, "verify", str(path), "--json")
    assert json.loads(out)["pass"] is True


def test_realize_chern_to_stdout(capsys):
    code, out, _ = run(capsys, "realize", "60", "108", "96", "12", "-336")
    assert code == 0
    plan = certificate.loads(out)
    assert plan.counts.total == 0


def test_realize_not_admissible(capsys):
    code, _, err = run(capsys, "realize", "1", "0", "0", "0", "0")
    assert code == 1 and "not admissible" in err


def test_realize_needs_target(capsys):
    assert run(capsys, "realize")[0] == 2


def test_realize_exhausted_budget(capsys):
    # target below the j=1 base by one point blow-up
    code, _, err = run(capsys, "realize", "--params", "57", "-3", "1", "-40", "-255", "--lambda-max", "1",
                       "--v-max", "0")
    assert code == 2 and "search bounds" in err


def test_env_budget(capsys, monkeypatch):
    monkeypatch.setenv("GEOGRAPH_SEARCH_BUDGET", "1:0")
    code, _, _ = run(capsys, "realize", "--params", "57", "-3", "1", "-40", "-255")
    assert code == 2


def test_verify_tampered(capsys, tmp_path):
    path = tmp_path / "plan.json"
    run(capsys, "realize", "--params", "63", "-6", "1", "-70", "-417", "-o", str(path))
    d = json.loads(path.read_text())
    d["counts"]["x"] = "46"
    path.write_text(json.dumps(d))
    code, out, _ = run(capsys, "verify", str(path))
    assert code == 1 and "FAIL" in out
    path.write_text("{}")
    assert run(capsys, "verify", str(path))[0] == 1


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--box", "-2:2", "-2:2", "-2:2", "-2:2", "--j", "1")
    summary = json.loads(out)
    assert code == 0 and summary["realized"] == 225 and summary["failed"] == 0


def test_enumerate_negative_j_list(capsys):
    code, out, _ = run(capsys, "enumerate", "--box", "0:0", "0:0", "-1:0", "0:0", "--j", "-2,-1", "0",
                       "--parallel", "2")
    assert code == 0 and json.loads(out)["realized"] == 6


def test_blocks(capsys):
    code, out, _ = run(capsys, "blocks")
    blocks = {b["name"]: b for b in json.loads(out)}
    assert code == 0
    assert (blocks["P"]["c1sq"], blocks["P"]["c2"]) == (-7, 19)
    assert blocks["X(1)"]["lattice"]["full"] is False
    assert blocks["E(3)"]["lattice"]["rank"] == 34
    assert blocks["S"]["used_by_planner"] is False


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "geograph", "check", "0", "2", "0", "0", "0"],
                          capture_output=True, text=True)
    assert proc.returncode == 1 and "NOT admissible" in proc.stdout


@pytest.mark.parametrize("bad", [["enumerate", "--box", "1-2", "0:0", "0:0", "0:0", "--j", "0"], ["nosuch"]])
def test_usage_errors(bad):
    with pytest.raises(SystemExit) as info:
        main(bad)
    assert info.value.code == 2
