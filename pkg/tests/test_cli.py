import io
import json
import subprocess
import sys

import pytest

from superhopf.cli import run

BROKEN = {"kind": "hopf", "truncation": 4, "generators": [{"name": "T"}],
          "coproduct": {"T": [["T", "1"]]}, "counit": {"T": "0"}, "antipode": {"T": "-T"}}


def _run(argv):
    buf = io.StringIO()
    code = run(argv, stdout=buf)
    return code, buf.getvalue()


def _gallery(tmp_path, *args, name="doc.json"):
    code, text = _run(["gallery", *args])
    assert code == 0
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def _checks(report):
    return dict(line.split(": ", 1) for line in report.splitlines())


def test_gallery_piped_into_check_hopf():
    cmd = [sys.executable, "-m", "superhopf.cli"]
    g = subprocess.run(cmd + ["gallery", "gl", "1", "1"], capture_output=True, text=True, check=True)
    r = subprocess.run(cmd + ["check-hopf", "-"], input=g.stdout, capture_output=True, text=True)
    assert r.returncode == 0
    assert "result: pass" in r.stdout


def test_broken_counit(tmp_path):
    p = tmp_path / "broken.json"
    p.write_text(json.dumps(BROKEN))
    code, out = _run(["check-hopf", str(p)])
    assert code == 1
    assert _checks(out)["check.counit"] == "fail counit(T)"


def test_grouplaw_additive(tmp_path):
    p = _gallery(tmp_path, "additive")
    code, out = _run(["grouplaw", p])
    assert code == 0 and _checks(out)["law.T"] == "T + T'"


def test_hcp_commands(tmp_path):
    g = _gallery(tmp_path, "gl", "1", "1", name="g.json")
    h = _gallery(tmp_path, "gl", "1", "1", "--part", "hcp", name="h.json")
    assert _run(["check-hcp", h])[0] == 0
    out_b = tmp_path / "b.json"
    code, rep = _run(["build-b", h, "--emit", str(out_b)])
    assert code == 0 and out_b.exists()
    assert _run(["check-hopf", str(out_b)])[0] == 0
    code, rep = _run(["eta", g, h])
    assert code == 0 and _checks(rep)["eta.P11"] == "X11*P11"


def test_check_lie(tmp_path):
    p = tmp_path / "lie.json"
    p.write_text(json.dumps({"kind": "lie", "basis": [["x", 0], ["y", 0]], "brackets": [["x", "y", {"x": 1}]]}))
    code, out = _run(["check-lie", str(p)])
    assert code == 1  # antisymmetry needs [y, x] as well
    p.write_text(json.dumps({"kind": "lie", "basis": [["x", 0], ["y", 0]],
                             "brackets": [["x", "y", {"x": 1}], ["y", "x", {"x": -1}]]}))
    assert _run(["check-lie", str(p)])[0] == 0


def test_hopfmod_commands(tmp_path):
    hm = _gallery(tmp_path, "hopf-module", "2", "--seed", "4", name="hm.json")
    code, out = _run(["hopfmod", hm])
    assert code == 0 and _checks(out)["check.dimension_identity"] == "pass"
    xi = _gallery(tmp_path, "surjection", "xi", name="xi.json")
    code, out = _run(["hopfmod", xi])
    assert code == 0 and _checks(out)["xi_equals_ret"] == "no"


def test_dualize_round_trip(tmp_path):
    p = _gallery(tmp_path, "additive", "--level", "4")
    code, dual = _run(["dualize", p])
    assert code == 0 and dual.startswith("kind hyper")
    (tmp_path / "d.txt").write_text(dual)
    code, back = _run(["dualize", str(tmp_path / "d.txt")])
    (tmp_path / "b.txt").write_text(back)
    code, again = _run(["dualize", str(tmp_path / "b.txt")])
    assert again == dual


def test_error_exit_codes(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{"kind": "hopf", "generators": [{"name": "T"}], "coproduct": {"T": [["T*", "1"]]}, "counit": {}}')
    assert _run(["check-hopf", str(p)])[0] == 2
    assert _run(["check-hopf", str(tmp_path / "missing.json")])[0] == 2
    with pytest.raises(SystemExit) as err:
        _run(["check-hopf", "--field", "fp:2", str(p)])
    assert err.value.code == 2


def test_reports_are_deterministic(tmp_path):
    h = _gallery(tmp_path, "gl", "1", "1", "--part", "hcp")
    first = _run(["build-b", h])
    second = _run(["build-b", h])
    assert first == second
