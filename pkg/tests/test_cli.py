import json
import subprocess
import sys

import pytest

from leibniz import QQ, io
from leibniz.cli import main
from leibniz.fixtures import FIXTURES, emit, filename


@pytest.fixture
def data(tmp_path):
    for name in FIXTURES:
        emit(name, tmp_path)
    return tmp_path


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def f(data, name):
    return data / filename(name)


def test_check_leibniz_holds(capsys, data):
    code, out, _ = run(capsys, "check", "leibniz", f(data, "alg2"))
    assert code == 0
    report = json.loads(out)
    assert report["status"] == "holds" and not report.get("witnesses")


def test_check_clybe_failure_reports_residual(capsys, data):
    code, out, _ = run(capsys, "check", "clybe", f(data, "r-e2e2"))
    assert code == 1
    report = json.loads(out)
    assert report["status"] == "fails"
    (w,) = report["witnesses"]
    assert w["condition"] == "yang-baxter"
    residual = {tuple(e["index"]): e["coeff"] for e in w["residual"]}
    assert residual == {(1, 2, 2): "-4", (2, 1, 2): "2", (2, 2, 1): "2"}


@pytest.mark.parametrize(
    "kind,names",
    [
        ("rep", ["alg2-dualreg"]),
        ("rep", ["alg2", "alg2-dualreg"]),
        ("relative-rb", ["alg2-dualreg", "k-family-i"]),
        ("relative-rb", ["alg2", "alg2-dualreg", "k-family-iii"]),
        ("clybe", ["r-family-i"]),
        ("clybe", ["r-family-ii"]),
        ("quadratic", ["manin-alg2"]),
        ("manin", ["manin-alg2"]),
        ("dendriform", ["omni1"]),
    ],
)
def test_checks_on_fixtures_hold(capsys, data, kind, names):
    code, out, _ = run(capsys, "check", kind, *(f(data, n) for n in names))
    assert code == 0, out
    assert json.loads(out)["status"] == "holds"


def test_rb_check_fails_for_identity(capsys, data, tmp_path):
    K = tmp_path / "id.json"
    K.write_text(io.dumps(io.operator_to_json(QQ.identity(2), QQ)))
    code, out, _ = run(capsys, "check", "rb", f(data, "alg2"), K)
    assert code == 1 and json.loads(out)["status"] == "fails"


def test_classify_over_f5(capsys, data):
    code, out, _ = run(capsys, "classify", "rb", f(data, "alg2"), f(data, "alg2-dualreg"), "--prime", 5)
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 33
    mats = [json.loads(line)["matrix"] for line in lines]
    keys = [tuple(int(x) for row in M for x in row) for M in mats]
    assert keys == sorted(keys)
    assert [[0, 0], [0, 0]] == [[int(x) for x in row] for row in mats[0]]


def test_classify_backends_and_jobs_agree(capsys, data):
    outs = set()
    for extra in (["--backend", "python"], ["--backend", "cython"], ["--jobs", "3"]):
        code, out, _ = run(capsys, "classify", "rb", f(data, "alg2"), f(data, "alg2-dualreg"), "--prime", 3, *extra)
        assert code == 0
        outs.add(out)
    assert len(outs) == 1


@pytest.mark.parametrize(
    "argv",
    [
        ["check", "bialgebra", "@tri"],
        ["check", "clybe", "r-e2e2"],
        ["build", "manin-standard", "alg2"],
        ["bracket", "tensor", "alg2", "r-e2e2", "r-family-ii", "--route", "closed"],
        ["classify", "rb", "alg2", "alg2-dualreg", "--prime", "3"],
    ],
)
def test_identical_invocations_are_byte_identical(capsys, data, argv):
    if "@tri" in argv:
        tri = data / "tri.json"
        assert main(["build", "triangular", str(f(data, "r-family-ii")), "-o", str(tri)]) == 0
    resolved = [str(data / "tri.json") if a == "@tri" else str(f(data, a)) if a in FIXTURES else a for a in argv]
    first = run(capsys, *resolved)
    second = run(capsys, *resolved)
    assert first == second


def test_build_outputs_pass_their_own_checks(capsys, data, tmp_path):
    out = tmp_path / "out"
    out.mkdir()

    def build(kind, *inputs):
        target = out / f"{kind}.json"
        code, _, err = run(capsys, "build", kind, *inputs, "-o", target)
        assert code == 0, err
        return target

    def holds(kind, *inputs):
        code, text, _ = run(capsys, "check", kind, *inputs)
        assert code == 0, text
        assert json.loads(text)["status"] == "holds"

    holds("rep", build("dual-rep", f(data, "alg2-dualreg")))
    semi = build("semidirect", f(data, "alg2-dualreg"))
    holds("leibniz", semi)

    split = out / "split.json"
    split.write_text(io.dumps({"algebra": semi.name, "d1": 2}))
    twisted = build("twist", split, f(data, "k-family-i"))
    holds("matched-pair", twisted)
    holds("leibniz", _embedded_algebra(twisted, out))

    tri = build("triangular", f(data, "r-family-ii"))
    holds("bialgebra", tri)
    holds("matched-pair", tri)
    holds("manin", tri)
    holds("leibniz", build("bowtie", tri))

    manin = build("manin-standard", f(data, "alg2"))
    holds("manin", manin)
    holds("quadratic", manin)

    dend = build("dendriform-from-rb", f(data, "alg2-dualreg"), f(data, "k-family-ii"))
    holds("dendriform", dend)
    holds("clybe", build("canonical-r", dend))
    holds("clybe", build("canonical-r", f(data, "omni1")))
    holds("clybe", build("solution-from-rb", f(data, "alg2-dualreg"), f(data, "k-family-i")))


def _embedded_algebra(split_path, out):
    obj = json.loads(split_path.read_text())
    target = out / "twisted_algebra.json"
    target.write_text(io.dumps(obj["algebra"]))
    return target


def test_build_to_stdout_matches_file(capsys, data, tmp_path):
    code, text, _ = run(capsys, "build", "manin-standard", f(data, "alg2"))
    assert code == 0
    target = tmp_path / "m.json"
    run(capsys, "build", "manin-standard", f(data, "alg2"), "-o", target)
    assert target.read_text() == text


def test_tensor_bracket_routes(capsys, data, tmp_path):
    P = tmp_path / "p.json"
    T = QQ.zeros((2, 2))
    T[1, 1] = QQ.one
    P.write_text(io.dumps(io.tensor_to_json(T, QQ)))
    results = []
    for route in ("transfer", "closed"):
        code, out, _ = run(capsys, "bracket", "tensor", f(data, "alg2"), P, P, "--route", route)
        assert code == 0
        obj = json.loads(out)
        results.append({tuple(e["index"]): e["coeff"] for e in obj["entries"]})
    assert results[0] == results[1] == {(2, 1, 2): "2", (1, 2, 2): "-4", (2, 2, 1): "2"}


def test_balavoine_square_of_leibniz_bracket_is_zero(capsys, tmp_path):
    from helpers import alg2

    m = tmp_path / "mu.json"
    m.write_text(io.dumps(io.map_to_json(alg2().c, QQ)))
    code, out, _ = run(capsys, "bracket", "balavoine", m, m)
    assert code == 0
    obj = json.loads(out)
    assert obj["arity"] == 3 and obj["entries"] == []


def test_derived_bracket_of_operator_vanishes(capsys, data):
    K = f(data, "k-family-ii")
    code, out, _ = run(capsys, "bracket", "derived", f(data, "alg2-dualreg"), K, K)
    assert code == 0
    assert json.loads(out)["entries"] == []


def test_pretty_report(capsys, data):
    code, out, _ = run(capsys, "check", "clybe", f(data, "r-e2e2"), "--pretty")
    assert code == 1
    assert "fails" in out.splitlines()[0]
    assert "[1, 2, 2]: -4" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["check", "leibniz", "/nonexistent/g.json"],
        ["check", "leibniz"],
        ["check", "frobnicate", "x.json"],
        ["check", "rb", "@alg2"],
        ["classify", "rb", "@alg2", "@alg2-dualreg", "--prime", "4"],
        ["classify", "rb", "@alg2", "@alg2-dualreg"],
        ["classify", "rb", "@alg2", "@alg2-dualreg", "--prime", "5", "--jobs", "0"],
        ["bracket", "tensor", "@alg2", "@r-e2e2", "@r-e2e2", "--route", "sideways"],
        ["fixtures", "nope", "--stdout"],
        ["fixtures", "--stdout"],
        ["check", "leibniz", "@bad"],
        ["check", "leibniz", "@float"],
        ["check", "dendriform", "@alg2"],
        ["build", "twist", "@alg2", "@k-family-i"],
        [],
    ],
)
def test_bad_input_exits_two(capsys, data, argv):
    (data / "bad.json").write_text("{oops")
    (data / "float.json").write_text(json.dumps({"field": {"kind": "rational"}, "dim": 1, "brackets": [{"i": 1, "j": 1, "out": {"1": 0.5}}]}))
    names = {**{n: f(data, n) for n in FIXTURES}, "bad": data / "bad.json", "float": data / "float.json"}
    argv = [str(names[a[1:]]) if a.startswith("@") else a for a in argv]
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert err.startswith("error:") and "Traceback" not in err
    assert out == ""


def test_fixtures_list_and_stdout(capsys, tmp_path):
    code, out, _ = run(capsys, "fixtures", "--list")
    assert code == 0 and json.loads(out)["fixtures"] == sorted(FIXTURES)
    code, out, _ = run(capsys, "fixtures", "alg2", "--stdout")
    assert code == 0
    assert io.algebra_from_json(json.loads(out)).dim == 2
    code, out, _ = run(capsys, "fixtures", "omni1", "r-e2e2", "-d", tmp_path)
    assert code == 0
    assert sorted(p.name for p in tmp_path.iterdir()) == ["omni1.json", "r_e2e2.json"]


def test_module_entry_point(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "leibniz", "fixtures", "alg2", "--stdout"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0
    path = tmp_path / "g.json"
    path.write_text(proc.stdout)
    proc = subprocess.run([sys.executable, "-m", "leibniz", "check", "leibniz", str(path)], capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["status"] == "holds"
    proc = subprocess.run([sys.executable, "-m", "leibniz", "check", "leibniz", str(tmp_path / "none.json")], capture_output=True, text=True)
    assert proc.returncode == 2 and "Traceback" not in proc.stderr
