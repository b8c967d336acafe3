from cylnet.algebra import (MPoly, TPoly, parse_tpoly)
from cylnet.workflows.cli import run
from io import StringIO
from os.path import join
import json

root = join("test", "test_files")
FIG1 = join(root, "fig1.json")


def call(*argv, stdin: str = ""):
    """Exit status, standard output and standard error of a command line"""
    out, err = StringIO(), StringIO()
    status = run(list(argv), stdin=StringIO(stdin), stdout=out, stderr=err)
    return status, out.getvalue(), err.getvalue()


def cycles_line(text: str) -> TPoly:
    line, = [x for x in text.splitlines() if x.startswith("cycles: ")]
    return parse_tpoly(line[len("cycles: "):])


def test_qpoly():
    """
    Q_N of the running example from both methods
    """
    status, out, _ = call("qpoly", FIG1)
    assert status == 0
    assert cycles_line(out) == parse_tpoly("t^2 - a*t - e*t - c*d*t + a*e - b*d")
    assert "AGREE" in out and "DISAGREE" not in out


def test_json_output():
    status, out, _ = call("qpoly", FIG1, "--json")
    data = json.loads(out)
    assert status == 0 and data["agree"] and data["degree"] == 2


def test_plethysm():
    status, out, _ = call("plee", FIG1, "-r", "2")
    assert status == 0
    assert parse_tpoly(out.strip()) == parse_tpoly("t - a*e + b*d")


def test_verify():
    """
    Q^(2) annihilates the LGV sequence of the example, t - 1 does not
    """
    status, out, _ = call("verify", FIG1, "--sources", "u@0,v@0", "--sinks", "u@1,v@1")
    assert status == 0 and out.strip().endswith("PASS")
    status, out, _ = call("verify", FIG1, "--sources", "u@0,v@0", "--sinks", "u@1,v@1",
                          "--poly", "t - 1")
    assert status == 1 and out.strip().endswith("FAIL")


def test_family_pipe():
    """
    The network printed by ``family`` is read back from the standard input
    """
    status, out, _ = call("family", "schur", "-n", "2", "-m", "2")
    assert status == 0
    status, out, _ = call("qpoly", "-", stdin=out)
    assert status == 0
    x1, x2 = MPoly.var("x1") ** 2, MPoly.var("x2") ** 2
    assert cycles_line(out) == TPoly.from_coefficients([x1 * x2, -(x1 + x2), 1])


def test_run_input_files():
    for name in ("input_qpoly.yml", "input_verify.yml"):
        status, _, err = call("run", "-i", join(root, name))
        assert status == 0, err
    status, out, _ = call("run", "-i", join(root, "input_oracle_schur.yml"))
    assert status == 0 and "AGREE" in out and "DISAGREE" not in out


def test_usage_errors():
    """
    Invalid inputs exit with status 2
    """
    status, _, err = call("run", "-i", join(root, "input_invalid.yml"))
    assert status == 2 and "error" in err
    status, _, _ = call("qpoly", join(root, "missing.json"))
    assert status == 2
    status, _, _ = call("qpoly", "-", stdin='{"vertices": []}')
    assert status == 2
    assert call("--help")[0] == 0
    assert call("spectrum")[0] == 2


def test_computation_errors():
    """
    A cycle without positive winding exits with status 1
    """
    status, _, err = call("qpoly", join(root, "not_positive.json"))
    assert status == 1 and "NonPositiveWinding" in err


def test_conjecture_status():
    """
    The exit status reports whether counterexamples were found
    """
    status, out, _ = call("conjecture", "tp", FIG1, "--trials", "4", "--json")
    data = json.loads(out)
    assert data["instances"] == 4
    assert status == (1 if data["counterexamples"] else 0)


def test_log_file(tmp_path):
    log = tmp_path / "cylnet.log"
    status, _, _ = call("qpoly", FIG1, "--log", str(log))
    assert status == 0
    assert "Running workflow: qpoly" in log.read_text()


def test_domino_weights(tmp_path):
    """
    Lattice point weights read from a file replace the variables x{p}_{q}
    """
    path = tmp_path / "weights.yml"
    path.write_text('"0,1": y\n"1,1": 1\n')
    status, out, _ = call("family", "domino", "-n", "1", "-m", "2", "--weights", str(path))
    assert status == 0
    data = json.loads(out)
    assert data["vars"] == ["y"]
    assert all("x" not in edge["weight"] for edge in data["edges"])

    status, out, _ = call("qpoly", "-", stdin=out)
    assert status == 0 and "AGREE" in out and "DISAGREE" not in out


def test_invalid_domino_weights(tmp_path):
    """
    Boundary points, points outside a period and non unit weights are refused
    """
    for text in ('"0,0": y\n', '"0,2": y\n', '"2,1": y\n', '"0,1": 2\n',
                 '"0,1": y + 1\n', '"0,1": 0\n', '"x": y\n', '- 1\n'):
        path = tmp_path / "weights.yml"
        path.write_text(text)
        status, _, err = call("family", "domino", "-n", "1", "-m", "2", "--weights", str(path))
        assert status == 2, text
        assert "error" in err
    status, _, _ = call("family", "schur", "-n", "2", "-m", "2", "--weights", str(path))
    assert status == 2


def test_oracle_rpp_alias():
    """
    ``rpp`` and ``lozenge`` run the same comparison
    """
    args = ["-a", "2", "-b", "1", "-c", "1", "-d", "2", "-r", "2", "-L", "2"]
    status, out, _ = call("oracle", "rpp", *args)
    assert status == 0 and out.splitlines()[-1] == "AGREE"
    assert call("oracle", "lozenge", *args)[1] == out


def test_qpoly_cancelling_top_coefficients(tmp_path):
    """
    Both methods give t - 3 on the running example with unit weights
    """
    path = tmp_path / "ones.json"
    network = json.loads(open(FIG1).read())
    for edge in network["edges"]:
        edge["weight"] = "1"
    network.pop("vars", None)
    path.write_text(json.dumps(network))
    status, out, _ = call("qpoly", str(path))
    assert status == 0
    assert cycles_line(out) == parse_tpoly("t - 3")
    assert "AGREE" in out and "DISAGREE" not in out
