import json

import pytest

from liec.cli import EXIT_BOW_TIE, EXIT_ERROR, EXIT_NEEDS_MORE, EXIT_NON_COLORABLE, EXIT_OK, main
from liec.io import parse_edge_list
from liec.templates import BOW_TIE

BOW_TIE_EDGES = "".join(f"{u} {v}\n" for u, v in BOW_TIE.graph.edges)


@pytest.fixture
def files(tmp_path):
    paths = {
        "tri": "0 1\n1 2\n0 2\n",
        "bow": BOW_TIE_EDGES,
        "star": "0 1\n0 2\n0 3\n1 4\n",
        "c4tail": "0 1\n1 2\n2 3\n0 3\n3 4\n",
        "k4": "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n",
        "bad": "0 1\n1 q\n",
        "split": "0 1\n2 3\n",
    }
    out = {}
    for name, text in paths.items():
        p = tmp_path / f"{name}.txt"
        p.write_text(text)
        out[name] = str(p)
    return out


def run(capsys, *argv):
    code = main(list(argv))
    cap = capsys.readouterr()
    return code, cap.out, cap.err


def test_color_ok(files, capsys):
    code, out, _ = run(capsys, "color", files["c4tail"])
    rep = json.loads(out)
    assert code == EXIT_OK
    assert rep["verified"] and rep["colors"] <= 3
    assert rep["verdict"] == "Colorable"


def test_color_non_colorable(files, capsys):
    code, out, _ = run(capsys, "color", files["tri"])
    assert code == EXIT_NON_COLORABLE
    assert json.loads(out)["coloring"] is None


@pytest.mark.parametrize("method", ["construct", "oracle"])
def test_color_bow_tie(files, capsys, method):
    code, out, _ = run(capsys, "color", files["bow"], "--method", method)
    rep = json.loads(out)
    assert code == EXIT_BOW_TIE
    assert rep["colors"] == 4 and rep["verified"]


def test_color_needs_more_than_max(files, capsys):
    code, out, _ = run(capsys, "color", files["c4tail"], "--max-colors", "1")
    assert code == EXIT_NEEDS_MORE


def test_color_several_files_and_trace(files, capsys):
    code, out, _ = run(capsys, "color", files["star"], files["c4tail"], "--trace")
    lines = [json.loads(x) for x in out.splitlines()]
    assert len(lines) == 2 and code == EXIT_OK
    assert all("trace" in r for r in lines)


def test_color_jobs(files, capsys):
    code, out, _ = run(capsys, "color", files["star"], files["tri"], "--jobs", "2")
    assert code == EXIT_NON_COLORABLE
    assert len(out.splitlines()) == 2


def test_color_writes_dot(files, capsys, tmp_path):
    dot = tmp_path / "out.dot"
    code, _, _ = run(capsys, "color", files["star"], "--dot", str(dot))
    assert code == EXIT_OK
    assert dot.read_text().startswith("graph")


def test_construct_rejects_non_cactus(files, capsys):
    code, out, _ = run(capsys, "color", files["k4"])
    assert code == EXIT_ERROR
    assert "cactus" in json.loads(out)["error"]
    code, out, _ = run(capsys, "color", files["k4"], "--method", "oracle")
    assert code == EXIT_OK and json.loads(out)["verified"]


def test_disconnected_and_malformed(files, capsys):
    code, out, _ = run(capsys, "color", files["split"])
    assert code == EXIT_ERROR
    code, _, err = run(capsys, "classify", files["bad"])
    assert code == EXIT_ERROR and "line 2" in err


def test_classify(files, capsys):
    code, out, _ = run(capsys, "classify", files["tri"], "--json")
    assert code == EXIT_OK
    assert json.loads(out)["verdict"] == "NonColorableT"  # the triangle is the base of the T family
    _, out, _ = run(capsys, "classify", files["bow"])
    assert out.startswith("BowTieB")


def test_chromatic_index(files, capsys):
    _, out, _ = run(capsys, "chromatic-index", files["bow"])
    assert out.strip() == "4"
    _, out, _ = run(capsys, "chromatic-index", files["tri"], "--json")
    assert json.loads(out)["chromatic_index"] is None


def test_verify_round_trip(files, capsys, tmp_path):
    _, out, _ = run(capsys, "color", files["c4tail"])
    col = tmp_path / "col.json"
    col.write_text(json.dumps(json.loads(out)["coloring"]))
    code, out, _ = run(capsys, "verify", files["c4tail"], str(col))
    assert code == EXIT_OK and out.strip() == "ok"


def test_verify_reports_violation(files, capsys, tmp_path):
    col = tmp_path / "col.json"
    col.write_text('{"colors": 1, "assignment": {"0-1": 0, "1-2": 0, "2-3": 0, "0-3": 0, "3-4": 0}}')
    code, out, _ = run(capsys, "verify", files["c4tail"], str(col), "--json")
    rep = json.loads(out)
    assert code == EXIT_ERROR and not rep["ok"] and "violating_edge" in rep


def test_verify_mismatch(files, capsys, tmp_path):
    col = tmp_path / "col.json"
    col.write_text('{"colors": 1, "assignment": {"0-1": 0}}')
    code, out, _ = run(capsys, "verify", files["c4tail"], str(col))
    assert code == EXIT_ERROR and "uncolored" in out


def test_gen_cactus_is_reproducible(capsys):
    _, a, _ = run(capsys, "gen", "--cactus", "-n", "12", "-c", "3", "--seed", "4")
    _, b, _ = run(capsys, "gen", "--cactus", "-n", "12", "-c", "3", "--seed", "4")
    assert a == b
    assert parse_edge_list(a).n == 12


def test_gen_t_family_and_enumerate(capsys):
    code, out, _ = run(capsys, "gen", "--t-family", "--steps", "2", "--seed", "1")
    assert code == EXIT_OK and out.startswith("# steps:")
    _, out, _ = run(capsys, "gen", "--enumerate", "--max-edges", "3", "--json")
    assert len(out.splitlines()) == 5


def test_gen_cactus_needs_sizes(capsys):
    code, _, err = run(capsys, "gen", "--cactus")
    assert code == EXIT_ERROR and "-n" in err


def test_selftest_small(capsys):
    code, out, _ = run(capsys, "selftest", "--max-edges", "8", "--max-vertices", "5")
    assert code == EXIT_OK
    assert out.count("[PASS]") == 8


def test_search_counterexamples(capsys):
    code, out, err = run(capsys, "search-counterexamples", "--max-vertices", "5")
    assert code == EXIT_OK and out == ""
    assert err.startswith("0 graph(s)")
    _, out, err = run(capsys, "search-counterexamples", "--max-vertices", "4", "--kmax", "2", "--json")
    assert err.split()[0] != "0"
    assert all("chromatic_index" in json.loads(x) for x in out.splitlines())
