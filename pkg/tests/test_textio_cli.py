import json
import subprocess
import sys

import pytest

from necklacekit import (
    QuiverFormatError,
    double,
    parse_dim_vector,
    parse_necklace,
    parse_path,
    parse_quiver_text,
    parse_weight,
)
from necklacekit.cli import main

CALOGERO_TEXT = """\
# the two-vertex quiver with one connecting arrow and one loop
vertices: 2
arrows: a 1 2, b 2 2
"""


@pytest.fixture()
def calogero_file(tmp_path):
    path = tmp_path / "calogero.quiver"
    path.write_text(CALOGERO_TEXT, encoding="utf-8")
    return str(path)


@pytest.fixture()
def loop_file(tmp_path):
    path = tmp_path / "loop.quiver"
    path.write_text("vertices: 1\narrows: x 1 1\n", encoding="utf-8")
    return str(path)


def test_parse_quiver_text():
    q = parse_quiver_text(CALOGERO_TEXT)
    assert q.vertex_count == 2
    assert [(a.label, a.source, a.target) for a in q.arrows] == [("a", 1, 2), ("b", 2, 2)]
    empty = parse_quiver_text("vertices: 1\narrows:\n")
    assert empty.arrows == ()


def test_parse_quiver_errors_carry_line_numbers():
    with pytest.raises(QuiverFormatError, match=":2:.*reserved star suffix"):
        parse_quiver_text("vertices: 1\narrows: a* 1 1\n")
    with pytest.raises(QuiverFormatError, match=":3:.*duplicate"):
        parse_quiver_text("vertices: 2\narrows: a 1 2\narrows: a 2 1\n")
    with pytest.raises(QuiverFormatError, match=":2:.*outside"):
        parse_quiver_text("vertices: 2\narrows: a 1 5\n")
    with pytest.raises(QuiverFormatError, match="missing 'vertices:'"):
        parse_quiver_text("# nothing here\n")
    with pytest.raises(QuiverFormatError, match=":1:"):
        parse_quiver_text("vertices: none\n")


def test_parse_path_and_necklace():
    q = double(parse_quiver_text(CALOGERO_TEXT))
    p = parse_path(q, "a b a*")
    assert p.arrows == ("a", "b", "a*")
    assert str(parse_path(q, "e2")) == "e2"
    with pytest.raises(ValueError, match="ends at vertex 2 but 'a' starts at vertex 1"):
        parse_path(q, "a a")
    word = parse_necklace(q, "b a* a")
    assert word.arrows == ("a", "b", "a*")  # canonicalized rotation
    with pytest.raises(ValueError, match="not closed"):
        parse_necklace(q, "a")


def test_parse_vectors():
    assert parse_dim_vector("1,2", 2) == (1, 2)
    assert parse_weight("-1/2, 3", 2) == (__import__("fractions").Fraction(-1, 2), 3)
    with pytest.raises(ValueError):
        parse_dim_vector("1,2,3", 2)
    with pytest.raises(ValueError):
        parse_dim_vector("1,-2", 2)
    with pytest.raises(ValueError):
        parse_weight("0.5x,1", 2)


def test_cli_info(calogero_file, capsys):
    assert main(["info", calogero_file]) == 0
    out = capsys.readouterr().out
    assert "euler form" in out and "[ 2 -1]" in out


def test_cli_classify_json_roundtrip(calogero_file, tmp_path, capsys):
    json_path = tmp_path / "report.json"
    rc = main(
        ["classify", calogero_file, "--lambda", "-2,1", "--alpha", "1,2", "--json", str(json_path)]
    )
    assert rc == 0
    out = capsys.readouterr().out
    report = json.loads(json_path.read_text(encoding="utf-8"))
    assert report["schema"] == "necklace-kit/1"
    assert report["coadjoint"] is True
    assert report["dim_fiber"] == 8
    assert report["dim_quotient"] == 4
    # text and JSON agree on the numbers
    assert "dim fiber: 8" in out
    assert "dim quotient: 4" in out


def test_cli_bracket(loop_file, capsys):
    assert main(["bracket", loop_file, "--w1", "x x", "--w2", "x* x*"]) == 0
    out = capsys.readouterr().out.strip()
    assert out == "4 [x x*]"


def test_cli_roots_table(calogero_file, capsys):
    assert main(["roots", calogero_file, "--box", "2,3"]) == 0
    out = capsys.readouterr().out
    assert "(1, 0)  real" in out
    assert "(2, 3)  imaginary" in out
    assert "total: 9 (1 real, 8 imaginary)" in out


def test_cli_sigma_witness(calogero_file, capsys):
    assert main(["sigma", calogero_file, "--alpha", "0,2", "--lambda", "0,0"]) == 0
    out = capsys.readouterr().out
    assert "in S_lambda: False" in out
    assert "violated by" in out


def test_cli_derham_karoubi(loop_file, capsys):
    assert main(["derham", loop_file, "--max-degree", "2", "--max-length", "3"]) == 0
    out = capsys.readouterr().out
    assert "0  0    1" in out  # vertex class in homology degree 0, length 0
    assert main(["karoubi", loop_file, "--max-degree", "0", "--max-length", "2"]) == 0
    out = capsys.readouterr().out
    assert "0  2    3" in out


def test_cli_moment(calogero_file, capsys):
    rc = main(
        ["moment", calogero_file, "--alpha", "1,2", "--lambda", "-2,1", "--seeds", "2"]
    )
    assert rc == 0
    out = capsys.readouterr().out
    assert "converged: 2/2" in out
    assert "rank 4, fiber dim 8" in out


def test_cli_domain_error_exit_code(calogero_file, capsys):
    rc = main(["classify", calogero_file, "--lambda", "1,1,1", "--alpha", "1,2"])
    assert rc == 1
    err = capsys.readouterr().err
    assert err.startswith("error:")


def test_cli_usage_error_exit_code(calogero_file):
    with pytest.raises(SystemExit) as exc:
        main(["classify", calogero_file, "--lambda", "-2,1", "--alpha", "1,2", "--nope"])
    assert exc.value.code == 2


def test_cli_json_determinism(calogero_file, tmp_path):
    paths = [tmp_path / "one.json", tmp_path / "two.json"]
    for path in paths:
        rc = main(
            [
                "moment",
                calogero_file,
                "--alpha",
                "1,2",
                "--lambda",
                "-2,1",
                "--seeds",
                "3",
                "--json",
                str(path),
            ]
        )
        assert rc == 0
    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_cli_threads_identical_results(calogero_file, tmp_path):
    single = tmp_path / "single.json"
    threaded = tmp_path / "threaded.json"
    base = ["moment", calogero_file, "--alpha", "1,2", "--lambda", "-2,1", "--seeds", "4"]
    assert main(base + ["--json", str(single)]) == 0
    assert main(base + ["--threads", "4", "--json", str(threaded)]) == 0
    assert single.read_bytes() == threaded.read_bytes()


@pytest.mark.parametrize(
    "argv",
    [
        ["info"],
        ["roots", "--box", "2,3"],
        ["sigma", "--alpha", "1,2", "--lambda", "-2,1"],
        ["classify", "--alpha", "1,2", "--lambda", "-2,1"],
        ["derham", "--max-degree", "1", "--max-length", "2"],
        ["karoubi", "--max-degree", "1", "--max-length", "2"],
        ["moment", "--alpha", "1,2", "--lambda", "-2,1", "--seeds", "1"],
    ],
)
def test_cli_every_report_carries_schema(argv, calogero_file, tmp_path, capsys):
    json_path = tmp_path / "out.json"
    rc = main([argv[0], calogero_file] + argv[1:] + ["--json", str(json_path)])
    assert rc == 0
    report = json.loads(json_path.read_text(encoding="utf-8"))
    assert report["schema"] == "necklace-kit/1"
    assert report["command"] == argv[0]
    assert report["quiver"]["vertices"] == 2


def test_cli_bracket_schema(loop_file, tmp_path, capsys):
    json_path = tmp_path / "bracket.json"
    rc = main(
        ["bracket", loop_file, "--w1", "x x", "--w2", "x* x*", "--json", str(json_path)]
    )
    assert rc == 0
    report = json.loads(json_path.read_text(encoding="utf-8"))
    assert report["schema"] == "necklace-kit/1"
    assert report["result"] == [["[x x*]", "4"]]


def test_cli_entry_point_subprocess(calogero_file):
    proc = subprocess.run(
        [sys.executable, "-m", "necklacekit.cli", "info", calogero_file],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "tits form" in proc.stdout
