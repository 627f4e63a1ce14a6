import subprocess
import sys

import pytest

from graceful.cli import main
from graceful.io import parse, read_document


def run(argv):
    try:
        return main(argv)
    except SystemExit as exc:
        return exc.code


def test_build_label_five_p14(tmp_path, capsys):
    out = tmp_path / "p.txt"
    assert run(["build-label", "--family", "PATH_UNION", "--base", "path:14", "--n", "5",
                "--out", str(out)]) == 0
    doc = read_document(out)
    assert doc.q == 69 and doc.verdict == "GRACEFUL"


def test_build_label_to_stdout(capsys):
    assert run(["build-label", "--family", "OPEN_STAR", "--base", "kmn:4,3", "--t", "3"]) == 0
    doc = parse(capsys.readouterr().out)
    assert doc.verdict == "GRACEFUL" and doc.q == 3 * 13


@pytest.mark.parametrize("argv", [
    ["build-label", "--family", "CYCLE_OF", "--base", "path:2", "--t", "5"],
    ["build-label", "--family", "NOPE", "--base", "path:2", "--t", "2"],
    ["build-label", "--family", "OPEN_STAR", "--base", "cycle:6", "--t", "2"],
    ["build-label", "--family", "PATH_UNION", "--base", "path:2"],
    ["build-label", "--family", "PATH_UNION"],
    ["search", "cycle:5", "--budget-nodes", "many"],
    ["search", "cycle:5", "--budget-nodes", "0"],
    [],
])
def test_usage_errors(argv, capsys):
    assert run(argv) == 2


def test_verify_exit_codes(tmp_path, capsys):
    good = tmp_path / "good.txt"
    run(["build-label", "--family", "STAR_OF", "--base", "kmn:2,2", "--out", str(good)])
    assert run(["verify", str(good)]) == 0
    assert "GRACEFUL" in capsys.readouterr().out

    lines = good.read_text().splitlines()
    k = next(i for i, line in enumerate(lines) if line.startswith("v "))
    head, label = lines[k].rsplit(" ", 1)
    lines[k] = f"{head} {int(label) + 1}"
    bad = tmp_path / "bad.txt"
    bad.write_text("\n".join(lines) + "\n")
    assert run(["verify", str(bad)]) == 1
    assert "FAIL" in capsys.readouterr().out

    cut = tmp_path / "cut.txt"
    cut.write_text(good.read_text()[:200])
    assert run(["verify", str(cut)]) == 2
    assert run(["verify", str(tmp_path / "missing.txt")]) == 2


@pytest.mark.parametrize("argv, status", [
    (["search", "cycle:5"], "EXHAUSTED_NONE"),
    (["search", "cycle:4"], "FOUND"),
    (["search", "grid:2,3", "--alpha"], "FOUND"),
    (["search", "cycle:12", "--budget-nodes", "10"], "INDETERMINATE"),
])
def test_search(argv, status, capsys):
    assert run(argv) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0] == f"status {status}"
    assert "nodes " in out


def test_corpus(tmp_path, capsys):
    assert run(["corpus", "--out", str(tmp_path)]) == 0
    summary = (tmp_path / "summary.tsv").read_text().splitlines()
    assert summary[0] == "family\tbase\tparams\tq\tverdict"
    assert all(line.endswith("GRACEFUL") for line in summary[1:])
    docs = [p for p in tmp_path.iterdir() if p.name != "summary.tsv"]
    assert len(docs) == len(summary) - 1


def test_export_dot(tmp_path, capsys):
    doc = tmp_path / "s.txt"
    run(["build-label", "--family", "OPEN_STAR", "--base", "path:2", "--t", "2", "--out", str(doc)])
    dot = tmp_path / "s.dot"
    assert run(["export-dot", str(doc), "--out", str(dot)]) == 0
    assert dot.read_text().startswith("graph ")
    assert run(["export-dot", str(tmp_path / "nothing")]) == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "graceful", "search", "cycle:4"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.startswith("status FOUND")
