from __future__ import annotations

import pytest
from click.testing import CliRunner

from mmpts import reference as ref
from mmpts.cli import main
from mmpts.codec import corpus_for, decode, read_file, write_file
from mmpts.pipeline import enumerate_designs


@pytest.fixture()
def runner() -> CliRunner:
    return CliRunner()


@pytest.fixture()
def m12_file(tmp_path, mmpts12):
    path = tmp_path / "m12.txt"
    write_file(path, corpus_for(12, mmpts12))
    return path


def _lines(output: str) -> dict[str, str]:
    return dict(line.split("\t", 1) for line in output.splitlines() if "\t" in line)


def test_enumerate_order_eleven(runner, tmp_path):
    out = tmp_path / "m11.txt"
    res = runner.invoke(main, ["enumerate", "--v", "11", "--out", str(out)])
    assert res.exit_code == 0, res.output
    fields = _lines(res.output)
    assert fields["classes"] == "2"
    assert fields["raw"] == "144"
    assert (fields["type_q"], fields["type_n"]) == ("1", "1")
    assert len(read_file(out)) == 2


@pytest.mark.parametrize("v", [12, 13])
def test_worker_count_does_not_change_the_output(runner, tmp_path, v):
    texts = []
    stdouts = []
    for k in (1, 2, 8):
        out = tmp_path / f"w{k}.txt"
        res = runner.invoke(
            main, ["enumerate", "--v", str(v), "--workers", str(k), "--split-depth", "1", "--out", str(out)]
        )
        assert res.exit_code == 0, res.output
        texts.append(out.read_bytes())
        stdouts.append(res.output)
    assert texts[0] == texts[1] == texts[2]
    assert stdouts[0] == stdouts[1] == stdouts[2]


def test_enumerate_with_both_engines(runner, tmp_path):
    res = runner.invoke(main, ["enumerate", "--v", "10", "--engine", "both", "--check", "--out", str(tmp_path / "m10.txt")])
    assert res.exit_code == 0, res.output
    assert _lines(res.output)["classes"] == "2"


def test_analyze_prints_the_labelled_count(runner, m12_file, tmp_path):
    res = runner.invoke(
        main, ["analyze", "--in", str(m12_file), "--labelled-count", "--histogram", str(tmp_path / "h")]
    )
    assert res.exit_code == 0, res.output
    assert "labelled\t1197504000" in res.output.splitlines()
    pasch = (tmp_path / "h" / "pasch.tsv").read_text()
    assert pasch.startswith("# statistic=pasch corpus=m12.txt total=5\n")
    assert (tmp_path / "h" / "groups.tsv").exists()


def test_canon_is_idempotent(runner, m12_file, tmp_path):
    first, second = tmp_path / "c1.txt", tmp_path / "c2.txt"
    assert runner.invoke(main, ["canon", "--in", str(m12_file), "--out", str(first), "--dedupe"]).exit_code == 0
    assert runner.invoke(main, ["canon", "--in", str(first), "--out", str(second), "--dedupe"]).exit_code == 0
    assert first.read_bytes() == second.read_bytes()
    assert len(read_file(first)) == 5


def test_derive_pipeline(runner, tmp_path, design_q, design_n):
    src = tmp_path / "m11.txt"
    write_file(src, corpus_for(11, [design_q, design_n]))
    out = tmp_path / "m10.txt"
    res = runner.invoke(main, ["derive", "--op", "delete-point", "--in", str(src), "--out", str(out), "--dedupe"])
    assert res.exit_code == 0, res.output
    assert _lines(res.output) == {"raw": "8", "written": "2"}
    pbd = tmp_path / "pbd.txt"
    res = runner.invoke(main, ["derive", "--op", "to-pbd", "--in", str(src), "--out", str(pbd)])
    assert _lines(res.output)["written"] == "1"
    assert runner.invoke(main, ["verify", "--in", str(pbd), "--claim", "pbd"]).exit_code == 0
    back = tmp_path / "back.txt"
    res = runner.invoke(main, ["derive", "--op", "from-pbd", "--in", str(pbd), "--out", str(back), "--dedupe"])
    assert _lines(res.output) == {"raw": "15", "written": "1"}


def test_verify_accepts_a_good_file(runner, m12_file):
    res = runner.invoke(main, ["verify", "--in", str(m12_file)])
    assert res.exit_code == 0
    assert _lines(res.output) == {"checked": "5", "invalid": "0"}


def test_verify_reports_a_corrupted_character(runner, m12_file):
    lines = m12_file.read_text().splitlines()
    s = lines[2]
    lines[2] = s[:8] + ("4" if s[8] != "4" else "5") + s[9:]
    m12_file.write_text("\n".join(lines) + "\n")
    res = runner.invoke(main, ["verify", "--in", str(m12_file)])
    assert res.exit_code != 0
    assert "line 3" in res.output


def test_verify_sts_claim(runner, tmp_path):
    path = tmp_path / "s13.txt"
    write_file(path, corpus_for(13, enumerate_designs(13).designs()))
    assert runner.invoke(main, ["verify", "--in", str(path), "--claim", "sts"]).exit_code == 0


def test_bad_header_is_an_error(runner, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("hello\n" + ref.MMPTS12[0][0] + "\n")
    res = runner.invoke(main, ["verify", "--in", str(path)])
    assert res.exit_code != 0


def test_selftest_runs_selected_criteria(runner):
    res = runner.invoke(main, ["selftest", "--criteria", "2,7"])
    assert res.exit_code == 0, res.output
    lines = res.output.splitlines()
    assert lines[0].startswith("criterion 2: PASS")
    assert lines[1].startswith("criterion 7: PASS")


def test_decode_of_published_rows_is_stable():
    assert [decode(r[0], 12).triples[0] for r in ref.MMPTS12] == [(0, 2, 4)] * 5
