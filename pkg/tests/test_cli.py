import json

import pytest

from cellscope.cli import main
from cellscope.tableaux import tableau_from_json, tableau_to_json, tau_top, parse_shape


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_cells_rank2(capsys):
    code, out, _ = run(capsys, "cells", "--n", "2")
    assert code == 0
    lines = [json.loads(line) for line in out.splitlines()]
    assert len(lines) == 2
    assert [rec["size"] for rec in lines] == [1, 1]
    assert lines[0]["members"] == ["1,2"]
    assert lines[1]["members"] == ["2,1"]


@pytest.mark.parametrize("n", range(2, 8))
def test_cells_methods_emit_identical_bytes(capsys, n):
    _, out_approx, _ = run(capsys, "cells", "--n", str(n), "--method", "approx")
    _, out_rs, _ = run(capsys, "cells", "--n", str(n), "--method", "rs")
    assert out_approx == out_rs


def test_cells_threads_do_not_change_bytes(capsys):
    _, single, _ = run(capsys, "cells", "--n", "4")
    _, threaded, _ = run(capsys, "cells", "--n", "4", "--threads", "4")
    assert single == threaded


def test_cells_emitted_tableaux_round_trip(capsys):
    _, out, _ = run(capsys, "cells", "--n", "4")
    for line in out.splitlines():
        rec = json.loads(line)
        t = tableau_from_json(rec["q_symbol"])
        assert tableau_to_json(t) == rec["q_symbol"]


def test_tableaux_std(capsys):
    code, out, _ = run(capsys, "tableaux", "--shape", "2,2/1")
    assert code == 0
    tabs = [tableau_from_json(json.loads(line)) for line in out.splitlines()]
    assert len(tabs) == 2
    assert len(set(tabs)) == 2


def test_tableaux_top_col(capsys):
    code, out, _ = run(capsys, "tableaux", "--shape", "2,1", "--top")
    assert tableau_from_json(json.loads(out)) == tau_top(parse_shape("2,1"))
    code, out, _ = run(capsys, "tableaux", "--shape", "2,1", "--col", "--m", "2")
    rec = json.loads(out)
    assert rec["m"] == 2
    assert [e[2] for e in rec["entries"]] == [3, 5, 4]


def test_sqsh(tmp_path, capsys):
    entries = tmp_path / "entries.json"
    entries.write_text(json.dumps([[2, 1, 1], [1, 2, 2]]))
    code, out, _ = run(capsys, "sqsh", "--shape", "2,1/1", "--entries", str(entries))
    assert code == 0
    rec = json.loads(out)
    assert rec["lambda"] == [2] and rec["mu"] == []
    assert rec["entries"] == [[1, 1, 1], [1, 2, 2]]


def test_sqsh_shape_mismatch(tmp_path, capsys):
    entries = tmp_path / "entries.json"
    entries.write_text(json.dumps([[1, 1, 1], [1, 2, 2]]))
    code, _, err = run(capsys, "sqsh", "--shape", "2,1/1", "--entries", str(entries))
    assert code == 2
    assert "shape" in err


def test_check_qualifying(capsys):
    code, out, _ = run(capsys, "check", "--n", "3", "--w", "1,3,2", "--j", "1")
    assert code == 0
    rec = json.loads(out)
    assert rec["qualifying"] is True
    assert rec["shape"] == "2,1"
    assert rec["interval_size"] == 2


def test_check_non_qualifying(capsys):
    code, out, _ = run(capsys, "check", "--w", "2,1,3", "--j", "1")
    assert code == 0
    rec = json.loads(out)
    assert rec["qualifying"] is False
    assert rec["nonempty"] is False
    assert rec["shape"] is None
    code, out, _ = run(capsys, "check", "--w", "3,2,1", "--j", "", "--output", "text")
    assert code == 0 and "not qualifying" in out


def test_check_rank_mismatch(capsys):
    code, _, err = run(capsys, "check", "--n", "4", "--w", "1,3,2", "--j", "1")
    assert code == 2 and "--n 4" in err


def test_malformed_tokens(capsys):
    code, _, err = run(capsys, "check", "--w", "1,3,9", "--j", "1")
    assert code == 2 and "1,3,9" in err
    code, _, err = run(capsys, "check", "--w", "1,3,2", "--j", "7")
    assert code == 2 and "7" in err
    code, _, err = run(capsys, "tableaux", "--shape", "2,x")
    assert code == 2 and "2,x" in err


def test_verify_rank3(capsys):
    code, out, _ = run(capsys, "verify", "--n", "3")
    assert code == 0
    lines = [json.loads(line) for line in out.splitlines()]
    summary = lines[-1]
    assert summary["type"] == "summary"
    assert summary["theorem_holds"] is True
    assert summary["mismatches"] == 0
    assert summary["qualifying_pairs"] == summary["basic_diagram_count"] == 9
    pair_lines = [rec for rec in lines if rec["type"] == "pair"]
    assert len(pair_lines) == 13


def test_verify_threads_identical(capsys):
    _, single, _ = run(capsys, "verify", "--n", "4")
    _, threaded, _ = run(capsys, "verify", "--n", "4", "--threads", "3")
    assert single == threaded


def test_verify_text_output(capsys):
    code, out, _ = run(capsys, "verify", "--n", "2", "--output", "text")
    assert code == 0
    assert "theorem holds" in out


def test_verify_figures(tmp_path, capsys):
    outdir = tmp_path / "figs"
    code, _, _ = run(capsys, "verify", "--n", "3", "--figures", str(outdir))
    assert code == 0
    sizes = outdir / "cell_sizes_n3.png"
    summary = outdir / "verify_summary_n3.png"
    assert sizes.is_file() and sizes.stat().st_size > 0
    assert summary.is_file() and summary.stat().st_size > 0


def test_counterexamples(capsys):
    code, out, _ = run(capsys, "counterexamples", "--n", "4")
    assert code == 0
    lines = [json.loads(line) for line in out.splitlines()]
    assert len(lines) == 2
    assert all(rec["cell_ideal_generating"] is False for rec in lines)
    assert all(rec["maximal"] is False for rec in lines)
    assert {rec["shape"] for rec in lines} == {"3,2/1"}


def test_a5(capsys):
    code, out, _ = run(capsys, "a5")
    assert code == 1  # the published list, as printed, is not an ideal
    rec = json.loads(out)
    assert rec["distinct_tableaux"] == 11
    assert rec["union_size"] == 83
    assert rec["is_weak_order_ideal"] is False
    assert rec["ideal_extensions"] == [[[1, 2, 4, 5], [3], [6]]]
    assert rec["wgraph_ideal_status"] == "not checked"


def test_dot(capsys):
    code, out, _ = run(capsys, "dot", "--n", "3", "--j", "1")
    assert code == 0
    assert out.startswith("digraph")
    assert '"2,1,3" -> "3,1,2";' in out
    assert 'fillcolor="#' in out
    assert out.rstrip().endswith("}")


def test_rank_cap_flag(capsys, monkeypatch):
    monkeypatch.delenv("CELLSCOPE_RANK_CAP", raising=False)
    code, _, err = run(capsys, "--rank-cap", "3", "cells", "--n", "4")
    assert code == 2 and "cap" in err
    monkeypatch.setenv("CELLSCOPE_RANK_CAP", "3")
    code, _, err = run(capsys, "verify", "--n", "4")
    assert code == 2 and "cap" in err
