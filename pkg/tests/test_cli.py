import json
import os

import pytest

from hadring.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_lambda_examples(capsys):
    assert run(capsys, "lambda", "-n", "2", "-i", "1", "-j", "1", "-k", "0")[:2] == (0, "2\n")
    assert run(capsys, "lambda", "-n", "8", "--weights", "8", "3", "3")[:2] == (0, "1\n")
    assert run(capsys, "lambda", "-n", "4", "-i", "1", "-j", "2", "-k", "0")[:2] == (0, "0\n")


def test_lambda_flag_conventions(capsys):
    code, _, err = run(capsys, "lambda", "-n", "4", "-i", "1")
    assert code == 2 and "error" in err
    code, _, err = run(capsys, "lambda", "-n", "4", "-i", "1", "-j", "1", "-k", "0",
                       "--weights", "1", "1", "0")
    assert code == 2


def test_product_examples(capsys):
    assert run(capsys, "product", "-n", "4", "-a", "1", "-b", "1")[:2] == (0, "[2,4]\n")
    assert run(capsys, "product", "-n", "6", "-a", "6", "-b", "2")[:2] == (0, "[2]\n")
    assert run(capsys, "product", "-n", "4", "-a", "2", "-b", "2")[:2] == (0, "[0,2,4]\n")


def test_product_bad_weight_exits_2(capsys):
    code, _, err = run(capsys, "product", "-n", "4", "-a", "5", "-b", "1")
    assert code == 2 and "error" in err


def test_autocorr_examples(capsys):
    assert run(capsys, "autocorr", "-+++")[:2] == (0, "4 0 0 0 | sum=4 (2a−n)²=4\n")
    assert run(capsys, "autocorr", "++++")[:2] == (0, "4 4 4 4 | sum=16 (2a−n)²=16\n")
    assert run(capsys, "autocorr", "+-+-")[:2] == (0, "4 -4 4 -4 | sum=0 (2a−n)²=0\n")


def test_autocorr_hex_form(capsys):
    code, out, _ = run(capsys, "autocorr", "--hex", "n=4:e")
    assert code == 0 and out.startswith("4 0 0 0 |")
    code, _, err = run(capsys, "autocorr", "n=4:e")
    assert code == 2  # hex form without the flag is rejected
    code, _, err = run(capsys, "autocorr", "--hex", "+-+-")
    assert code == 2


def test_autocorr_json_round_trips(capsys):
    code, out, _ = run(capsys, "autocorr", "-+++", "--format", "json")
    assert code == 0
    parsed = json.loads(out)
    assert json.dumps(parsed, sort_keys=True, separators=(",", ":")) + "\n" == out
    assert parsed["autocorrelation"] == [4, 0, 0, 0]
    assert parsed["sum"] == parsed["square"] == 4


def test_autocorr_plot_dir(capsys, tmp_path):
    code, _, err = run(capsys, "autocorr", "-+++", "--plot-dir", str(tmp_path))
    assert code == 0
    assert "figure:" in err
    assert list(tmp_path.glob("autocorr-n4-*.png"))


def test_count_examples(capsys):
    assert run(capsys, "count", "-m", "1")[:2] == (0, "reduced=8 unreduced=8\n")
    code, out, _ = run(capsys, "count", "-m", "3")
    assert code == 0
    assert out == "reduced=11130337920 unreduced=11135805120\n"
    code, out, _ = run(capsys, "count", "-m", "5", "--format", "json")
    parsed = json.loads(out)
    assert parsed["reduced"] < parsed["unreduced"]


def test_search_m1_records_and_summary(capsys):
    code, out, err = run(capsys, "search", "-m", "1")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 3
    first = json.loads(lines[0])
    assert first["sequence"] == "+++-"
    assert first["autocorrelation"] == [4, 0, 0, 0]
    assert json.loads(lines[1])["sequence"] == "+---"
    assert lines[2] == "8 sequences / 2 orbits, weights {1,3}"
    assert "scanned" in err  # timing stays on stderr


def test_search_json_summary_round_trips(capsys):
    code, out, _ = run(capsys, "search", "-m", "1", "--format", "json")
    assert code == 0
    for line in out.splitlines():
        parsed = json.loads(line)
        assert json.dumps(parsed, sort_keys=True, separators=(",", ":")) == line
    summary = json.loads(out.splitlines()[-1])
    assert summary["sequences"] == 8
    assert summary["orbits"] == 2
    assert summary["weights"] == [1, 3]


def test_search_chunk_union_equals_full(capsys):
    _, full, _ = run(capsys, "search", "-m", "1")
    full_records = set(full.splitlines()[:-1])
    union = set()
    for i in range(2):
        _, out, _ = run(capsys, "search", "-m", "1", "--chunk", f"{i}/2")
        union |= {line.replace('"chunk":[%d,2]' % i, '"chunk":[0,1]') for line in out.splitlines()[:-1]}
    assert union == full_records


def test_search_even_m_exits_2(capsys):
    code, _, err = run(capsys, "search", "-m", "2")
    assert code == 2 and "error" in err


def test_search_no_turyn_allows_even_m(capsys):
    code, out, _ = run(capsys, "search", "-m", "2", "--no-turyn")
    assert code == 0
    assert out.splitlines()[-1] == "0 sequences / 0 orbits, weights {}"


def test_search_bad_chunk_exits_2(capsys):
    assert run(capsys, "search", "-m", "1", "--chunk", "nope")[0] == 2
    assert run(capsys, "search", "-m", "1", "--chunk", "3/2")[0] == 2


def test_search_jobs_resume_conflict(capsys, tmp_path):
    code, _, err = run(capsys, "search", "-m", "1", "--jobs", "2",
                       "--resume", str(tmp_path / "ck"))
    assert code == 2 and "chunks" in err


def test_search_resume_writes_checkpoint(capsys, tmp_path):
    ck = tmp_path / "ck"
    code, out, _ = run(capsys, "search", "-m", "1", "--resume", str(ck))
    assert code == 0
    assert ck.read_text() == "6\n"
    code, out, _ = run(capsys, "search", "-m", "1", "--resume", str(ck))
    assert code == 0
    assert out.splitlines()[-1] == "0 sequences / 0 orbits, weights {}"


def test_search_plot_dir(capsys, tmp_path):
    code, _, err = run(capsys, "search", "-m", "1", "--plot-dir", str(tmp_path))
    assert code == 0
    assert (tmp_path / "search-m1-chunk0of1.png").exists()
    assert len(list(tmp_path.glob("autocorr-n4-*.png"))) == 2


def test_verify_suites_pass(capsys):
    assert run(capsys, "verify", "eq1", "--max-n", "4")[:2] == (0, "PASS\n")
    assert run(capsys, "verify", "eq2", "--max-n", "4")[:2] == (0, "PASS\n")
    assert run(capsys, "verify", "lemma1", "--max-n", "6")[:2] == (0, "PASS\n")
    assert run(capsys, "verify", "maximal", "--max-n", "8")[:2] == (0, "PASS\n")
    assert run(capsys, "verify", "diffset")[:2] == (0, "PASS\n")
    assert run(capsys, "verify", "thm3", "--max-n", "6")[:2] == (0, "PASS\n")


def test_verify_thm2_exhaustive_small(capsys):
    code, out, _ = run(capsys, "verify", "thm2", "-n", "4")
    assert code == 0
    assert out == "exhaustive over 8 even-weight sequences at n=4\nPASS\n"


def test_verify_thm2_sampled(capsys):
    code, out, _ = run(capsys, "verify", "thm2", "-n", "36", "--samples", "500")
    assert code == 0
    assert out.endswith("PASS\n")


def test_verify_hadamard_sweep(capsys):
    code, out, _ = run(capsys, "verify", "hadamard-sweep", "-n", "4")
    assert code == 0
    assert out == "8 sequences / 2 orbits, weights {1,3}\n"
    code, out, _ = run(capsys, "verify", "hadamard-sweep", "-n", "8")
    assert out == "0 sequences / 0 orbits, weights {}\n"


def test_verify_unknown_suite_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "nonsense"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_env_var_sets_default_jobs(capsys, monkeypatch):
    monkeypatch.setenv("HADRING_JOBS", "2")
    code, out, _ = run(capsys, "search", "-m", "1")
    assert code == 0
    assert out.splitlines()[-1] == "8 sequences / 2 orbits, weights {1,3}"
