"""Output formats and the command-line interface."""

import json
import subprocess
import sys

import pytest

from decodex.bench import parse_csv, render_csv, render_json, run_cell
from decodex.bench.cli import main
from decodex.bench.emit import CSV_HEADER, emit

EXPECTED_HEADER = (
    "backend,mcs,snr_db,prb,n_tb,bler,mean_iterations,p50_us,p99_us,mean_us,"
    "utilization,clock_type"
)


@pytest.fixture(scope="module")
def records():
    return [
        run_cell("lookaside", 4, 8.0, 10, 2, seed=3),
        run_cell("inline-unified", 4, 8.0, 10, 2, seed=3),
    ]


def test_csv_header_is_bit_exact(records):
    assert CSV_HEADER == EXPECTED_HEADER
    assert render_csv(records).split("\n")[0] == EXPECTED_HEADER


def test_single_record_makes_two_lines(records):
    text = render_csv(records[:1])
    assert len(text.strip().split("\n")) == 2


def test_csv_round_trip(records):
    rows = parse_csv(render_csv(records))
    for rec, row in zip(records, rows):
        assert row["backend"] == rec.backend
        assert row["mcs"] == rec.mcs
        assert row["bler"] == pytest.approx(rec.bler, abs=1e-9)
        assert row["mean_us"] == pytest.approx(rec.mean_us, rel=1e-5)
        if rec.utilization is None:
            assert row["utilization"] is None


def test_json_keys_match_csv_columns(records):
    rows = json.loads(render_json(records))
    assert list(rows[0].keys()) == EXPECTED_HEADER.split(",")


def test_emit_rejects_empty_and_bad_format(tmp_path, records):
    with pytest.raises(ValueError):
        emit([], "csv", tmp_path / "x.csv")
    with pytest.raises(ValueError):
        emit(records, "xml", tmp_path / "x.xml")


def test_emit_unwritable_path(records):
    with pytest.raises(OSError):
        emit(records, "csv", "/nonexistent-dir/out.csv")


def _write_config(path, body):
    path.write_text(body)
    return str(path)


def test_cli_sweep_csv(tmp_path):
    cfg = _write_config(
        tmp_path / "cfg.ini",
        "[sweep]\nbackends = lookaside\nmcs = 0\nsnr_db = 8\nprb = 5\nn_tb = 1\nseed = 4\n",
    )
    out = tmp_path / "out.csv"
    assert main(["sweep", "--config", cfg, "--out", str(out), "--format", "csv"]) == 0
    lines = out.read_text().strip().split("\n")
    assert lines[0] == EXPECTED_HEADER
    assert len(lines) == 2


def test_cli_sweep_exit_code_2_on_cell_failure(tmp_path):
    cfg = _write_config(
        tmp_path / "cfg.ini",
        "[sweep]\nbackends = cpu\nmcs = 0\nsnr_db = 8\nprb = 5\nn_tb = 1\nworkers = -5\n",
    )
    out = tmp_path / "out.csv"
    assert main(["sweep", "--config", cfg, "--out", str(out)]) == 2
    assert len(out.read_text().strip().split("\n")) == 2  # record still emitted


def test_cli_config_error_exit_code(tmp_path):
    cfg = _write_config(tmp_path / "cfg.ini", "[sweep]\nbackends = warp-drive\n")
    assert main(["sweep", "--config", cfg, "--out", str(tmp_path / "o.csv")]) == 1
    assert main(["sweep", "--config", str(tmp_path / "missing.ini"),
                 "--out", str(tmp_path / "o.csv")]) == 1


def test_cli_model_section(tmp_path):
    cfg = _write_config(
        tmp_path / "cfg.ini",
        "[sweep]\nbackends = lookaside\nmcs = 0\nsnr_db = 8\nprb = 5\nn_tb = 1\n"
        "[model.lookaside]\nop_service = 118\n",
    )
    out = tmp_path / "out.csv"
    assert main(["sweep", "--config", cfg, "--out", str(out)]) == 0
    row = parse_csv(out.read_text())[0]
    assert row["mean_us"] >= 118


def test_cli_bad_model_key(tmp_path):
    cfg = _write_config(
        tmp_path / "cfg.ini",
        "[sweep]\nbackends = lookaside\n[model.lookaside]\nwarp_factor = 9\n",
    )
    assert main(["sweep", "--config", cfg, "--out", str(tmp_path / "o.csv")]) == 1


def test_env_seed_override(tmp_path, monkeypatch):
    cfg = _write_config(
        tmp_path / "cfg.ini",
        "[sweep]\nbackends = lookaside\nmcs = 4\nsnr_db = 0\nprb = 10\nn_tb = 5\nseed = 1\n",
    )
    out_a, out_b, out_c = (tmp_path / n for n in ("a.csv", "b.csv", "c.csv"))
    main(["sweep", "--config", cfg, "--out", str(out_a)])
    monkeypatch.setenv("DECODEX_SEED", "999")
    main(["sweep", "--config", cfg, "--out", str(out_b)])
    main(["sweep", "--config", cfg, "--out", str(out_c)])
    assert parse_csv(out_b.read_text()) == parse_csv(out_c.read_text())
    assert parse_csv(out_a.read_text()) != parse_csv(out_b.read_text())


def test_cli_vectors_dump_format(tmp_path):
    out = tmp_path / "golden.txt"
    assert main(["vectors", "--dump", str(out), "--n-tb", "2", "--mcs", "4",
                 "--prb", "10", "--snr", "6", "--seed", "42"]) == 0
    lines = out.read_text().strip().split("\n")
    for ln in lines:
        bg, zc, e, snr_db, seed, payload_hex, llr_csv = ln.split(",", 6)
        assert int(bg) in (1, 2)
        assert int(zc) >= 2
        assert len(llr_csv.split(",")) == int(e)
        int(payload_hex, 16)
        assert float(snr_db) == 6.0


def test_cli_studies_to_stdout(capsys):
    assert main(["bulk-study", "--n-ops", "1,10"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("n_ops,sequential_tput,bulk_tput,ratio")
    assert main(["parallel-study", "--ue", "1,2", "--prb", "20"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("n_ue,sequential_kernel_us")


def test_console_script_installed():
    proc = subprocess.run(
        [sys.executable, "-m", "decodex.bench.cli", "--help"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert "sweep" in proc.stdout
