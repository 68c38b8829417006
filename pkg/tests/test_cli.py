"""Command line interface tests: grid parsing, exit codes, CSV plumbing."""

import math

import pytest

from optofdm.cli import main, parse_grid
from optofdm.harness import CSV_HEADER, GAUSSIAN_QUANTITIES


# ---------------------------------------------------------------------------
# Grid parsing


def test_parse_grid_range_inclusive():
    grid = parse_grid("-30:30:1")
    assert len(grid) == 61
    assert grid[0] == -30.0 and grid[-1] == 30.0


def test_parse_grid_fractional_step():
    grid = parse_grid("0:10:2.5")
    assert grid == [0.0, 2.5, 5.0, 7.5, 10.0]


def test_parse_grid_comma_list_and_single():
    assert parse_grid("1,2,3.5") == [1.0, 2.0, 3.5]
    assert parse_grid("4") == [4.0]


def test_parse_grid_rejects_bad_input():
    with pytest.raises(ValueError):
        parse_grid("0:10:0")
    with pytest.raises(ValueError):
        parse_grid("0:10")
    with pytest.raises(ValueError):
        parse_grid("a,b")


# ---------------------------------------------------------------------------
# rate / gain subcommands


def test_rate_writes_all_quantities(tmp_path):
    out = tmp_path / "rate.csv"
    rc = main(["rate", "--snr-o-db", "0,5", "--output", str(out)])
    assert rc == 0
    lines = out.read_text().splitlines()
    assert lines[0] == ",".join(CSV_HEADER)
    assert len(lines) == 1 + 2 * len(GAUSSIAN_QUANTITIES)


def test_rate_quantity_subset_to_stdout(capsys):
    rc = main(["rate", "--snr-o-db", "0", "--quantities", "rate_conventional"])
    assert rc == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 2
    cols = lines[1].split(",")
    assert cols[2] == "rate_conventional"
    assert float(cols[4]) == pytest.approx(0.5125464160606917, abs=1e-12)


def test_rate_electrical_grid_converts(capsys):
    snr_e = 10.0 * math.log10(math.pi)  # corresponds to 0 dB optical
    rc = main(["rate", "--snr-e-db", repr(snr_e),
               "--quantities", "rate_conventional"])
    assert rc == 0
    cols = capsys.readouterr().out.splitlines()[1].split(",")
    assert float(cols[0]) == pytest.approx(0.0, abs=1e-12)


def test_rate_negative_range_parses(capsys):
    rc = main(["rate", "--snr-o-db", "-2:2:2",
               "--quantities", "rate_conventional"])
    assert rc == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 4
    assert lines[1].split(",")[0] == "-2.0"


def test_rate_unknown_quantity_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["rate", "--snr-o-db", "0", "--quantities", "bogus"])
    assert exc.value.code == 2


def test_gain_emits_both_scales(capsys):
    rc = main(["gain", "--snr-o-db", "0"])
    assert rc == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 3
    rows = {l.split(",")[2]: float(l.split(",")[4]) for l in lines[1:]}
    assert rows["electrical_gain_db"] == pytest.approx(
        2.0 * rows["optical_gain_db"], abs=1e-12
    )


def test_discrete_input_rate(capsys):
    rc = main(["rate", "--snr-o-db", "0", "--input", "qam16",
               "--quantities", "rate_discrete_conventional"])
    assert rc == 0
    cols = capsys.readouterr().out.splitlines()[1].split(",")
    assert float(cols[4]) == pytest.approx(0.4916807553984288, abs=1e-9)


# ---------------------------------------------------------------------------
# ber subcommand


def test_ber_sweep_to_file(tmp_path):
    out = tmp_path / "ber.csv"
    rc = main(["ber", "--snr-o-db", "0", "--receivers", "conventional,genie",
               "--target-errors", "100", "--max-frames", "400",
               "--batch-frames", "100", "--seed", "7",
               "--output", str(out)])
    assert rc == 0
    lines = out.read_text().splitlines()
    assert len(lines) == 3
    receivers = {l.split(",")[3] for l in lines[1:]}
    assert receivers == {"conventional", "genie"}


def test_ber_receiver_singular_alias(tmp_path):
    out = tmp_path / "ber.csv"
    rc = main(["ber", "--snr-o-db", "0", "--receiver", "genie",
               "--target-errors", "100", "--max-frames", "200",
               "--batch-frames", "100", "--output", str(out)])
    assert rc == 0
    assert out.read_text().splitlines()[1].split(",")[3] == "genie"


def test_ber_no_data_exit_code(capsys):
    rc = main(["ber", "--snr-o-db", "0", "--max-frames", "0"])
    assert rc == 3
    lines = capsys.readouterr().out.splitlines()
    assert lines == [",".join(CSV_HEADER)]


def test_ber_unknown_receiver_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["ber", "--snr-o-db", "0", "--receivers", "psychic"])
    assert exc.value.code == 2


def test_ber_flip_runs(tmp_path):
    out = tmp_path / "ber.csv"
    rc = main(["ber", "--snr-o-db", "2", "--scheme", "flip",
               "--target-errors", "100", "--max-frames", "400",
               "--batch-frames", "100", "--output", str(out)])
    assert rc == 0
    assert len(out.read_text().splitlines()) == 2


# ---------------------------------------------------------------------------
# parser-level usage errors


def test_missing_grid_flag_exits_2():
    with pytest.raises(SystemExit) as exc:
        main(["ber"])
    assert exc.value.code == 2


def test_both_grid_flags_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["rate", "--snr-o-db", "0", "--snr-e-db", "5"])
    assert exc.value.code == 2


def test_unknown_subcommand_exits_2():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


# ---------------------------------------------------------------------------
# selftest subcommand


def test_selftest_passes(capsys):
    rc = main(["selftest"])
    assert rc == 0
    out = capsys.readouterr().out
    assert "7/7 checks passed" in out
    assert "FAIL" not in out
