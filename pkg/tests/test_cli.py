import csv
import io
import math
import subprocess
import sys

import numpy as np
import pytest

from halfwalk import phased_spec, hadamard_spec, make_coin, WalkSpec, hadamard
from halfwalk.cli import main
from halfwalk.config import (
    EXAMPLES,
    NUMERIC_KEYS,
    RunConfig,
    format_config,
    parse_config,
    read_config,
    write_config,
)
from halfwalk.errors import ConfigError

S = math.sqrt(2) / 2


def write_cfg(tmp_path, spec, name="walk.cfg", label="t"):
    path = tmp_path / name
    write_config(path, RunConfig.from_spec(spec, label=label))
    return path


def read_csv(text):
    lines = [ln for ln in text.splitlines() if not ln.startswith("#")]
    meta = dict(
        ln[1:].strip().split("=", 1) for ln in text.splitlines() if ln.startswith("#")
    )
    return list(csv.DictReader(io.StringIO("\n".join(lines)))), meta


# -- config -------------------------------------------------------------------


@pytest.mark.parametrize("name", sorted(EXAMPLES))
def test_init_example_round_trip(tmp_path, name, capsys):
    out = tmp_path / f"{name}.cfg"
    assert main(["init-example", name, "--out", str(out)]) == 0
    spec = read_config(out).to_spec()
    original = EXAMPLES[name]()
    assert spec.boundary_coin.entries == original.boundary_coin.entries
    assert spec.bulk_coin.entries == original.bulk_coin.entries
    assert (spec.alpha, spec.beta) == (original.alpha, original.beta)


def test_init_example_all(tmp_path, capsys):
    assert main(["init-example", "all", "--out", str(tmp_path / "cfgs")]) == 0
    assert sorted(p.name for p in (tmp_path / "cfgs").iterdir()) == [
        "hadamard.cfg",
        "mixed.cfg",
        "phased.cfg",
    ]


def test_format_lists_every_key():
    text = format_config(RunConfig.from_spec(phased_spec(), label="x"))
    keys = [ln.split("=")[0].strip() for ln in text.splitlines()]
    assert keys == ["label"] + NUMERIC_KEYS


def test_parse_comments_and_metadata():
    text = "# a comment\n\nmeta.source = notes\n" + format_config(
        RunConfig.from_spec(hadamard_spec())
    )
    cfg = parse_config(text)
    assert cfg.metadata == {"source": "notes"}


@pytest.mark.parametrize(
    "mutate, fragment",
    [
        (lambda t: t.replace("bulk_coin.c.im = 0.0\n", ""), "bulk_coin.c.im"),
        (lambda t: t.replace("initial.beta.re = 0.0", "initial.beta.re = zero"), "initial.beta.re"),
        (lambda t: t + "bulk_coin.a.re = 1.0\n", "duplicate key 'bulk_coin.a.re'"),
        (lambda t: t + "bogus = 1\n", "unknown key 'bogus'"),
        (lambda t: t + "no equals sign\n", "expected 'key = value'"),
        (lambda t: t.replace("bulk_coin.d.re = -0.7071067811865476", "bulk_coin.d.re = 0.7"), "bulk_coin"),
        (lambda t: t.replace("initial.alpha.re = 1.0", "initial.alpha.re = 2.0"), "initial"),
    ],
)
def test_parse_errors(mutate, fragment):
    text = mutate(format_config(RunConfig.from_spec(hadamard_spec())))
    with pytest.raises(ConfigError, match=fragment.replace("(", r"\(")):
        parse_config(text)


def test_parse_error_reports_line():
    text = format_config(RunConfig.from_spec(hadamard_spec())) + "bogus = 1\n"
    n = len(text.splitlines())
    with pytest.raises(ConfigError, match=f"cfg:{n}:"):
        parse_config(text, "cfg")


# -- commands -----------------------------------------------------------------


def test_simulate_phased(tmp_path, capsys):
    cfg = write_cfg(tmp_path, phased_spec())
    out = tmp_path / "sim.csv"
    assert main(["simulate", str(cfg), "--steps", "400", "--out", str(out)]) == 0
    text = out.read_text()
    rows, meta = read_csv(text)
    assert text.splitlines()[2] == "x,p,psi_down_re,psi_down_im,psi_up_re,psi_up_im"
    assert meta["t"] == "400"
    assert len(rows) == 401
    assert float(rows[0]["p"]) == pytest.approx(0.0492, abs=5e-5)
    p = np.array([float(r["p"]) for r in rows])
    assert p.sum() == pytest.approx(1, abs=1e-12)
    amp = complex(float(rows[3]["psi_up_re"]), float(rows[3]["psi_up_im"]))
    down = complex(float(rows[3]["psi_down_re"]), float(rows[3]["psi_down_im"]))
    assert abs(amp) ** 2 + abs(down) ** 2 == pytest.approx(p[3], rel=1e-14)


def test_simulate_zero_steps(tmp_path, capsys):
    cfg = write_cfg(tmp_path, hadamard_spec())
    assert main(["simulate", str(cfg), "--steps", "0"]) == 0
    rows, _ = read_csv(capsys.readouterr().out)
    assert len(rows) == 1
    assert float(rows[0]["p"]) == 1


def test_simulate_is_deterministic(tmp_path, capsys):
    cfg = write_cfg(tmp_path, phased_spec())
    main(["simulate", str(cfg), "--steps", "30"])
    first = capsys.readouterr().out
    main(["simulate", str(cfg), "--steps", "30"])
    assert capsys.readouterr().out == first


def test_malformed_config_exit_2(tmp_path, capsys):
    path = tmp_path / "bad.cfg"
    path.write_text("bulk_coin.a.re = 1\n")
    assert main(["simulate", str(path)]) == 2
    assert "missing key" in capsys.readouterr().err
    assert main(["rho", str(tmp_path / "absent.cfg")]) == 2


def test_density_hadamard(tmp_path, capsys):
    cfg = write_cfg(tmp_path, hadamard_spec())
    assert main(["density", str(cfg), "--grid", "25"]) == 0
    rows, meta = read_csv(capsys.readouterr().out)
    assert len(rows) == 25
    assert abs(float(meta["rho"])) < 1e-8
    y = np.array([float(r["y"]) for r in rows])
    f = np.array([float(r["f_ac"]) for r in rows])
    assert y.min() > 0 and y.max() < S
    np.testing.assert_allclose(f, 2 / (np.pi * (1 - y * y) * np.sqrt(1 - 2 * y * y)), rtol=1e-12)


def test_density_mixed_rho(tmp_path, capsys):
    cfg = write_cfg(tmp_path, EXAMPLES["mixed"]())
    assert main(["density", str(cfg), "--grid", "5"]) == 0
    _, meta = read_csv(capsys.readouterr().out)
    assert float(meta["rho"]) == pytest.approx(0.677887, abs=1e-5)


def test_density_identity_exit_3(tmp_path, capsys):
    ident = make_coin(1, 0, 0, 1)
    cfg = write_cfg(tmp_path, WalkSpec(ident, ident, 1, 0))
    assert main(["density", str(cfg)]) == 3


def test_density_unequal_det_exit_4(tmp_path, capsys):
    cfg = write_cfg(tmp_path, WalkSpec(make_coin(S, S, -S, S), hadamard(), 1, 0))
    assert main(["density", str(cfg)]) == 4
    assert main(["cdf-compare", str(cfg), "--steps", "10"]) == 4


def _rho_out(capsys):
    out = capsys.readouterr().out.split()
    return float(out[0].split("=")[1]), out[1]


def test_rho_command(tmp_path, capsys):
    phased = write_cfg(tmp_path, phased_spec(), "phased.cfg")
    had = write_cfg(tmp_path, hadamard_spec(), "had.cfg")
    assert main(["rho", str(phased)]) == 0
    value, method = _rho_out(capsys)
    assert value == pytest.approx(0.067167, abs=1e-6) and method == "method=quadrature"
    assert main(["rho", str(phased), "--method", "simulate", "--steps", "400"]) == 0
    value, method = _rho_out(capsys)
    assert value == pytest.approx(0.0671, abs=5e-4) and method == "method=simulate"
    assert main(["rho", str(had)]) == 0
    assert abs(_rho_out(capsys)[0]) < 1e-8


def test_rho_simulate_accepts_degenerate(tmp_path, capsys):
    ident = make_coin(1, 0, 0, 1)
    cfg = write_cfg(tmp_path, WalkSpec(ident, ident, 1, 0))
    assert main(["rho", str(cfg), "--method", "simulate", "--steps", "20", "--x-cut", "3"]) == 0
    assert _rho_out(capsys)[0] == 0


@pytest.mark.parametrize("name", ["hadamard", "mixed"])
def test_check_genfun(tmp_path, capsys, name):
    cfg = write_cfg(tmp_path, EXAMPLES[name]())
    assert main(["check-genfun", str(cfg), "--xmax", "10", "--tmax", "50"]) == 0
    worst = float(capsys.readouterr().out.split()[0].split("=")[1])
    assert worst < 1e-10


def test_check_genfun_identity_exit_3(tmp_path, capsys):
    ident = make_coin(1, 0, 0, 1)
    cfg = write_cfg(tmp_path, WalkSpec(ident, ident, 1, 0))
    assert main(["check-genfun", str(cfg)]) == 3


@pytest.mark.parametrize("name", ["hadamard", "phased"])
def test_cdf_compare(tmp_path, capsys, name):
    cfg = write_cfg(tmp_path, EXAMPLES[name]())
    assert main(["cdf-compare", str(cfg), "--steps", "2000"]) == 0
    dist = float(capsys.readouterr().out.split()[0].split("=")[1])
    assert dist <= 0.05


def test_cdf_compare_zero_steps(tmp_path, capsys):
    cfg = write_cfg(tmp_path, phased_spec())
    assert main(["cdf-compare", str(cfg), "--steps", "0"]) == 0
    dist = float(capsys.readouterr().out.split()[0].split("=")[1])
    # X_0 = 0, so the empirical CDF is 1 and the gap at y = 0 is 1 - rho
    assert dist == pytest.approx(1 - 0.0671669, abs=1e-6)


def test_console_entry_point(tmp_path):
    cfg = write_cfg(tmp_path, hadamard_spec())
    res = subprocess.run(
        [sys.executable, "-m", "halfwalk.cli", "rho", str(cfg)],
        capture_output=True,
        text=True,
        check=True,
    )
    assert res.stdout.startswith("rho=")
