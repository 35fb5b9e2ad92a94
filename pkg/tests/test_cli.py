"""Command-line client: flags, exit codes, written files, summaries."""

import json
import os

import numpy as np
import pytest

from landau.cli import DOMAIN_EXIT, USAGE_EXIT, main


def read(path):
    with open(path, "rb") as fh:
        return fh.read()


class TestTable:
    def test_writes_catalog(self, tmp_path, capsys):
        assert main(["table", "--max-n", "2", "--out-dir", str(tmp_path)]) == 0
        out = capsys.readouterr().out
        names = os.listdir(tmp_path)
        assert sorted(names) == ["table.csv", "table.txt", "table_manifest.json"]
        assert out.count("wrote ") == 3
        # the plain-text catalog is echoed to stdout as well
        assert "closed-form transverse eigenfunctions" in out
        rows = read(tmp_path / "table.csv").decode().strip().split("\n")
        assert any(row.startswith("2,0,") and row.endswith("-1;0;1") for row in rows)

    def test_max_n_out_of_range_is_usage_error(self, tmp_path, capsys):
        code = main(["table", "--max-n", "9", "--out-dir", str(tmp_path)])
        assert code == USAGE_EXIT
        assert "max_n" in capsys.readouterr().err


class TestDensity:
    def test_profile_and_summary(self, tmp_path, capsys):
        code = main(["density", "0", "0", "--points", "256", "--out-dir", str(tmp_path)])
        assert code == 0
        out = capsys.readouterr().out
        assert "trapezoid integral = " in out
        assert "interior zeros = 0" in out
        csv = read(tmp_path / "density_n0_ml0.csv").decode()
        assert csv.startswith("rho,density\n")

    def test_parity_violation_exits_domain(self, tmp_path, capsys):
        code = main(["density", "3", "0", "--out-dir", str(tmp_path)])
        assert code == DOMAIN_EXIT
        err = capsys.readouterr().err
        assert "m_l must lie in {n, n-2, ..., -n}" in err
        assert os.listdir(tmp_path) == []

    def test_too_few_points_is_usage_error(self, tmp_path, capsys):
        code = main(["density", "0", "0", "--points", "4", "--out-dir", str(tmp_path)])
        assert code == USAGE_EXIT
        assert "points" in capsys.readouterr().err

    def test_ascii_chart_echoed(self, tmp_path, capsys):
        code = main(
            ["density", "2", "0", "--format", "ascii", "--out-dir", str(tmp_path)]
        )
        assert code == 0
        assert "*" in capsys.readouterr().out
        assert (tmp_path / "density_n2_ml0.txt").exists()

    def test_svg_written(self, tmp_path, capsys):
        code = main(["density", "1", "1", "--format", "svg", "--out-dir", str(tmp_path)])
        assert code == 0
        assert read(tmp_path / "density_n1_ml1.svg").startswith(b"<svg")

    def test_two_d_files(self, tmp_path, capsys):
        code = main(
            [
                "density", "2", "2", "--two-d", "--two-d-points", "24",
                "--points", "64", "--out-dir", str(tmp_path),
            ]
        )
        assert code == 0
        assert (tmp_path / "density_n2_ml2_2d.csv").exists()
        assert (tmp_path / "density_n2_ml2_2d.svg").exists()

    def test_repeated_runs_are_byte_identical(self, tmp_path, capsys):
        dirs = [tmp_path / f"run{i}" for i in range(3)]
        for d in dirs:
            assert main(["density", "4", "0", "--out-dir", str(d)]) == 0
        blobs = [read(d / "density_n4_ml0.csv") for d in dirs]
        assert blobs[0] == blobs[1] == blobs[2]

    def test_worker_flag_does_not_change_bytes(self, tmp_path, capsys):
        a, b = tmp_path / "a", tmp_path / "b"
        assert main(["density", "5", "1", "--workers", "1", "--out-dir", str(a)]) == 0
        assert main(["density", "5", "1", "--workers", "6", "--out-dir", str(b)]) == 0
        for name in ("density_n5_ml1.csv", "density_manifest.json"):
            assert read(a / name) == read(b / name)


class TestSpectrum:
    def test_degeneracy_table(self, tmp_path, capsys):
        code = main(
            ["spectrum", "--n-max", "4", "--spin", "up", "--out-dir", str(tmp_path)]
        )
        assert code == 0
        deg = read(tmp_path / "degeneracy.csv").decode().strip().split("\n")
        assert deg[0] == "r,count"
        counts = {int(row.split(",")[0]): int(row.split(",")[1]) for row in deg[1:]}
        assert counts[0] == 0  # no spin-up state reaches the lowest level
        assert counts[1] == 5

    def test_r_max_filter(self, tmp_path, capsys):
        code = main(
            ["spectrum", "--n-max", "6", "--r-max", "1", "--out-dir", str(tmp_path)]
        )
        assert code == 0
        rows = read(tmp_path / "spectrum.csv").decode().strip().split("\n")[1:]
        assert all(int(r.split(",")[3]) <= 1 for r in rows)


class TestDiracCompare:
    def test_kappa_run(self, tmp_path, capsys):
        code = main(
            [
                "dirac-compare", "0", "0", "--kappa", "0.25",
                "--points", "128", "--out-dir", str(tmp_path),
            ]
        )
        assert code == 0
        out = capsys.readouterr().out
        assert "sup |D_s - D_d| = " in out
        assert "mean radius" in out
        manifest = json.loads(read(tmp_path / "dirac-compare_manifest.json"))
        assert manifest["dimensionless"]["kappa"] == 0.25
        assert manifest["notes"]["energy_dirac_m0c2"] == pytest.approx(np.sqrt(2.0), abs=0)

    def test_field_flags_are_exclusive(self, tmp_path, capsys):
        with pytest.raises(SystemExit) as exc:
            main(
                [
                    "dirac-compare", "0", "0", "--kappa", "0.1",
                    "--B-tesla", "1.0", "--out-dir", str(tmp_path),
                ]
            )
        assert exc.value.code == USAGE_EXIT

    def test_field_flag_required(self, tmp_path, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["dirac-compare", "0", "0", "--out-dir", str(tmp_path)])
        assert exc.value.code == USAGE_EXIT

    def test_nonpositive_kappa_is_domain_error(self, tmp_path, capsys):
        code = main(
            ["dirac-compare", "0", "0", "--kappa", "-0.5", "--out-dir", str(tmp_path)]
        )
        assert code == DOMAIN_EXIT
        assert "kappa must be > 0" in capsys.readouterr().err

    def test_tesla_route(self, tmp_path, capsys):
        code = main(
            [
                "dirac-compare", "1", "-1", "--B-tesla", "2.5",
                "--points", "64", "--out-dir", str(tmp_path),
            ]
        )
        assert code == 0
        manifest = json.loads(read(tmp_path / "dirac-compare_manifest.json"))
        assert manifest["parameters"]["B_tesla"] == 2.5
        assert manifest["dimensionless"]["kappa"] > 0


class TestSweep:
    def test_two_frames(self, tmp_path, capsys):
        code = main(
            [
                "sweep", "0", "0", "--kappa-min", "1e-6", "--kappa-max", "0.25",
                "--steps", "2", "--points", "64", "--out-dir", str(tmp_path),
            ]
        )
        assert code == 0
        assert (tmp_path / "sweep_000.csv").exists()
        assert (tmp_path / "sweep_001.csv").exists()
        out = capsys.readouterr().out
        assert out.count("kappa=") == 2
        manifest = json.loads(read(tmp_path / "sweep_manifest.json"))
        sups = [f["sup_difference"] for f in manifest["notes"]["frames"]]
        assert sups[0] < sups[1]

    def test_inverted_range_is_domain_error(self, tmp_path, capsys):
        code = main(
            [
                "sweep", "0", "0", "--kappa-min", "0.5", "--kappa-max", "0.1",
                "--out-dir", str(tmp_path),
            ]
        )
        assert code == DOMAIN_EXIT


class TestParsing:
    def test_version_flag(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["--version"])
        assert exc.value.code == 0
        assert capsys.readouterr().out.startswith("landau ")

    def test_unknown_command(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["orbitals"])
        assert exc.value.code == USAGE_EXIT

    def test_unknown_flag(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["table", "--wavelength", "3"])
        assert exc.value.code == USAGE_EXIT

    def test_non_integer_positional(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["density", "zero", "0"])
        assert exc.value.code == USAGE_EXIT

    def test_unreachable_server(self, tmp_path, capsys):
        code = main(
            [
                "--server", "http://127.0.0.1:1",
                "table", "--out-dir", str(tmp_path),
            ]
        )
        assert code == USAGE_EXIT
        assert "cannot reach service" in capsys.readouterr().err

    def test_out_dir_created_if_missing(self, tmp_path, capsys):
        nested = tmp_path / "a" / "b"
        assert main(["table", "--max-n", "0", "--out-dir", str(nested)]) == 0
        assert (nested / "table.csv").exists()
