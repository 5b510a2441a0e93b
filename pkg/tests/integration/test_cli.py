"""
CLI tests: exit codes, output formats and suite runs through ``main``.
"""

import json

import pytest

from splitbasis.cli.main import EXIT_FAILED, EXIT_OK, EXIT_USAGE, build_parser, main

# =============================================================================
# Single commands
# =============================================================================


class TestCommands:
    def test_basis_passes(self, capsys):
        assert main(["basis", "--family", "A", "--n", "3", "--no-timing"]) == EXIT_OK
        assert capsys.readouterr().out.startswith("basis A-3: PASS")

    def test_basis_json(self, capsys):
        code = main(["basis", "--family", "B", "--n", "2", "--format", "json", "--no-timing"])
        assert code == EXIT_OK
        data = json.loads(capsys.readouterr().out)
        assert data["kind"] == "certificate"
        assert data["millis"] == 0.0
        assert all(check["pass"] for check in data["checks"])

    def test_fault_exits_failed(self, capsys):
        code = main(["basis", "--family", "A", "--n", "3", "--fault", "sign_flip"])
        assert code == EXIT_FAILED
        assert "[FAIL] cycles_closed" in capsys.readouterr().out

    def test_lattice_with_T(self, capsys):
        assert main(["lattice", "--family", "DB", "--n", "3", "--T", "1,3"]) == EXIT_OK
        assert "lattice lattice-DB-3-T{1,3}: PASS" in capsys.readouterr().out

    def test_regions_with_vector(self, capsys):
        code = main(["regions", "--family", "D", "--n", "3", "--vector", "1,2,4"])
        assert code == EXIT_OK
        assert "6 bounded of 24" in capsys.readouterr().out

    def test_orbits(self, capsys):
        assert main(["orbits", "--n", "4", "--T", "1,2", "--format", "json"]) == EXIT_OK
        data = json.loads(capsys.readouterr().out)
        assert data["sizes"] == [2, 2]

    def test_out_file(self, tmp_path, capsys):
        out = tmp_path / "a3.json"
        code = main(["basis", "--n", "3", "--format", "json", "--out", str(out)])
        assert code == EXIT_OK
        assert json.loads(out.read_text())["instance"] == "A-3"
        assert "[OK] A-3 ->" in capsys.readouterr().out

    def test_deterministic_output(self, capsys):
        args = ["lattice", "--n", "4", "--format", "json", "--no-timing"]
        main(args)
        first = capsys.readouterr().out
        main(args)
        assert capsys.readouterr().out == first


# =============================================================================
# Usage errors
# =============================================================================


class TestUsageErrors:
    def test_no_command(self, capsys):
        assert main([]) == EXIT_USAGE

    @pytest.mark.parametrize(
        "argv",
        [
            ["basis", "--family", "A", "--n", "2"],
            ["basis", "--family", "B", "--n", "9"],
            ["basis", "--family", "AT", "--n", "4"],
            ["regions", "--family", "AT", "--n", "4", "--T", "1"],
            ["regions", "--family", "B", "--n", "3", "--vector", "1,2"],
            ["regions", "--family", "B", "--n", "3", "--vector", "1,1,0"],
            ["basis", "--family", "B", "--n", "3", "--vector", "0,0,0"],
            ["basis", "--family", "A", "--n", "4", "--indices", "ltr"],
        ],
    )
    def test_invalid_instance(self, argv, capsys):
        assert main(argv) == EXIT_USAGE
        assert "Error:" in capsys.readouterr().err

    def test_argparse_rejects_unknown_family(self):
        with pytest.raises(SystemExit) as excinfo:
            main(["basis", "--family", "E", "--n", "6"])
        assert excinfo.value.code == 2

    def test_missing_suite_file(self, tmp_path, capsys):
        assert main(["suite", "--suite", str(tmp_path / "nope.yaml")]) == EXIT_USAGE
        assert "Suite file not found" in capsys.readouterr().err

    def test_parser_has_every_command(self):
        parser = build_parser()
        for command in ("lattice", "basis", "regions", "orbits", "suite"):
            assert parser.parse_args([command] + ([] if command == "suite" else ["--n", "3"]))


# =============================================================================
# Suites
# =============================================================================


class TestSuite:
    def test_suite_passes(self, write_suite, capsys, monkeypatch):
        monkeypatch.setattr("splitbasis.config.WORKBENCH_THREADS", 1)
        path = write_suite(
            {
                "name": "cli",
                "rows": [
                    {"id": "a3", "command": "basis", "family": "A", "n": 3},
                    {
                        "id": "b2-all",
                        "command": "basis",
                        "family": "B",
                        "n": 2,
                        "indices": "all",
                        "expect": "fail",
                    },
                ],
            }
        )
        assert main(["suite", "--suite", str(path), "--no-timing"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "[OK] b2-all (basis) -> FAIL" in out
        assert "Suite cli: 2/2 rows passed" in out

    def test_suite_failure_exit_code(self, write_suite, capsys, monkeypatch):
        monkeypatch.setattr("splitbasis.config.WORKBENCH_THREADS", 1)
        path = write_suite(
            {"name": "bad", "rows": [{"id": "a3", "command": "lattice", "n": 3, "expect": "fail"}]}
        )
        assert main(["suite", "--suite", str(path)]) == EXIT_FAILED
        assert "[FAIL] a3 (lattice) -> PASS" in capsys.readouterr().out

    def test_invalid_suite_is_usage_error(self, write_suite, capsys):
        path = write_suite({"name": "bad", "rows": [{"id": "x", "command": "dance", "n": 3}]})
        assert main(["suite", "--suite", str(path)]) == EXIT_USAGE
        assert "Failed to parse" in capsys.readouterr().err
