import json

import pytest

from wreathstats.cli import main
from wreathstats.core import OrderSpec, order_to_json


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestStats:
    def test_example_28_custom_order_file(self, capsys, tmp_path):
        path = tmp_path / "ex28.json"
        order = OrderSpec.custom(
            3,
            3,
            tuple(
                __import__("wreathstats.core", fromlist=["parse_entries"]).parse_entries(
                    "2^1 1^2 3^2 3^1 2^2 1^1 0 1 2 3"
                )
            ),
        )
        path.write_text(order_to_json(order))
        code, out, _ = run(
            capsys,
            "stats",
            "--r",
            "3",
            "--n",
            "3",
            "--order",
            f"custom:{path}",
            "3^1 1^2 2^2",
        )
        assert code == 0
        data = json.loads(out)
        assert (data["des"], data["maj"], data["inv"], data["len"]) == (2, 1, 1, 9)

    def test_example_23_inverse(self, capsys):
        code, out, _ = run(
            capsys,
            "stats",
            "--r",
            "4",
            "--n",
            "7",
            "--order",
            "ar",
            "5^2 2^3 4 3^1 7^2 1 6^1",
        )
        assert code == 0
        data = json.loads(out)
        assert data["col"] == 9
        assert data["inverse"]["window"] == "6 2^3 4^1 3 1^2 7^1 5^2"

    def test_identity_window_all_zero(self, capsys):
        code, out, _ = run(capsys, "stats", "--r", "2", "--order", "bz", "1 2 3")
        data = json.loads(out)
        assert code == 0
        assert (data["des"], data["maj"], data["inv"], data["len"], data["col"]) == (
            0,
            0,
            0,
            0,
            0,
        )

    def test_parse_error_exit_2(self, capsys):
        code, _, err = run(capsys, "stats", "--r", "3", "--order", "ar", "1 1 2")
        assert code == 2
        assert err

    def test_color_out_of_range_exit_2(self, capsys):
        code, _, _ = run(capsys, "stats", "--r", "2", "--order", "ar", "1^3 2 3")
        assert code == 2


class TestBijectionCommands:
    def test_phi_example_39(self, capsys):
        code, out, _ = run(
            capsys,
            "bijection",
            "phi",
            "--r",
            "3",
            "--order",
            "ar",
            "4^2 3^1 0 2^2 4^1 3^1",
        )
        assert code == 0
        data = json.loads(out)
        assert data["gamma"] == "3 4^2 2^1 6^1 1^2 5^1"
        assert data["lambda"] == "0 1 2 2 2 2"
        assert data["roundtrip"] == "ok"

    def test_phi_all_zero(self, capsys):
        code, out, _ = run(
            capsys, "bijection", "phi", "--r", "2", "--order", "bz", "0 0 0"
        )
        data = json.loads(out)
        assert code == 0
        assert data["gamma"] == "1 2 3"
        assert data["lambda"] == "0 0 0"

    def test_psi_example_321(self, capsys):
        code, out, _ = run(
            capsys,
            "bijection",
            "psi",
            "--r",
            "3",
            "--from",
            "bz",
            "--to",
            "ar",
            "2^2 2 0 1^1 1^1 0",
        )
        assert code == 0
        data = json.loads(out)
        assert data["image"] == "1^2 2 0 1^1 2^1 0"
        assert data["roundtrip"] == "ok"

    def test_block_decode(self, capsys):
        code, out, _ = run(
            capsys,
            "bijection",
            "block",
            "--r",
            "3",
            "--order",
            "ar",
            "1^2 2 0 1^1 2^1 0",
        )
        assert code == 0
        data = json.loads(out)
        assert data["gamma"] == "3 6 1^2 4^1 5^1 2"
        assert data["composition"] == "2,2,2"

    def test_block_encode_precondition_exit_1(self, capsys):
        code, _, err = run(
            capsys,
            "bijection",
            "block",
            "--r",
            "3",
            "--order",
            "ar",
            "--comp",
            "2,2,2",
            "6 3 1^2 4^1 5^1 2",
        )
        assert code == 1
        assert "block form" in err

    def test_bipartite_roundtrip(self, capsys):
        code, out, _ = run(
            capsys,
            "bijection",
            "bipartite",
            "--r",
            "3",
            "--top",
            "0 1 1 1",
            "--bottom",
            "2^1 2^2 2^2 3^1",
        )
        assert code == 0
        data = json.loads(out)
        assert data["mu"] == "2 2 2 3"
        assert data["roundtrip"] == "ok"

    def test_bipartite_non_member_exit_1(self, capsys):
        code, _, _ = run(
            capsys,
            "bijection",
            "bipartite",
            "--r",
            "3",
            "--top",
            "1 1 1 1",
            "--bottom",
            "2^1 2^2 2^2 3^1",
        )
        assert code == 1


class TestVerifyCommands:
    def test_carlitz_trivial(self, capsys):
        code, out, _ = run(capsys, "verify", "carlitz", "--n-max", "0", "--t-cap", "2")
        assert code == 0
        assert json.loads(out)["outcome"] == "pass"

    def test_lemma43_random_order(self, capsys):
        code, out, _ = run(
            capsys,
            "verify",
            "lemma43",
            "--r",
            "2",
            "--n",
            "3",
            "--order",
            "random:42",
        )
        assert code == 0
        data = json.loads(out)
        assert data["outcome"] == "pass"
        assert data["params"]["compositions"] == 20

    def test_six_small(self, capsys):
        code, out, _ = run(
            capsys, "verify", "six", "--r", "2", "--n", "2", "--k1", "2", "--k2", "2"
        )
        assert code == 0
        assert json.loads(out)["outcome"] == "pass"

    def test_six_non_ar_needs_exploratory(self, capsys):
        code, _, err = run(
            capsys, "verify", "six", "--r", "2", "--n", "2", "--order", "bz"
        )
        assert code == 2
        assert "exploratory" in err

    def test_six_exploratory_reports_without_asserting(self, capsys):
        code, out, _ = run(
            capsys,
            "verify",
            "six",
            "--r",
            "2",
            "--n",
            "2",
            "--order",
            "st",
            "--exploratory",
        )
        assert code == 0
        assert "outcome" in json.loads(out)

    def test_fiber(self, capsys):
        code, out, _ = run(
            capsys,
            "verify",
            "fiber",
            "--r",
            "3",
            "--n",
            "6",
            "--order",
            "ar",
            "--eta",
            "3 4^2 2^1 6^1 1^2 5^1",
            "--max-f",
            "2",
            "--t-cap",
            "2",
        )
        assert code == 0
        assert json.loads(out)["outcome"] == "pass"

    def test_mismatch_exits_1_with_witness(self, capsys, tmp_path):
        from wreathstats.core import ColoredEntry, swap_entries

        bad = swap_entries(OrderSpec.ar(2, 3), ColoredEntry(1), ColoredEntry(3, 1))
        path = tmp_path / "bad.json"
        path.write_text(order_to_json(bad))
        code, out, _ = run(
            capsys,
            "verify",
            "lemma43",
            "--r",
            "2",
            "--n",
            "3",
            "--order",
            f"custom:{path}",
        )
        assert code == 1
        data = json.loads(out)
        assert data["outcome"] == "fail"
        assert data["witness"]["monomial"]

    def test_guard_rail(self, capsys):
        code, _, err = run(
            capsys, "verify", "six", "--r", "4", "--n", "12", "--k1", "1", "--k2", "1"
        )
        assert code == 2
        assert "force" in err


class TestDist:
    def test_csv_rows(self, capsys):
        code, out, _ = run(
            capsys,
            "dist",
            "--r",
            "2",
            "--n",
            "1",
            "--order",
            "ar",
            "--stats",
            "des,maj,col",
            "--format",
            "csv",
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "t,q,a,coefficient"
        assert set(lines[1:]) == {"0,0,0,1", "1,0,1,1"}


class TestByteStability:
    def test_verify_output_stable(self, capsys):
        args = ("verify", "lemma43", "--r", "2", "--n", "2", "--order", "random:9")
        _, out1, _ = run(capsys, *args)
        _, out2, _ = run(capsys, *args)
        assert out1 == out2

    def test_stats_output_stable(self, capsys):
        args = ("stats", "--r", "3", "--order", "bz", "3^1 1^2 2^2")
        _, out1, _ = run(capsys, *args)
        _, out2, _ = run(capsys, *args)
        assert out1 == out2

    def test_output_file(self, capsys, tmp_path):
        path = tmp_path / "report.json"
        code, out, _ = run(
            capsys,
            "verify",
            "carlitz",
            "--n-max",
            "1",
            "--t-cap",
            "1",
            "--output",
            str(path),
        )
        assert code == 0
        assert out == ""
        assert json.loads(path.read_text())["outcome"] == "pass"
