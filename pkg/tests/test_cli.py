import json

import pytest

from naring.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestGen:
    def test_gen_loop_matches_library(self, capsys):
        code, out, _ = run(capsys, "gen", "loop", "--n", "5", "--m", "3")
        assert code == 0
        from naring.magma import l_loop
        assert l_loop(5, 3).to_text().strip() in out

    def test_gen_loop_json_stable(self, capsys):
        a = run(capsys, "gen", "loop", "--n", "7", "--m", "3",
                "--format", "json")
        b = run(capsys, "gen", "loop", "--n", "7", "--m", "3",
                "--format", "json")
        assert a == b and a[0] == 0
        doc = json.loads(a[1])
        assert doc["identity"] == "e"

    def test_gen_groupoid_variants(self, capsys):
        code, out, _ = run(capsys, "gen", "groupoid", "--n", "6", "--t", "3",
                           "--u", "0", "--variant", "zsss")
        assert code == 0
        code2, _, err = run(capsys, "gen", "groupoid", "--n", "6", "--t", "3",
                            "--u", "0", "--variant", "z")
        assert code2 == 4

    def test_gen_jordan(self, capsys):
        code, out, _ = run(capsys, "gen", "jordan", "--p", "5")
        assert code == 0 and "g1" in out

    def test_invalid_params_exit_4(self, capsys):
        code, _, err = run(capsys, "gen", "loop", "--n", "4", "--m", "3")
        assert code == 4

    def test_seedless_rejected(self, capsys):
        code, _, err = run(capsys, "gen", "loop", "--n", "5", "--m", "3",
                           "--seedless")
        assert code == 2


class TestMagma:
    def test_check_identity_assert(self, capsys):
        code, out, _ = run(capsys, "magma", "check", "wip",
                           "--gen-loop", "7,3", "--assert")
        assert code == 0
        code2, _, _ = run(capsys, "magma", "check", "moufang",
                          "--gen-loop", "5,2", "--assert")
        assert code2 == 1

    def test_scheck_s_loop(self, capsys):
        code, out, _ = run(capsys, "magma", "scheck", "s-loop",
                           "--gen-loop", "5,3", "--assert")
        assert code == 0

    def test_classify_file(self, tmp_path, capsys):
        from naring.magma import l_loop
        f = tmp_path / "loop.txt"
        f.write_text(l_loop(5, 3).to_text())
        code, out, _ = run(capsys, "classify", str(f), "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc["is_loop"] is True

    def test_classify_bad_file(self, capsys):
        code, _, err = run(capsys, "classify", "/no/such/file")
        assert code == 4

    def test_classify_empty_table(self, tmp_path, capsys):
        f = tmp_path / "empty.txt"
        f.write_text("")
        code, _, err = run(capsys, "classify", str(f))
        assert code == 4


class TestRing:
    def test_mul(self, capsys):
        code, out, _ = run(capsys, "ring", "--mod", "5", "--gen-loop", "5,3",
                           "mul", "3+3*g1", "2+2*g1")
        assert code == 0
        # oracle: (3+3g1)(2+2g1) = 6 + 6g1 + 6g1 + 6e = 12 + 12g1 = 2+2g1
        assert "2 + 2*g1" in out

    def test_circle_and_pow(self, capsys):
        code, out, _ = run(capsys, "ring", "--mod", "2", "--gen-loop", "5,3",
                           "circle", "1+g1", "1+g1")
        assert code == 0
        code, out, _ = run(capsys, "ring", "--mod", "2", "--gen-loop", "5,3",
                           "pow", "1+g1", "2")
        assert code == 0

    def test_find_idempotents(self, capsys):
        code, out, _ = run(capsys, "ring", "--mod", "5", "--gen-loop", "5,3",
                           "find", "idempotents", "--format", "json")
        assert code == 0
        doc = json.loads(out)
        subjects = {w["subject"] for w in doc}
        assert "1 + g1 + g2 + g3 + g4 + g5" in subjects
        assert "3 + 3*g1" in subjects

    def test_find_smarandache(self, capsys):
        code, out, _ = run(capsys, "ring", "--mod", "2", "--gen-loop", "5,3",
                           "find", "zero-divisors", "--smarandache",
                           "--format", "json")
        assert code == 0
        doc = json.loads(out)
        pseudo = {d["params"]["x"] for d in doc
                  if d["s_class"] == "s_pseudo_zero_divisor"}
        szd = {d["params"]["x"] for d in doc
               if d["s_class"] == "s_zero_divisor"}
        for i in range(1, 6):
            assert f"1 + g{i}" in pseudo
            assert f"1 + g{i}" not in szd

    def test_scan_qr_json(self, capsys):
        code, out, _ = run(capsys, "ring", "--mod", "2", "--gen-loop", "5,3",
                           "scan-qr", "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc["all_W_rqr"] is True and doc["W_size"] == 32

    def test_ideals_lattice(self, capsys):
        code, out, _ = run(capsys, "ring", "--mod", "2", "--gen-loop", "5,2",
                           "ideals", "--lattice",
                           "--check", "modular,supermodular")
        assert code == 0
        assert "4 ideal(s)" in out
        assert "modular: True" in out

    def test_check_property_assert(self, capsys):
        code, _, _ = run(capsys, "ring", "--mod", "2", "--gen-jordan", "7",
                         "check", "jordan-ring", "--assert")
        assert code == 0
        code2, out, _ = run(capsys, "ring", "--mod", "2", "--gen-loop", "5,3",
                            "check", "lie-ring", "--assert")
        assert code2 == 1

    def test_envelope(self, capsys):
        code, out, _ = run(capsys, "ring", "--mod", "2", "--gen-loop", "5,3",
                           "envelope", "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc["order"] == 32

    def test_cap_flag_exit_3(self, capsys):
        code, _, err = run(capsys, "ring", "--mod", "2", "--gen-loop", "5,3",
                           "scan-qr", "--cap", "10")
        assert code == 3

    def test_cap_env(self, capsys, monkeypatch):
        monkeypatch.setenv("NARING_CAP", "10")
        code, _, err = run(capsys, "ring", "--mod", "2", "--gen-loop", "5,3",
                           "scan-qr")
        assert code == 3
        # explicit flag beats the environment
        monkeypatch.setenv("NARING_CAP", "10")
        code2, out, _ = run(capsys, "ring", "--mod", "2", "--gen-loop", "5,3",
                            "scan-qr", "--cap", "1000000")
        assert code2 == 0

    def test_bad_element_exit_4(self, capsys):
        code, _, err = run(capsys, "ring", "--mod", "2", "--gen-loop", "5,3",
                           "mul", "q9", "g1")
        assert code == 4


class TestCorpus:
    def test_list(self, capsys):
        code, out, _ = run(capsys, "corpus", "list")
        assert code == 0 and "thm-2.2.7" in out

    def test_run_single_assert(self, capsys):
        code, out, _ = run(capsys, "corpus", "run", "ex-2.1.2", "--assert")
        assert code == 0
        assert "1/1 items match" in out

    def test_run_discrepancy_display(self, capsys):
        code, out, _ = run(capsys, "corpus", "run", "thm-2.2.7")
        assert code == 0
        assert "discrepancy-documented" in out
        assert "confirmed" not in out.replace("discrepancy-documented", "")

    def test_run_no_match(self, capsys):
        code, out, _ = run(capsys, "corpus", "run", "no-such-id")
        assert code == 0 and "no items match" in out
        code2, _, _ = run(capsys, "corpus", "run", "no-such-id", "--assert")
        assert code2 == 1

    def test_junit_output(self, tmp_path, capsys):
        dest = tmp_path / "out.xml"
        code, _, _ = run(capsys, "corpus", "run", "ex-2.1.*",
                         "--junit", str(dest))
        assert code == 0
        assert "<testsuite" in dest.read_text()


class TestUsage:
    def test_no_args_exit_2(self, capsys):
        assert run(capsys, )[0] == 2

    def test_unknown_subcommand(self, capsys):
        assert run(capsys, "frobnicate")[0] == 2

    def test_missing_magma_source(self, capsys):
        code, _, err = run(capsys, "magma", "check", "wip")
        assert code == 2
