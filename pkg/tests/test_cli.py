import json

import pytest

from abelianwords.cli import main


def run(capsys, *args):
    code = main(list(args))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestGenerate:
    def test_thue_morse(self, capsys):
        code, out, _ = run(capsys, "generate", "--recipe", "tm", "--len", "16")
        assert code == 0 and out == "0110100110010110\n"

    def test_champernowne_display(self, capsys):
        code, out, _ = run(capsys, "generate", "--recipe", "champernowne",
                           "--len", "26")
        assert code == 0 and out == "01101110010111011110001001\n"

    def test_zero_length_is_empty_line(self, capsys):
        code, out, _ = run(capsys, "generate", "--recipe", "tm", "--len", "0")
        assert code == 0 and out == "\n"

    def test_inline_json_recipe(self, capsys):
        recipe = '{"kind": "periodic", "pattern": "01"}'
        code, out, _ = run(capsys, "generate", "--recipe", recipe, "--len", "5")
        assert code == 0 and out == "01010\n"

    def test_recipe_file(self, capsys, tmp_path):
        path = tmp_path / "word.json"
        path.write_text(json.dumps(
            {"kind": "fixed-point", "morphism": {"0": "01", "1": "10"},
             "seed": "0"}))
        code, out, _ = run(capsys, "generate", "--recipe", str(path),
                           "--len", "8")
        assert code == 0 and out == "01101001\n"

    def test_output_file(self, capsys, tmp_path):
        path = tmp_path / "word.txt"
        code, _, _ = run(capsys, "generate", "--recipe", "tm", "--len", "4",
                         "--out", str(path))
        assert code == 0
        assert path.read_bytes() == b"0110\n"

    def test_bad_recipe_is_usage_error(self, capsys):
        code, _, err = run(capsys, "generate", "--recipe", "nonsense",
                           "--len", "4")
        assert code == 2 and "recipe" in err


class TestProfile:
    def test_thue_morse_rows(self, capsys):
        code, out, _ = run(capsys, "profile", "--recipe", "tm", "--nmax", "4")
        assert code == 0
        assert out == ("n,rho_ab,rho,balance_running\n"
                       "1,2,2,1\n2,3,4,2\n3,2,6,2\n4,3,10,2\n")

    def test_fibonacci_rows(self, capsys):
        code, out, _ = run(capsys, "profile", "--recipe", "fibonacci",
                           "--nmax", "3")
        assert code == 0
        assert out == ("n,rho_ab,rho,balance_running\n"
                       "1,2,2,1\n2,2,3,1\n3,2,4,1\n")

    def test_periodic_rows(self, capsys):
        code, out, _ = run(capsys, "profile", "--recipe", "periodic01",
                           "--nmax", "2")
        assert code == 0
        assert out.endswith("1,2,2,1\n2,1,2,1\n")

    @pytest.mark.parametrize("jobs", ["2", "3", "5"])
    def test_worker_count_independence(self, capsys, jobs):
        _, base, _ = run(capsys, "profile", "--recipe", "tm", "--nmax", "17")
        code, sharded, _ = run(capsys, "profile", "--recipe", "tm",
                               "--nmax", "17", "--jobs", jobs)
        assert code == 0 and sharded == base

    def test_explicit_prefix_len(self, capsys):
        code, out, _ = run(capsys, "profile", "--recipe", "tm", "--nmax", "2",
                           "--prefix-len", "4096")
        assert code == 0 and out.splitlines()[1] == "1,2,2,1"


class TestPowers:
    def test_brute_constant_word(self, capsys):
        code, out, _ = run(capsys, "powers", "brute", "--recipe", "const0",
                           "--k", "9")
        assert code == 0
        cert = json.loads(out)
        assert (cert["start"], cert["period"], cert["exponent"]) == (0, 1, 9)
        assert cert["block_parikh"] == [1]

    def test_vdw_thue_morse(self, capsys):
        code, out, _ = run(capsys, "powers", "vdw", "--recipe", "tm",
                           "--k", "2", "--M", "2")
        assert code == 0
        cert = json.loads(out)
        assert (cert["start"], cert["period"]) == (3, 5)
        assert cert["recipe"]["kind"] == "fixed-point"

    def test_sturmian_certificate(self, capsys, golden):
        from abelianwords.powers import sturmian_period_pair
        code, out, _ = run(capsys, "powers", "sturmian", "--slope", "golden",
                           "--pos", "1", "--k", "4")
        assert code == 0
        cert = json.loads(out)
        pair = sturmian_period_pair(golden, 4)
        assert cert["period"] in (pair.ell1, pair.ell2)
        assert cert["start"] == 0 and cert["exponent"] == 4

    def test_brute_not_found_is_failure_exit(self, capsys):
        code, out, _ = run(capsys, "powers", "brute", "--recipe",
                           '{"kind": "explicit", "symbols": "0101"}',
                           "--k", "5", "--prefix-len", "4")
        assert code == 1 and "no abelian power" in out

    def test_sturmian_needs_slope(self, capsys):
        code, _, err = run(capsys, "powers", "sturmian", "--k", "2")
        assert code == 2 and "slope" in err


class TestVerify:
    def test_thue_morse_passes(self, capsys):
        code, out, _ = run(capsys, "verify", "thue-morse", "--nmax", "32")
        assert code == 0 and out.startswith("PASS claim=thue-morse-profile")

    def test_rauzy_both_variants(self, capsys):
        for variant in ("hubert", "morphism"):
            code, out, _ = run(capsys, "verify", "rauzy", "--variant", variant,
                               "--nmax", "32")
            assert code == 0 and "PASS" in out

    def test_periodicity_failure(self, capsys):
        code, out, _ = run(capsys, "verify", "periodicity", "--recipe",
                           "periodic01", "--p", "3")
        assert code == 1 and out.startswith("FAIL claim=periodicity")

    def test_periodicity_pass(self, capsys):
        code, out, _ = run(capsys, "verify", "periodicity", "--recipe",
                           "periodic01", "--p", "2")
        assert code == 0

    def test_unknown_claim(self, capsys):
        code, _, err = run(capsys, "verify", "no-such-claim")
        assert code == 2 and "unknown claim" in err

    def test_csv_report(self, capsys, tmp_path):
        path = tmp_path / "report.csv"
        code, _, _ = run(capsys, "verify", "thue-morse", "--nmax", "16",
                         "--out", str(path))
        assert code == 0
        lines = path.read_text().splitlines()
        assert lines[0] == "claim,range,verdict,witness"
        assert lines[1].startswith("thue-morse-profile,1..16,pass")


class TestExitCodes:
    def test_precision_exhaustion_is_exit_3(self, capsys):
        recipe = ('{"kind": "characteristic", '
                  '"slope": {"preperiod": [2, 3], "period": []}}')
        code, _, err = run(capsys, "generate", "--recipe", recipe,
                           "--len", "64")
        assert code == 3 and "precision" in err

    def test_budget_exhaustion_is_exit_3(self, capsys):
        code, _, err = run(capsys, "generate", "--recipe", "tm",
                           "--len", str(1 << 27))
        assert code == 3 and "budget" in err

    def test_usage_error_from_argparse(self):
        with pytest.raises(SystemExit) as exc:
            main(["generate", "--len", "4"])  # missing --recipe
        assert exc.value.code == 2


class TestConfigFile:
    def test_config_fills_missing_flags(self, capsys, tmp_path):
        cfg = tmp_path / "run.json"
        cfg.write_text(json.dumps({"recipe": "tm", "len": 8}))
        code, out, _ = run(capsys, "--config", str(cfg), "generate",
                           "--recipe", "tm", "--len", "4")
        assert code == 0 and out == "0110\n"  # explicit flags win

    def test_config_supplies_defaults(self, capsys, tmp_path):
        cfg = tmp_path / "run.json"
        cfg.write_text(json.dumps({"prefix_len": 4096, "jobs": 2}))
        code, out, _ = run(capsys, "--config", str(cfg), "profile",
                           "--recipe", "tm", "--nmax", "2")
        assert code == 0 and out.splitlines()[1] == "1,2,2,1"


class TestDeterminism:
    def test_byte_identical_reruns(self, capsys):
        _, a, _ = run(capsys, "profile", "--recipe", "hubert-golden",
                      "--nmax", "8")
        _, b, _ = run(capsys, "profile", "--recipe", "hubert-golden",
                      "--nmax", "8")
        assert a == b
