import pytest

from src.core.etapoly import hno_oracle
from src.core.poly_cache import CACHE_HEADER
from src.models.polynomial import DensePolynomial


def _corrupt_cache(path, polys):
    lines = [CACHE_HEADER] + [f"n={n}: " + ",".join(str(c) for c in p.coeffs) for n, p in enumerate(polys[:8])]
    lines[7] = lines[7].replace("n=6: 7920,", "n=6: 7921,")
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


@pytest.mark.cli
class TestCompute:
    """Test the compute subcommand."""

    def test_p6(self, run_cli, cache_file):
        code, out, _ = run_cli("compute", "--n", "6", "--cache", str(cache_file))
        assert code == 0
        assert out == "p_6(b) = 7920 - 18144 b + 14674 b^2 - 5205 b^3 + 805 b^4 - 51 b^5 + 1 b^6\n"
        assert cache_file.exists()

    def test_p0(self, run_cli):
        assert run_cli("compute", "--n", "0")[1] == "p_0(b) = 1\n"

    def test_p2(self, run_cli):
        assert run_cli("compute", "--n", "2")[1] == "p_2(b) = 4 - 5 b + 1 b^2\n"

    @pytest.mark.parametrize("engine", ["hno", "multiset"])
    def test_engines_print_the_same(self, run_cli, engine):
        assert run_cli("compute", "--n", "9", "--engine", engine)[1] == run_cli("compute", "--n", "9")[1]

    def test_default_cache_written_in_cwd(self, run_cli, isolated_cwd):
        run_cli("compute", "--n", "4")
        assert (isolated_cwd / "etapoly.cache").exists()

    def test_corrupted_cache(self, run_cli, cache_file, polys):
        _corrupt_cache(cache_file, polys)
        code, out, err = run_cli("compute", "--n", "6", "--cache", str(cache_file))
        assert code == 2
        assert out == ""
        assert "constant term" in err

    def test_negative_n(self, run_cli):
        code, _, err = run_cli("compute", "--n", "-1")
        assert code == 2
        assert "error:" in err

    def test_cap(self, run_cli):
        code, _, err = run_cli("compute", "--n", "201")
        assert code == 2
        assert "exceeds cap" in err


@pytest.mark.cli
class TestOracles:
    """Test the oracles subcommand."""

    def test_agree(self, run_cli):
        code, out, _ = run_cli("oracles", "--max-n", "12")
        assert code == 0
        assert out == "oracles agree for 0 <= n <= 12\n"

    def test_trivial(self, run_cli):
        assert run_cli("oracles", "--max-n", "1")[0] == 0

    def test_injected_fault(self, run_cli, mocker):
        def faulty(n, allow_expensive=False):
            poly = hno_oracle(n, allow_expensive)
            if n != 5:
                return poly
            coeffs = list(poly.coeffs)
            coeffs[2] += 1
            return DensePolynomial(coeffs=tuple(coeffs))

        mocker.patch("src.core.etapoly.hno_oracle", side_effect=faulty)
        code, out, _ = run_cli("oracles", "--max-n", "8")
        assert code == 1
        assert out.startswith("divergence at n=5 t=2: recurrence=")

    def test_cap(self, run_cli):
        assert run_cli("oracles", "--max-n", "30")[0] == 2


@pytest.mark.cli
class TestTriangle:
    """Test the triangle subcommand."""

    def test_blank_style(self, run_cli):
        code, out, _ = run_cli("triangle", "--max-n", "30")
        lines = out.splitlines()
        assert code == 0
        assert lines[0] == "n=4: {2}"
        assert lines[3] == "n=19: {2,4,1,3}"
        assert lines[-1] == "n=29: {2,,,,,3}"

    def test_csv_style(self, run_cli):
        out = run_cli("triangle", "--max-n", "29", "--style", "csv")[1]
        assert out.splitlines()[-1] == "n=29: {2,0,0,0,0,3}"

    def test_rounds_down(self, run_cli):
        assert len(run_cli("triangle", "--max-n", "21")[1].splitlines()) == 4

    def test_deterministic(self, run_cli):
        assert run_cli("triangle", "--max-n", "60")[1] == run_cli("triangle", "--max-n", "60")[1]


@pytest.mark.cli
class TestCensus:
    """Test the census subcommand."""

    def test_mod_5(self, run_cli):
        code, out, _ = run_cli("census", "--p", "5", "--max-n", "19")
        lines = out.splitlines()
        assert code == 0
        assert lines[0] == "n\tcount_0\tcount_1\tcount_2\tcount_3\tcount_4\tequidistributed\tzero_prefix\trotation"
        assert lines[-1] == "19\t4\t4\t4\t4\t4\ttrue\ttrue\ttrue"

    def test_mod_7_counterexample(self, run_cli):
        out = run_cli("census", "--p", "7", "--max-n", "6")[1]
        assert out.splitlines()[-1] == "6\t2\t1\t1\t2\t0\t1\t0\tfalse\ttrue"

    def test_mod_2(self, run_cli):
        lines = run_cli("census", "--p", "2", "--max-n", "9")[1].splitlines()
        assert len(lines) == 6
        assert all(line.endswith("\ttrue\ttrue") for line in lines[1:])

    def test_predictor_source_matches_exact(self, run_cli):
        exact = run_cli("census", "--p", "7", "--max-n", "41")[1]
        predicted = run_cli("census", "--p", "7", "--max-n", "41", "--source", "predictor")[1]
        assert exact == predicted

    def test_non_prime(self, run_cli):
        code, _, err = run_cli("census", "--p", "4", "--max-n", "19")
        assert code == 2
        assert "not prime" in err


@pytest.mark.cli
class TestLemmaCommands:
    """Test predict, lemma21, lemma34, acoeffs and divpop."""

    def test_predict_single(self, run_cli):
        assert run_cli("predict", "--p", "5", "--k", "3", "--t", "4")[1] == "2\n"

    def test_predict_vector(self, run_cli):
        assert run_cli("predict", "--p", "7", "--n", "6")[1] == "3,0,2,3,0,5,1\n"

    def test_predict_needs_one_index(self, run_cli):
        assert run_cli("predict", "--p", "7", "--n", "6", "--k", "0")[0] == 2
        assert run_cli("predict", "--p", "7")[0] == 2

    def test_predict_residue_needs_k(self, run_cli):
        code, out, err = run_cli("predict", "--p", "7", "--n", "6", "--r", "2")
        assert code == 2
        assert out == ""
        assert "--r only with --k" in err
        assert run_cli("predict", "--p", "7", "--k", "0", "--r", "5")[1] == "0,6,4,5,0,6\n"

    def test_lemma21(self, run_cli):
        code, out, _ = run_cli("lemma21", "--p", "5", "--k", "3")
        lines = out.splitlines()
        assert code == 0
        assert lines[0] == "total\tbruteforce\tclosed\tmatch"
        assert len(lines) == 14
        assert all(line.endswith("\ttrue") for line in lines[1:])

    def test_lemma21_cap(self, run_cli):
        assert run_cli("lemma21", "--p", "11", "--k", "2")[0] == 2

    def test_lemma34(self, run_cli):
        code, out, _ = run_cli("lemma34", "--p", "7", "--j", "2")
        assert code == 0
        assert out.splitlines()[0] == "s\tlhs\trhs\tmatch"

    def test_acoeffs(self, run_cli):
        code, out, _ = run_cli("acoeffs", "--p", "5")
        lines = out.splitlines()
        assert code == 0
        assert lines[0] == "p=5 r=4: a=(0,2,1,3,4)"
        assert lines[1:] == ["a_0 = p(r) mod p: true", "a_{p-1} = -1 mod p: true"]

    def test_acoeffs_enumerate_method(self, run_cli):
        generating = run_cli("acoeffs", "--p", "7", "--r", "4")[1]
        assert run_cli("acoeffs", "--p", "7", "--r", "4", "--method", "enumerate")[1] == generating

    def test_divpop(self, run_cli):
        code, out, _ = run_cli("divpop", "--p", "3", "--q", "3")
        assert code == 0
        assert "\tn=14\t" in out
        assert "divisible=true" in out
        assert "source=exact" in out

    def test_divpop_beyond_exact_cap_uses_predictor(self, run_cli):
        code, out, _ = run_cli("divpop", "--p", "7", "--q", "3")
        assert code == (0 if "divisible=true" in out else 1)
        assert "\tn=286\t" in out
        assert "divisor=6" in out
        assert "source=predictor" in out


@pytest.mark.cli
class TestVerify:
    """Test the verify subcommand."""

    def test_single_suite(self, run_cli):
        code, out, _ = run_cli("verify", "--suite", "lemma21")
        lines = out.splitlines()
        assert code == 0
        assert lines[0].startswith("PASS lemma21:")
        assert lines[-1] == "1/1 suites passed"

    def test_missing_cache_passes(self, run_cli):
        code, out, _ = run_cli("verify", "--suite", "cache")
        assert code == 0
        assert out.startswith("PASS cache: no cache file")

    def test_corrupted_cache_is_isolated(self, run_cli, cache_file, polys):
        _corrupt_cache(cache_file, polys)
        code, out, _ = run_cli("verify", "--suite", "cache", "--cache", str(cache_file))
        assert code == 1
        assert out.startswith("FAIL cache: record n=6 violates invariant: constant term")

        code, out, _ = run_cli("verify", "--suite", "theorem11", "--cache", str(cache_file))
        assert code == 0
        assert out.startswith("PASS theorem11:")

    def test_grouping_reports_printed_mismatch_as_finding(self, run_cli):
        code, out, _ = run_cli("verify", "--suite", "grouping")
        lines = out.splitlines()
        assert code == 0
        assert lines[0].startswith("PASS grouping:")
        assert "  finding: printed p_5 mod 7 (0, 6, 4, 2, 0, 6) differs from exact (0, 6, 4, 5, 0, 6)" in lines
        assert not any("p_6" in line for line in lines)
        assert lines[-1] == "1/1 suites passed"

    @pytest.mark.slow
    def test_theorem33_runs_exceptional_follow_up(self, run_cli):
        code, out, _ = run_cli("verify", "--suite", "theorem33")
        lines = out.splitlines()
        assert code == 0
        assert lines[0].startswith("PASS theorem33:")
        assert any("n=352798 equidistributed=true" in line for line in lines)

    def test_unknown_suite(self, run_cli):
        assert run_cli("verify", "--suite", "bogus")[0] == 2

    @pytest.mark.slow
    def test_full_run(self, run_cli):
        code, out, _ = run_cli("verify")
        lines = out.splitlines()
        assert code == 0
        assert sum(1 for line in lines if line.startswith("PASS ")) == 14
        assert lines[-1] == "14/14 suites passed"


@pytest.mark.cli
class TestEntryPoint:
    """Test argument handling."""

    def test_version(self, run_cli):
        code, out, _ = run_cli("--version")
        assert code == 0
        assert out.startswith("etapoly ")

    def test_missing_subcommand(self, run_cli):
        assert run_cli()[0] == 2

    def test_log_level_override(self, run_cli):
        code, _, err = run_cli("--log-level", "debug", "compute", "--n", "3")
        assert code == 0
        assert '"message": "Command finished"' in err
