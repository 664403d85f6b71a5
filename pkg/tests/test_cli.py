import json

from negabase.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run_cli(capsys, *argv, "--json")
    return code, json.loads(out)


class TestExpand:
    def test_greedy_minus_half(self, capsys):
        code, out, _ = run_cli(capsys, "expand", "--base", "phi", "--x", "-1/2",
                               "--kind", "greedy")
        assert code == 0
        assert "(111000)" in out

    def test_is_minus_half(self, capsys):
        code, out, _ = run_cli(capsys, "expand", "--base", "phi", "--x", "-1/2",
                               "--kind", "is")
        assert code == 0 and "(100)" in out

    def test_greedy_zero(self, capsys):
        code, out, _ = run_cli(capsys, "expand", "--base", "phi", "--x", "0",
                               "--kind", "greedy")
        assert code == 0 and "01(10)" in out

    def test_json_report(self, capsys):
        code, rep = run_json(capsys, "expand", "--base", "phi", "--x", "-1/2",
                             "--kind", "greedy")
        assert code == 0
        assert rep["schema"] == 1
        assert rep["status"] == "OK"
        assert rep["base"]["min_poly"] == [-1, -1, 1]
        assert rep["x"]["coeffs"] == ["-1/2", "0"]
        assert rep["result"]["word"] == "(111000)"
        assert rep["result"]["period_length"] == 6
        assert rep["round_trip"] is True
        assert rep["interval"]["l"] == ["-1", "0"]

    def test_lazy_kind(self, capsys):
        code, rep = run_json(capsys, "expand", "--base", "phi", "--x", "-1/2",
                             "--kind", "lazy")
        assert code == 0 and rep["result"]["word"] == "1(001110)"

    def test_beta2_kinds(self, capsys):
        code, rep = run_json(capsys, "expand", "--base", "phi", "--x", "-1/2",
                             "--kind", "beta2-greedy")
        assert code == 0
        assert rep["result"]["word"] == "(1:1.1:0.0:0)"
        assert rep["round_trip"] is True
        code, rep = run_json(capsys, "expand", "--base", "phi", "--x", "-1/2",
                             "--kind", "beta2-lazy")
        assert code == 0
        assert rep["result"]["word"].startswith("1:0(")
        assert rep["round_trip"] is True

    def test_depth_mode(self, capsys):
        code, rep = run_json(capsys, "expand", "--base", "phi", "--x", "-1/2",
                             "--kind", "greedy", "--depth", "4")
        assert code == 0
        assert rep["result"]["word"] == "1110"
        assert rep["round_trip"] is False

    def test_domain_error_exit_2(self, capsys):
        code, out, err = run_cli(capsys, "expand", "--base", "phi", "--x", "5",
                                 "--kind", "greedy")
        assert code == 2
        assert "outside" in err

    def test_parse_error_exit_2(self, capsys):
        code, _, err = run_cli(capsys, "expand", "--base", "sqrt2", "--x", "0")
        assert code == 2

    def test_period_not_found_exit_3(self, capsys, monkeypatch):
        monkeypatch.setenv("NEGABASE_ORBIT_BUDGET", "25")
        code, rep = run_json(capsys, "expand", "--base", "phi",
                             "--x", "104729/1048576", "--kind", "greedy")
        assert code == 3
        assert rep["status"] == "PERIOD_NOT_FOUND"

    def test_error_report_in_json(self, capsys):
        code, rep = run_json(capsys, "expand", "--base", "phi", "--x", "5")
        assert code == 2 and rep["status"] == "ERROR"


class TestAdmissible:
    def test_pairs_reject(self, capsys):
        code, out, _ = run_cli(capsys, "admissible", "--base", "phi",
                               "--pairs", "1:1.0:0", "--level", "pairs-greedy")
        assert code == 0
        assert out.startswith("REJECT")

    def test_binary_is_accept(self, capsys):
        code, out, _ = run_cli(capsys, "admissible", "--binary-is", "(100)")
        assert code == 0 and out.startswith("ACCEPT")

    def test_binary_golden(self, capsys):
        code, rep = run_json(capsys, "admissible", "--binary-golden", "0(011101)")
        assert code == 0 and rep["accepted"] is True

    def test_pairs_lazy_level(self, capsys):
        code, out, _ = run_cli(capsys, "admissible", "--base", "phi",
                               "--pairs", "0:0.1:1", "--level", "pairs-lazy")
        assert code == 0 and out.startswith("REJECT")

    def test_pairs_need_base(self, capsys):
        code, _, err = run_cli(capsys, "admissible", "--pairs", "1:1")
        assert code == 2

    def test_undecided_exit_3(self, capsys, monkeypatch):
        from fractions import Fraction

        from negabase import (format_word, minimal_alphabet, rational_field,
                              reference_bounds)
        from negabase.words import DigitString

        monkeypatch.setenv("NEGABASE_ORBIT_BUDGET", "3")
        ctx = rational_field(Fraction(7, 4))
        bounds = reference_bounds(ctx, orbit_budget=3)
        info = minimal_alphabet(ctx)
        trigger = next(p for p in info.greedy if p.b >= 1 and p.a == ctx.floor_beta)
        word = DigitString((trigger,) + bounds.mid.word.preperiod, (info.greedy[0],))
        code, rep = run_json(capsys, "admissible", "--base", "7/4",
                             "--pairs", format_word(word, pair=True),
                             "--level", "pairs-greedy")
        assert code == 3
        assert rep["status"] == "UNDECIDED"


class TestAlphabet:
    def test_phi(self, capsys):
        code, rep = run_json(capsys, "alphabet", "--base", "phi")
        assert code == 0
        assert rep["greedy_alphabet"] == ["1:0", "1:1", "0:0"]
        assert rep["full"] is False

    def test_tribonacci(self, capsys):
        code, rep = run_json(capsys, "alphabet", "--base", "tribonacci")
        assert code == 0
        assert rep["greedy_alphabet"] == ["1:0", "1:1", "0:0", "0:1"]
        assert rep["full"] is True


class TestUnique:
    def test_28(self, capsys):
        code, rep = run_json(capsys, "unique", "--base", "2.8", "--depth", "8",
                             "--samples", "4")
        assert code == 0
        assert rep["all_unique_at_depth"] is True
        assert all(s["branch_count"] == 1 for s in rep["samples"])

    def test_below_threshold(self, capsys):
        code, _, err = run_cli(capsys, "unique", "--base", "1.5")
        assert code == 2 and "sqrt(3)" in err


class TestBranches:
    def test_counts_and_prefixes(self, capsys):
        code, rep = run_json(capsys, "branches", "--base", "phi", "--x", "-1/2",
                             "--depth", "6")
        assert code == 0
        assert rep["count"] == len(rep["prefixes"])
        assert "111000" in rep["prefixes"]
        assert "100111" in rep["prefixes"]

    def test_unique_point(self, capsys):
        code, rep = run_json(capsys, "branches", "--base", "phi", "--x", "-1",
                             "--depth", "4")
        assert code == 0 and rep["prefixes"] == ["1010"]


class TestCompare:
    def test_minus_half_table(self, capsys):
        code, rep = run_json(capsys, "compare", "--base", "phi", "--x", "-1/2")
        assert code == 0
        assert rep["expansions"]["greedy"]["word"] == "(111000)"
        assert rep["expansions"]["lazy"]["word"] == "1(001110)"
        assert rep["expansions"]["ito_sadahiro"]["word"] == "(100)"
        assert rep["alternate_order"] == {"lazy_vs_is": "LT", "is_vs_greedy": "LT"}

    def test_outside_is_domain(self, capsys):
        code, _, err = run_cli(capsys, "compare", "--base", "phi", "--x", "-1")
        assert code == 2 and "Ito-Sadahiro domain" in err


def test_order_verdict_eq():
    from negabase import greedy_neg_beta, lazy_neg_beta, phi_field
    from negabase.cli import _order_verdict

    # a point whose greedy and lazy expansions coincide
    phi = phi_field()
    g = greedy_neg_beta(phi.element(-1))
    l = lazy_neg_beta(phi.element(-1))
    assert _order_verdict(g, l) == "EQ"


def test_byte_determinism(capsys):
    args = ["compare", "--base", "phi", "--x", "-1/2", "--json"]
    code1 = main(args)
    out1 = capsys.readouterr().out
    code2 = main(args)
    out2 = capsys.readouterr().out
    assert code1 == code2 == 0
    assert out1 == out2
