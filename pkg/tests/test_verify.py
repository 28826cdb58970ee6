import json

import pytest

from qcount import perms, qcoeff, subspaces
from qcount.cli import main
from qcount.perms import Permutation
from qcount.qpoly import QPolynomial
from qcount.verify import CHECKS, run_check, run_verify


def test_full_suite_through_eight(capsys):
    assert main(["verify", "--n-max", "8", "--q-list", "2,3"]) == 0
    out = capsys.readouterr().out
    assert "result: PASS" in out
    assert "FAIL" not in out.replace("result: PASS", "")


def test_trivial_run():
    report = run_verify(1)
    assert report.passed and report.counterexample is None
    assert {r.check for r in report.results} == set(CHECKS)


def test_budget_skips_are_not_failures():
    report = run_verify(5, (2,), oracle_budget=3)
    assert report.passed
    sub5 = next(r for r in report.results if r.check == "subspace_oracle" and r.n == 5)
    assert sub5.status == "pass" and sub5.compared == 2
    assert run_check("phi_bijection", 8).status == "skip"
    assert report.status("binomial_fourway", 5) == "pass"


def test_negative_n_max_rejected():
    with pytest.raises(ValueError):
        run_verify(-1)


def test_corrupted_partition_route(monkeypatch, capsys):
    real = qcoeff.qbinom_partitions

    def broken(n, k):
        p = real(n, k)
        return p + QPolynomial.monomial(1) if n >= 4 and 0 < k < n else p

    monkeypatch.setattr(qcoeff, "qbinom_partitions", broken)
    assert main(["verify", "--n-max", "5", "--json"]) == 1
    record = json.loads(capsys.readouterr().out)
    assert record["result"]["passed"] is False
    ce = record["result"]["counterexample"]
    assert ce["check"] == "binomial_fourway" and ce["n"] == 4 and ce["k"] == "1"
    assert main(["verify", "--n-max", "4"]) == 1
    assert "result: FAIL" in capsys.readouterr().out


def test_corrupted_subspace_count(monkeypatch):
    real = subspaces.count_subspaces
    monkeypatch.setattr(subspaces, "count_subspaces", lambda n, k, f, budget=None: real(n, k, f) + (n == 3))
    ce = run_verify(4).counterexample
    assert ce["check"] == "subspace_oracle" and ce["n"] == 3


def test_corrupted_flag_count(monkeypatch):
    real = subspaces.count_flags
    monkeypatch.setattr(subspaces, "count_flags",
                        lambda n, spec, f, budget=None: real(n, spec, f) - (len(spec.cuts) == 2))
    result = run_check("flag_oracle", 3)
    assert result.status == "fail"


def test_corrupted_factorization(monkeypatch):
    real = perms.factor_phi

    def broken(pi, spec):
        inner, outer = real(pi, spec)
        if inner.n >= 2 and inner != Permutation.identity(inner.n):
            return Permutation.identity(inner.n), outer
        return inner, outer

    monkeypatch.setattr(perms, "factor_phi", broken)
    result = run_check("phi_bijection", 3)
    assert result.status == "fail"
    assert "compose" in result.counterexample["what"]


def test_crashing_route_is_a_failure(monkeypatch):
    def boom(n, spec):
        raise RuntimeError("boom")

    monkeypatch.setattr(qcoeff, "qmultinom_permutations", boom)
    result = run_check("multinomial_twoway", 2)
    assert result.status == "fail" and "RuntimeError" in result.counterexample["what"]


def test_report_render_shape():
    report = run_verify(3)
    lines = report.render().splitlines()
    assert len(lines) == 2 + len(CHECKS) + 2
    assert lines[-1] == "result: PASS"
