"""Cross-method verification harness behind ``qcount verify``.

Each check compares independent routes for one ``n`` and records pass, fail
or skip (skip when every comparison would exceed the oracle budget).  The
first failure, scanning by increasing ``n``, is kept as the counterexample.
Routes are looked up on their modules at call time so a patched build is
what actually gets checked.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from itertools import permutations as _all_perms
from math import comb

from . import ffield, inclexcl, partitions, perms, qcoeff, subspaces
from .qpoly import QPolynomial, eval_int

DEFAULT_ORACLE_BUDGET = 10**5
PERM_ROUTE_MAX_N = 14
PHI_MAX_N = 7
FILTER_MAX_N = 8

CHECKS = (
    "binomial_fourway",
    "subspace_oracle",
    "multinomial_twoway",
    "flag_oracle",
    "diagram_inversions",
    "phi_bijection",
    "descent_positivity",
    "q1_limits",
    "structure",
)


class _Mismatch(Exception):
    def __init__(self, record: dict):
        super().__init__(record.get("what", "mismatch"))
        self.record = record


class _Skip(Exception):
    pass


def _expect(ok: bool, **record) -> None:
    if not ok:
        raise _Mismatch({k: _jsonable(v) for k, v in record.items()})


def _jsonable(v):
    if isinstance(v, QPolynomial):
        return v.to_text()
    if isinstance(v, (perms.Permutation, partitions.Partition, perms.DescentSpec)):
        return str(v)
    if isinstance(v, (set, frozenset)):
        return sorted(v)
    if isinstance(v, tuple):
        return list(v)
    if isinstance(v, int) and not isinstance(v, bool):
        return str(v)
    return v


@dataclass
class CheckResult:
    check: str
    n: int
    status: str
    compared: int = 0
    counterexample: dict | None = None

    def as_dict(self) -> dict:
        return asdict(self)


@dataclass
class VerifyReport:
    n_max: int
    q_list: tuple[int, ...]
    results: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.status != "fail" for r in self.results)

    @property
    def counterexample(self) -> dict | None:
        for r in sorted(self.results, key=lambda r: (r.n, CHECKS.index(r.check))):
            if r.status == "fail":
                return {"check": r.check, "n": r.n, **(r.counterexample or {})}
        return None

    def status(self, check: str, n: int) -> str:
        for r in self.results:
            if r.check == check and r.n == n:
                return r.status
        return "skip"

    def as_dict(self) -> dict:
        return {
            "n_max": self.n_max,
            "q_list": list(self.q_list),
            "passed": self.passed,
            "checks": [r.as_dict() for r in self.results],
            "counterexample": self.counterexample,
        }

    def render(self) -> str:
        ns = list(range(self.n_max + 1))
        width = max(len(c) for c in CHECKS)
        marks = {"pass": "ok", "fail": "FAIL", "skip": "-"}
        lines = [" " * width + " | " + " ".join(f"{n:>4}" for n in ns)]
        lines.append("-" * len(lines[0]))
        for c in CHECKS:
            cells = " ".join(f"{marks[self.status(c, n)]:>4}" for n in ns)
            lines.append(f"{c:<{width}} | {cells}")
        lines.append("")
        lines.append("result: " + ("PASS" if self.passed else "FAIL"))
        ce = self.counterexample
        if ce is not None:
            lines.append("counterexample: " + ", ".join(f"{k}={v}" for k, v in ce.items()))
        return "\n".join(lines)


# individual checks: each returns the number of comparisons made and raises
# _Mismatch on disagreement or _Skip when nothing fit in the budget


def _binomial_fourway(n: int, qs, budget: int) -> int:
    done = 0
    for k in range(n + 1):
        a = qcoeff.qbinom_product(n, k)
        b = qcoeff.qbinom_partitions(n, k)
        _expect(a == b, what="product != partitions", k=k, product=a, partitions=b)
        done += 1
        if n <= PERM_ROUTE_MAX_N and comb(n, k) <= budget:
            c = qcoeff.qbinom_permutations(n, k)
            _expect(a == c, what="product != permutations", k=k, product=a, permutations=c)
            done += 1
    return done


def _subspace_oracle(n: int, qs, budget: int) -> int:
    done = 0
    for q in qs:
        field_ = ffield.PrimeField(q)
        for k in range(n + 1):
            if subspaces.predicted_subspace_count(n, k, q) > budget:
                continue
            expected = eval_int(qcoeff.qbinom_product(n, k), q)
            got = subspaces.count_subspaces(n, k, field_)
            _expect(expected == got, what="polynomial value != subspace count", q=q, k=k,
                    polynomial_value=expected, subspaces=got)
            done += 1
    if not done:
        raise _Skip
    return done


def _multinomial_twoway(n: int, qs, budget: int) -> int:
    done = 0
    for spec in perms.DescentSpec.all_specs(n):
        if n > PERM_ROUTE_MAX_N or qcoeff.classical_multinomial(spec) > budget:
            continue
        a = qcoeff.qmultinom_chain(n, spec)
        b = qcoeff.qmultinom_permutations(n, spec)
        _expect(a == b, what="chain != permutations", spec=spec, chain=a, permutations=b)
        done += 1
    if not done:
        raise _Skip
    return done


def _flag_oracle(n: int, qs, budget: int) -> int:
    done = 0
    for q in qs:
        field_ = ffield.PrimeField(q)
        for spec in perms.DescentSpec.all_specs(n):
            if subspaces.predicted_flag_count(spec, q) > budget:
                continue
            expected = eval_int(qcoeff.qmultinom_chain(n, spec), q)
            got = subspaces.count_flags(n, spec, field_)
            _expect(expected == got, what="polynomial value != flag count", q=q, spec=spec,
                    polynomial_value=expected, flags=got)
            done += 1
    if not done:
        raise _Skip
    return done


def _diagram_inversions(n: int, qs, budget: int) -> int:
    done = 0
    for k in range(n + 1):
        if comb(n, k) > budget:
            continue
        box = partitions.BoxBound(k, n - k)
        for lam in partitions.enumerate_in_box(box):
            pi = perms.diagram_to_permutation(lam, box)
            count, _ = perms.inversions(pi)
            _expect(lam.weight == count, what="|lambda| != inv(pi_lambda)", k=k, diagram=lam,
                    permutation=pi, inversions=count)
            done += 1
    if not done:
        raise _Skip
    return done


def _phi_bijection(n: int, qs, budget: int) -> int:
    if n > PHI_MAX_N:
        raise _Skip
    done = 0
    for spec in perms.DescentSpec.all_specs(n):
        if qcoeff.classical_multinomial(spec) > budget:
            continue
        target = set(perms.enumerate_with_descents_in(spec))
        for pi in target:
            inner, outer = perms.factor_phi(pi, spec)
            back = perms.compose_phi(outer, inner)
            _expect(back == pi, what="compose(factor(pi)) != pi", spec=spec, permutation=pi, got=back)
            _expect(perms.inv(pi) == perms.inv(inner) + perms.inv(outer),
                    what="inversions not additive", spec=spec, permutation=pi,
                    inner=inner, outer=outer)
        images = set()
        inner_set = list(perms.enumerate_with_descents_in(spec.inner()))
        outer_set = list(perms.enumerate_with_descents_in(spec.outer()))
        for inner in inner_set:
            for outer in outer_set:
                images.add(perms.compose_phi(outer, inner))
        _expect(len(inner_set) * len(outer_set) == len(target) and images == target,
                what="phi is not a bijection onto the descent class", spec=spec,
                domain=len(inner_set) * len(outer_set), target=len(target), images=len(images))
        done += 1
    if not done:
        raise _Skip
    return done


def _descent_positivity(n: int, qs, budget: int) -> int:
    if n > FILTER_MAX_N:
        raise _Skip
    direct: dict[frozenset, dict[int, int]] = {}
    for w in _all_perms(range(1, n + 1)):
        d = frozenset(i for i in range(1, n) if w[i - 1] > w[i])
        c = perms._inv_count(w)
        bucket = direct.setdefault(d, {})
        bucket[c] = bucket.get(c, 0) + 1
    done = 0
    for spec in perms.DescentSpec.all_specs(n):
        T = spec.cut_set
        counts = direct.get(T, {})
        expected = QPolynomial(counts.get(i, 0) for i in range(max(counts, default=-1) + 1))
        got = inclexcl.descent_exact_polynomial(n, T)
        _expect(all(c >= 0 for c in got.coeffs), what="negative coefficient", T=T, got=got)
        _expect(got == expected, what="alternating sum != direct descent-class sum", T=T,
                alternating=got, direct=expected)
        count = inclexcl.descent_exact_count(n, T)
        _expect(eval_int(got, 1) == count, what="q=1 value != descent-exact count", T=T,
                value_at_1=eval_int(got, 1), count=count)
        done += 1
    return done


def _q1_limits(n: int, qs, budget: int) -> int:
    done = 0
    for k in range(n + 1):
        v = eval_int(qcoeff.qbinom_product(n, k), 1)
        _expect(v == comb(n, k), what="q=1 value != binomial", k=k, value=v, binomial=comb(n, k))
        done += 1
    for spec in perms.DescentSpec.all_specs(n):
        v = eval_int(qcoeff.qmultinom_chain(n, spec), 1)
        m = qcoeff.classical_multinomial(spec)
        _expect(v == m, what="q=1 value != multinomial", spec=spec, value=v, multinomial=m)
        done += 1
    return done


def _structure(n: int, qs, budget: int) -> int:
    for k in range(n + 1):
        p = qcoeff.qbinom_product(n, k)
        rep = qcoeff.structure_report(p, n, perms.DescentSpec.for_binomial(n, k))
        _expect(rep.ok and rep.expected_degree == k * (n - k), what="structure predicate failed",
                k=k, polynomial=p, report=rep.as_dict())
    return n + 1


_RUNNERS = {
    "binomial_fourway": _binomial_fourway,
    "subspace_oracle": _subspace_oracle,
    "multinomial_twoway": _multinomial_twoway,
    "flag_oracle": _flag_oracle,
    "diagram_inversions": _diagram_inversions,
    "phi_bijection": _phi_bijection,
    "descent_positivity": _descent_positivity,
    "q1_limits": _q1_limits,
    "structure": _structure,
}


def run_check(check: str, n: int, q_list=(2, 3), oracle_budget: int = DEFAULT_ORACLE_BUDGET) -> CheckResult:
    runner = _RUNNERS[check]
    try:
        done = runner(n, tuple(q_list), oracle_budget)
    except _Skip:
        return CheckResult(check, n, "skip")
    except _Mismatch as exc:
        return CheckResult(check, n, "fail", counterexample=exc.record)
    except Exception as exc:  # a crashing route is a failed check, not a harness crash
        return CheckResult(check, n, "fail", counterexample={"what": f"{type(exc).__name__}: {exc}"})
    return CheckResult(check, n, "pass", compared=done)


def run_verify(n_max: int, q_list=(2, 3), oracle_budget: int = DEFAULT_ORACLE_BUDGET) -> VerifyReport:
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    qs = tuple(q_list)
    for q in qs:
        ffield.PrimeField(q)
    report = VerifyReport(n_max, qs)
    for n in range(n_max + 1):
        for check in CHECKS:
            report.results.append(run_check(check, n, qs, oracle_budget))
    return report
