"""Command-line front end: ``qcount {qbinom,qmultinom,descent-poly,enumerate,verify}``.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 budget
exceeded.  Results go to stdout, diagnostics to stderr.  ``--json`` emits an
:class:`OutputRecord` whose big integers are decimal strings.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib.resources import files
from dataclasses import asdict, dataclass, field
from itertools import islice
from math import comb
from typing import Any, Iterator, Sequence

from . import qcoeff, verify
from .budget import check_count, check_perm_degree
from .errors import BudgetExceeded
from .ffield import PrimeField
from .inclexcl import descent_exact_count, descent_exact_polynomial
from .partitions import BoxBound, enumerate_in_box
from .perms import (
    DescentSpec,
    descent_set,
    enumerate_paths,
    enumerate_with_descents_in,
    format_subset,
    inv,
    path_to_permutation,
    path_to_subset,
)
from .qpoly import QPolynomial, eval_int
from .subspaces import enumerate_rref

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


# looked up by name so a patched qcoeff is honoured
_BINOMIAL_ROUTES = {
    "product": "qbinom_product",
    "partitions": "qbinom_partitions",
    "permutations": "qbinom_permutations",
}
_MULTINOMIAL_ROUTES = {"chain": "qmultinom_chain", "permutations": "qmultinom_permutations"}


class UsageError(Exception):
    pass


@dataclass
class OutputRecord:
    command: str
    inputs: dict[str, Any]
    result: Any
    method: str | None = None
    text_lines: list[str] = field(default_factory=list, repr=False, compare=False)

    def as_dict(self) -> dict:
        d = asdict(self)
        d.pop("text_lines")
        return d

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> OutputRecord:
        """Inverse of :meth:`to_json` (text lines are not serialized)."""
        d = json.loads(text)
        return cls(d["command"], d["inputs"], d["result"], d.get("method"))


def load_schema() -> dict:
    """JSON schema that every ``--json`` record satisfies."""
    return json.loads(files("qcount").joinpath("schema/output_record.schema.json").read_text())


def _poly_payload(p: QPolynomial) -> dict:
    return {"coefficients": p.to_json_list(), "text": p.to_text()}


def _parse_int_list(text: str, what: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"{what} must be a comma-separated list of integers, got {text!r}") from None


def _spec(n: int, cuts: Sequence[int]) -> DescentSpec:
    try:
        return DescentSpec(n, tuple(cuts))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _check_nk(n: int, k: int) -> None:
    if n < 0 or not 0 <= k <= n:
        raise UsageError(f"need 0 <= k <= n, got n={n}, k={k}")


def _poly_record(command: str, inputs: dict, method: str, p: QPolynomial, at: int | None,
                 n: int, spec: DescentSpec, title: str) -> OutputRecord:
    report = qcoeff.structure_report(p, n, spec)
    result: dict[str, Any] = {"polynomial": _poly_payload(p), "structure": report.as_dict()}
    lines = [
        f"{title} [{method}]",
        f"polynomial: {p.to_text()}",
        "coefficients: " + ",".join(p.to_json_list()),
    ]
    if at is not None:
        value = eval_int(p, at)
        result["value"] = str(value)
        lines.append(f"at q={at}: {value}")
    yn = lambda b: "yes" if b else "no"  # noqa: E731
    lines.append(
        f"structure: monic={yn(report.monic)} degree={report.degree} "
        f"expected_degree={report.expected_degree} palindromic={yn(report.palindromic)} "
        f"unimodal={yn(report.unimodal)} all_positive={yn(report.all_positive)}"
    )
    return OutputRecord(command, inputs, result, method, lines)


def cmd_qbinom(n: int, k: int, method: str = "product", at: int | None = None) -> OutputRecord:
    _check_nk(n, k)
    if method not in _BINOMIAL_ROUTES:
        raise UsageError(f"unknown method {method!r}")
    p = getattr(qcoeff, _BINOMIAL_ROUTES[method])(n, k)
    inputs = {"n": n, "k": k, "at": at}
    return _poly_record("qbinom", inputs, method, p, at, n, DescentSpec.for_binomial(n, k),
                        f"qbinom({n}, {k})")


def cmd_qmultinom(n: int, cuts: Sequence[int], method: str = "chain", at: int | None = None) -> OutputRecord:
    if n < 0:
        raise UsageError(f"n must be nonnegative, got {n}")
    spec = _spec(n, cuts)
    if method not in _MULTINOMIAL_ROUTES:
        raise UsageError(f"unknown method {method!r}")
    p = getattr(qcoeff, _MULTINOMIAL_ROUTES[method])(n, spec)
    inputs = {"n": n, "cuts": list(spec.cuts), "at": at}
    title = f"qmultinom({n}; cuts {format_subset(spec.cuts)}; parts {','.join(map(str, spec.parts))})"
    return _poly_record("qmultinom", inputs, method, p, at, n, spec, title)


def cmd_descent_poly(n: int, T: Sequence[int]) -> OutputRecord:
    if n < 0:
        raise UsageError(f"n must be nonnegative, got {n}")
    target = tuple(sorted(set(T)))
    if any(not 1 <= t <= n - 1 for t in target):
        raise UsageError(f"descent positions must lie in 1..{n - 1}: {target}")
    p = descent_exact_polynomial(n, target)
    count = descent_exact_count(n, target)
    result = {"polynomial": _poly_payload(p), "count": str(count)}
    lines = [f"descent-poly({n}; exact descent set {format_subset(target)})",
             f"polynomial: {p.to_text()}", f"count: {count}"]
    return OutputRecord("descent-poly", {"n": n, "set": list(target)}, result, "inclusion-exclusion", lines)


def _enumerate_items(kind: str, n: int, k: int | None, cuts: Sequence[int], q: int | None) -> Iterator[tuple[dict, list[str]]]:
    if kind in ("diagrams", "paths", "rref"):
        if k is None:
            raise UsageError(f"enumerate {kind} needs --k")
        _check_nk(n, k)
    if kind == "diagrams":
        check_count(comb(n, k), what="diagrams")
        box = BoxBound(k, n - k)
        for lam in enumerate_in_box(box):
            yield {"parts": list(lam.parts), "weight": lam.weight, "text": str(lam)}, [str(lam)]
    elif kind == "paths":
        check_count(comb(n, k), what="paths")
        for path in enumerate_paths(n, k):
            subset = sorted(path_to_subset(path))
            pi = path_to_permutation(path)
            line = f"{path} {format_subset(subset)} {pi}"
            yield {"steps": path.steps, "subset": subset, "permutation": list(pi.images),
                   "text": line}, [line]
    elif kind == "perms":
        spec = _spec(n, cuts)
        check_perm_degree(n)
        check_count(qcoeff.classical_multinomial(spec), what="permutations")
        for pi in enumerate_with_descents_in(spec):
            yield {"images": list(pi.images), "inversions": inv(pi),
                   "descents": sorted(descent_set(pi)), "text": str(pi)}, [str(pi)]
    elif kind == "rref":
        if q is None:
            raise UsageError("enumerate rref needs --q")
        try:
            field_ = PrimeField(q)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        current = None
        for r in enumerate_rref(n, k, field_):
            header = []
            if r.pivots != current:
                current = r.pivots
                header = ["# pivots: " + ",".join(map(str, r.pivots))]
            yield {"pivots": list(r.pivots), "rows": [list(row) for row in r.matrix.entries],
                   "text": str(r)}, header + [str(r)]
    else:
        raise UsageError(f"unknown kind {kind!r}")


def cmd_enumerate(kind: str, n: int, k: int | None = None, cuts: Sequence[int] = (), q: int | None = None,
                  limit: int | None = None) -> OutputRecord:
    if n < 0:
        raise UsageError(f"n must be nonnegative, got {n}")
    if limit is not None and limit < 0:
        raise UsageError("--limit must be nonnegative")
    items, lines = [], []
    for obj, text in islice(_enumerate_items(kind, n, k, cuts, q), limit):
        items.append(obj)
        lines.extend(text)
    inputs = {"kind": kind, "n": n, "k": k, "cuts": list(cuts), "q": q, "limit": limit}
    return OutputRecord("enumerate", inputs, {"count": str(len(items)), "items": items}, kind, lines)


def cmd_verify(n_max: int, q_list: Sequence[int] = (2, 3),
               oracle_budget: int = verify.DEFAULT_ORACLE_BUDGET) -> OutputRecord:
    if n_max < 0:
        raise UsageError("--n-max must be nonnegative")
    try:
        for q in q_list:
            PrimeField(q)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    report = verify.run_verify(n_max, tuple(q_list), oracle_budget)
    inputs = {"n_max": n_max, "q_list": list(q_list), "oracle_budget": oracle_budget}
    return OutputRecord("verify", inputs, report.as_dict(), "cross-method", report.render().splitlines())


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON record instead of text")

    parser = argparse.ArgumentParser(prog="qcount", description=__doc__.splitlines()[0], parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("qbinom", parents=[common], help="Gaussian binomial coefficient [n k]_q")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--method", choices=sorted(_BINOMIAL_ROUTES), default="product")
    p.add_argument("--at", type=int, default=None, help="also evaluate at this integer q")

    p = sub.add_parser("qmultinom", parents=[common], help="q-multinomial coefficient for a descent set")
    p.add_argument("n", type=int)
    p.add_argument("--cuts", default="", help="strictly increasing cuts in 1..n-1, e.g. 1,2")
    p.add_argument("--method", choices=sorted(_MULTINOMIAL_ROUTES), default="chain")
    p.add_argument("--at", type=int, default=None)

    p = sub.add_parser("descent-poly", parents=[common], help="inversion polynomial of an exact descent class")
    p.add_argument("n", type=int)
    p.add_argument("--set", dest="descents", default="", help="descent positions, e.g. 1,2")

    p = sub.add_parser("enumerate", parents=[common], help="list diagrams, paths, permutations or RREF matrices")
    p.add_argument("kind", choices=["diagrams", "paths", "perms", "rref"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--cuts", default="")
    p.add_argument("--q", type=int, default=None)
    p.add_argument("--limit", type=int, default=None)

    p = sub.add_parser("verify", parents=[common], help="run the cross-method agreement suite")
    p.add_argument("--n-max", type=int, default=6)
    p.add_argument("--q-list", default="2,3")
    p.add_argument("--oracle-budget", type=int, default=verify.DEFAULT_ORACLE_BUDGET)
    return parser


def run(args: argparse.Namespace) -> OutputRecord:
    if args.command == "qbinom":
        return cmd_qbinom(args.n, args.k, args.method, args.at)
    if args.command == "qmultinom":
        return cmd_qmultinom(args.n, _parse_int_list(args.cuts, "--cuts"), args.method, args.at)
    if args.command == "descent-poly":
        return cmd_descent_poly(args.n, _parse_int_list(args.descents, "--set"))
    if args.command == "enumerate":
        return cmd_enumerate(args.kind, args.n, args.k, _parse_int_list(args.cuts, "--cuts"), args.q, args.limit)
    if args.command == "verify":
        return cmd_verify(args.n_max, _parse_int_list(args.q_list, "--q-list"), args.oracle_budget)
    raise UsageError(f"unknown command {args.command!r}")


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        record = run(args)
    except UsageError as exc:
        print(f"qcount: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"qcount: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as exc:
        print(f"qcount: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.json:
        print(record.to_json())
    else:
        print("\n".join(record.text_lines))
    if record.command == "verify" and not record.result["passed"]:
        return EXIT_VERIFY_FAILED
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
