"""Command-line entry point and the JSON presentation file format.

Exit codes: 0 pass, 1 mathematical failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from typing import Any

from .duality import dual_algebra, dual_coalgebra_fgp
from .exact_linalg import FpElement, Matrix, Ring, parse_ring
from .families import (
    comatrix_coalgebra,
    cyclic_group_table,
    left_zero_monoid_table,
    matrix_algebra,
    max_monoid_table,
    symmetric_group_table,
    truncated_polynomial_algebra,
)
from .fgmod import FreeModule, LinearMap
from .finite_dual import (
    POLYNOMIAL,
    FiniteDualCoalgebra,
    RecurrentSequence,
    check_induced_quotient,
    finite_dual_findim,
    kappa_is_injective,
    kappa_probe,
    membership_certificate,
    orbit_coalgebra_polyalg,
)
from .hopf import (
    BialgebraPresentation,
    HopfPresentation,
    check_antipode,
    check_bialgebra,
    dual_bialgebra_findim,
    dual_hopf_findim,
    group_algebra_hopf,
    sweedler_h4,
)
from .structures import (
    AlgebraPresentation,
    CoalgebraPresentation,
    check_algebra_axioms,
    check_coalgebra_axioms,
    monoid_algebra,
)
from .verify import SUITES, RunConfig, format_witnesses, run_all

KINDS = ("algebra", "coalgebra", "bialgebra", "hopf", "recseq")
FAMILIES = ("group-algebra", "monoid-algebra", "matrix-algebra", "truncated-poly", "sweedler-h4", "comatrix")

Presentation = Any  # AlgebraPresentation | CoalgebraPresentation | BialgebraPresentation | HopfPresentation | RecurrentSequence


class FormatError(ValueError):
    """The file is not a valid presentation."""


# --- scalars --------------------------------------------------------------------------

def _pair(x) -> list[int]:
    if isinstance(x, FpElement):
        return [x.value, 1]
    q = Fraction(x)
    return [q.numerator, q.denominator]


def _scalar(ring: Ring, raw, where: str):
    if isinstance(raw, bool):
        raise FormatError(f"{where}: expected a scalar, got {raw!r}")
    if isinstance(raw, int):
        return ring(raw)
    if isinstance(raw, list) and len(raw) == 2 and all(isinstance(v, int) and not isinstance(v, bool) for v in raw):
        num, den = raw
        if den == 0:
            raise FormatError(f"{where}: zero denominator")
        if ring.kind == "Fp" and not 0 <= num < ring.p:
            raise FormatError(f"{where}: F_p entry {num} is not reduced mod {ring.p}")
        try:
            return ring.from_pair(num, den)
        except (ValueError, ZeroDivisionError) as exc:
            raise FormatError(f"{where}: {exc}") from None
    raise FormatError(f"{where}: expected [numerator, denominator], got {raw!r}")


# --- reading --------------------------------------------------------------------------

def _get(doc: dict, key: str, where: str = "file"):
    if key not in doc:
        raise FormatError(f"{where}: missing field {key!r}")
    return doc[key]


def _carrier(doc: dict, ring: Ring) -> FreeModule:
    rank = _get(doc, "rank")
    if not isinstance(rank, int) or isinstance(rank, bool) or rank < 0:
        raise FormatError(f"rank must be a natural number, got {rank!r}")
    labels = doc.get("labels")
    if labels is not None:
        if not isinstance(labels, list) or len(labels) != rank or not all(isinstance(s, str) for s in labels):
            raise FormatError("labels must be a list of rank strings")
        labels = tuple(labels)
    return FreeModule(ring, rank, labels or tuple(f"e{i}" for i in range(rank)))


def _triples(doc: dict, key: str, ring: Ring, n: int) -> dict:
    raw = _get(doc, key)
    if not isinstance(raw, list):
        raise FormatError(f"{key} must be a list")
    out = {}
    for t, entry in enumerate(raw):
        where = f"{key}[{t}]"
        if not isinstance(entry, list) or len(entry) != 5:
            raise FormatError(f"{where}: expected [i, j, k, numerator, denominator]")
        idx = entry[:3]
        if not all(isinstance(i, int) and not isinstance(i, bool) and 0 <= i < n for i in idx):
            raise FormatError(f"{where}: index out of range 0..{n - 1}")
        key3 = tuple(idx)
        if key3 in out:
            raise FormatError(f"{where}: duplicate index {list(key3)}")
        out[key3] = _scalar(ring, entry[3:], where)
    return out


def _vector(doc: dict, key: str, ring: Ring, n: int) -> list:
    raw = _get(doc, key)
    if not isinstance(raw, list) or len(raw) != n:
        raise FormatError(f"{key} must be a list of {n} scalars")
    return [_scalar(ring, v, f"{key}[{i}]") for i, v in enumerate(raw)]


def _scalar_list(doc: dict, key: str, ring: Ring) -> list:
    raw = _get(doc, key)
    if not isinstance(raw, list):
        raise FormatError(f"{key} must be a list of scalars")
    return [_scalar(ring, v, f"{key}[{i}]") for i, v in enumerate(raw)]


def _matrix(doc: dict, key: str, ring: Ring, n: int) -> Matrix:
    raw = _get(doc, key)
    if not isinstance(raw, list) or len(raw) != n or not all(isinstance(r, list) and len(r) == n for r in raw):
        raise FormatError(f"{key} must be a {n}x{n} matrix")
    return Matrix.from_rows(ring, [[_scalar(ring, v, f"{key}[{i}][{j}]") for j, v in enumerate(r)]
                                   for i, r in enumerate(raw)], cols=n)


def _algebra(doc, carrier):
    return AlgebraPresentation.build(carrier, _triples(doc, "mul", carrier.base, carrier.rank),
                                     _vector(doc, "unit", carrier.base, carrier.rank))


def _coalgebra(doc, carrier):
    return CoalgebraPresentation.build(carrier, _triples(doc, "comul", carrier.base, carrier.rank),
                                       _vector(doc, "counit", carrier.base, carrier.rank))


def parse_presentation(doc: Any) -> Presentation:
    if not isinstance(doc, dict):
        raise FormatError("top level must be a JSON object")
    try:
        ring = parse_ring(_get(doc, "base"))
    except (ValueError, TypeError, AttributeError) as exc:
        raise FormatError(f"base: {exc}") from None
    kind = doc.get("kind") or _guess_kind(doc)
    if kind not in KINDS:
        raise FormatError(f"unknown kind {kind!r}")
    if kind == "recseq":
        initial, recurrence = (_scalar_list(doc, key, ring) for key in ("initial", "recurrence"))
        try:
            return RecurrentSequence.build(initial, recurrence, ring)
        except ValueError as exc:
            raise FormatError(str(exc)) from None
    carrier = _carrier(doc, ring)
    if kind == "algebra":
        return _algebra(doc, carrier)
    if kind == "coalgebra":
        return _coalgebra(doc, carrier)
    b = BialgebraPresentation(_algebra(doc, carrier), _coalgebra(doc, carrier))
    if kind == "bialgebra":
        return b
    return HopfPresentation(b, LinearMap(carrier, carrier, _matrix(doc, "antipode", ring, carrier.rank)))


def _guess_kind(doc: dict) -> str:
    if "initial" in doc:
        return "recseq"
    has_a, has_c = "mul" in doc, "comul" in doc
    if has_a and has_c:
        return "hopf" if "antipode" in doc else "bialgebra"
    return "coalgebra" if has_c else "algebra"


def load_presentation(path: str) -> Presentation:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise FormatError(f"malformed JSON in {path}: {exc}") from None
    return parse_presentation(doc)


# --- writing --------------------------------------------------------------------------

def _header(kind: str, carrier: FreeModule) -> dict:
    doc: dict = {"kind": kind, "base": carrier.base.name, "rank": carrier.rank}
    if carrier.labels:
        doc["labels"] = list(carrier.labels)
    return doc


def _sparse(constants: dict) -> list:
    return [[*k, *_pair(v)] for k, v in sorted(constants.items())]


def to_document(p: Presentation) -> dict:
    if isinstance(p, RecurrentSequence):
        return {"kind": "recseq", "base": p.base.name, "initial": [_pair(x) for x in p.initial],
                "recurrence": [_pair(x) for x in p.recurrence]}
    if isinstance(p, AlgebraPresentation):
        return {**_header("algebra", p.carrier), "mul": _sparse(p.mul), "unit": [_pair(x) for x in p.unit]}
    if isinstance(p, CoalgebraPresentation):
        return {**_header("coalgebra", p.carrier), "comul": _sparse(p.comul),
                "counit": [_pair(x) for x in p.counit]}
    if isinstance(p, BialgebraPresentation):
        a, c = to_document(p.algebra), to_document(p.coalgebra)
        return {**a, **c, "kind": "bialgebra"}
    if isinstance(p, HopfPresentation):
        doc = to_document(p.bialgebra)
        doc["kind"] = "hopf"
        doc["antipode"] = [[_pair(x) for x in row] for row in p.antipode.matrix.to_lists()]
        return doc
    raise TypeError(f"cannot serialize {type(p).__name__}")


def finite_dual_document(fd: FiniteDualCoalgebra, probe_degree: int) -> dict:
    """Coalgebra file plus a ``finite_dual`` block recording basis and κ certificate."""
    doc = to_document(fd.coalgebra)
    if fd.is_polynomial:
        basis = [{"initial": [_pair(x) for x in g.initial], "recurrence": [_pair(x) for x in g.recurrence]}
                 for g in fd.basis]
        ambient = POLYNOMIAL
    else:
        basis = [[_pair(x) for x in v] for v in fd.basis]
        ambient = "finite-rank"
    k = kappa_probe(fd, probe_degree)
    doc["finite_dual"] = {
        "ambient": ambient,
        "basis": basis,
        "kappa": [[_pair(x) for x in row] for row in k.to_lists()],
        "kappa_injective": kappa_is_injective(fd, probe_degree),
        "probe_degree": probe_degree if fd.is_polynomial else None,
    }
    return doc


_FLAT_LIST = re.compile(r"\[\s*(-?\d+(?:,\s*-?\d+)*)\s*\]")


def dumps(doc: dict) -> str:
    """Indented JSON with integer-only lists kept on one line."""
    text = json.dumps(doc, indent=2, ensure_ascii=False)
    return _FLAT_LIST.sub(lambda m: "[" + re.sub(r"\s+", " ", m.group(1)) + "]", text)


# --- checking -------------------------------------------------------------------------

def check_presentation(p: Presentation) -> tuple[bool, list[str]]:
    if isinstance(p, RecurrentSequence):
        ok, why = membership_certificate(p)
        return ok, [why]
    if isinstance(p, AlgebraPresentation):
        rep = check_algebra_axioms(p)
    elif isinstance(p, CoalgebraPresentation):
        rep = check_coalgebra_axioms(p)
    elif isinstance(p, BialgebraPresentation):
        rep = check_bialgebra(p)
    else:
        rep = check_bialgebra(p.bialgebra)
        if rep.passed:
            rep = check_antipode(p)
    return rep.passed, format_witnesses(rep)


def _kind(p: Presentation) -> str:
    return {RecurrentSequence: "recseq", AlgebraPresentation: "algebra", CoalgebraPresentation: "coalgebra",
            BialgebraPresentation: "bialgebra", HopfPresentation: "hopf"}[type(p)]


def _emit_check(kind: str, ok: bool, lines: list[str], fmt: str, out) -> None:
    if fmt == "json":
        print(json.dumps({"kind": kind, "passed": ok, "witnesses": lines}, indent=2), file=out)
    else:
        print(f"{'PASS' if ok else 'FAIL'}: {kind}", file=out)
        for line in lines:
            print(f"  {line}", file=out)


# --- commands -------------------------------------------------------------------------

def cmd_check(args, out) -> int:
    p = load_presentation(args.path)
    ok, lines = check_presentation(p)
    _emit_check(_kind(p), ok, lines, args.format, out)
    return 0 if ok else 1


def _fail(kind: str, lines: list[str], args, out) -> int:
    _emit_check(kind, False, lines, args.format, out)
    return 1


def cmd_dual(args, out) -> int:
    p = load_presentation(args.path)
    if isinstance(p, RecurrentSequence):
        raise FormatError("dual needs a finite-rank presentation, not a recurrent sequence")
    ok, lines = check_presentation(p)
    if not ok:
        return _fail(_kind(p), lines, args, out)
    if isinstance(p, AlgebraPresentation):
        d = dual_coalgebra_fgp(p)
    elif isinstance(p, CoalgebraPresentation):
        d = dual_algebra(p)
    elif isinstance(p, BialgebraPresentation):
        d = dual_bialgebra_findim(p)
    else:
        d = dual_hopf_findim(p)
    print(dumps(to_document(d)), file=out)
    return 0


def cmd_finite_dual(args, out) -> int:
    p = load_presentation(args.path)
    if isinstance(p, RecurrentSequence):
        ok, why = membership_certificate(p)
        if not ok:
            return _fail("recseq", [why], args, out)
        fd = orbit_coalgebra_polyalg(p)
        rep = check_induced_quotient(POLYNOMIAL, fd, args.probe_degree)
    else:
        a = p if isinstance(p, AlgebraPresentation) else getattr(p, "algebra", None)
        if a is None:
            raise FormatError("finite-dual needs an algebra or recseq file")
        ok, lines = check_presentation(a)
        if not ok:
            return _fail("algebra", lines, args, out)
        if not a.base.is_field:
            raise FormatError("finite-dual of an algebra needs a field base")
        fd = finite_dual_findim(a)
        rep = check_induced_quotient(a, fd)
    if not rep.passed:
        return _fail("finite-dual", format_witnesses(rep), args, out)
    print(dumps(finite_dual_document(fd, args.probe_degree)), file=out)
    return 0


def cmd_verify(args, out) -> int:
    suites = None if args.suite in (None, "all") else (args.suite,)
    if suites and args.suite not in SUITES:
        raise FormatError(f"unknown suite {args.suite!r}; known: {', '.join(sorted(SUITES))}")
    report = run_all(RunConfig(suites=suites, seed=args.seed, max_rank=args.max_rank,
                               probe_degree=args.probe_degree))
    print(report.to_json() if args.format == "json" else report.to_text(), file=out)
    return 0 if report.passed else 1


def generate(family: str, params: list[str], base: Ring) -> Presentation:
    def nat(i: int, name: str, low: int = 1) -> int:
        if len(params) <= i:
            raise FormatError(f"{family} needs parameter {name}")
        try:
            v = int(params[i])
        except ValueError:
            raise FormatError(f"{name} must be an integer, got {params[i]!r}") from None
        if v < low:
            raise FormatError(f"{name} must be at least {low}")
        return v

    if family == "group-algebra":
        if params[:1] == ["S3"]:
            table, labels = symmetric_group_table(3)
            return group_algebra_hopf(table, base, labels)
        return group_algebra_hopf(cyclic_group_table(nat(0, "n")), base)
    if family == "monoid-algebra":
        kind = params[0] if params else ""
        if kind == "left-zero":
            return monoid_algebra(left_zero_monoid_table(nat(1, "k")), base)
        if kind == "max":
            return monoid_algebra(max_monoid_table(nat(1, "n")), base)
        raise FormatError("monoid-algebra takes 'left-zero K' or 'max N'")
    if family == "matrix-algebra":
        return matrix_algebra(nat(0, "n"), base)
    if family == "truncated-poly":
        return truncated_polynomial_algebra(nat(0, "n"), base)
    if family == "comatrix":
        return comatrix_coalgebra(nat(0, "n"), base)
    if family == "sweedler-h4":
        try:
            return sweedler_h4(base)
        except ValueError as exc:
            raise FormatError(str(exc)) from None
    raise FormatError(f"unknown family {family!r}; known: {', '.join(FAMILIES)}")


def cmd_gen(args, out) -> int:
    try:
        base = parse_ring(args.base)
    except ValueError as exc:
        raise FormatError(f"base: {exc}") from None
    p = generate(args.family, args.params, base)
    ok, lines = check_presentation(p)
    if not ok:
        return _fail(_kind(p), lines, args, out)
    print(dumps(to_document(p)), file=out)
    return 0


# --- argument parsing -------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise FormatError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="text")
    common.add_argument("--probe-degree", type=int, default=8)
    common.add_argument("--max-rank", type=int, default=4)
    common.add_argument("--seed", type=int, default=0)

    parser = _Parser(prog="sweedler", description="Exact checks for algebras, coalgebras and their duals.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, helptext in (("check", "check the axioms of a presentation file"),
                           ("dual", "emit the dual presentation"),
                           ("finite-dual", "emit the finite dual coalgebra with its κ certificate")):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("path")
    v = sub.add_parser("verify", parents=[common], help="run verification suites")
    v.add_argument("suite", nargs="?", default="all", help="suite id or 'all'")
    g = sub.add_parser("gen", parents=[common], help="generate a presentation file")
    g.add_argument("family", choices=FAMILIES)
    g.add_argument("params", nargs="*")
    g.add_argument("--base", default="Q")
    return parser


COMMANDS = {"check": cmd_check, "dual": cmd_dual, "finite-dual": cmd_finite_dual,
            "verify": cmd_verify, "gen": cmd_gen}


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        if args.probe_degree < 1 or args.max_rank < 1:
            raise FormatError("--probe-degree and --max-rank must be positive")
        return COMMANDS[args.command](args, out)
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
