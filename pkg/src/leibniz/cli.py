"""Command-line front end.

Exit status: 0 when a check holds or a command succeeds, 1 when a check
fails, 2 on malformed input or usage, 3 if two routes that must agree do not.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import bialgebra as bi
from . import dendriform as dd
from . import fixtures as fx
from . import io
from . import rota_baxter as rb
from . import twilled as tw
from . import yang_baxter as yb
from .algebra import (
    QuadraticStructure,
    cartan_tensor,
    check_leibniz,
    check_quadratic,
    check_representation,
    coboundary_of_3cochain,
    dual_representation,
    semidirect_product,
)
from .cochain import SplitSignature, balavoine_bracket
from .errors import InputError, InternalInconsistency
from .fields import PrimeField
from .report import CheckReport
from .tensors import is_zero

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(f"{self.prog}: {message}")


def _nfiles(args, *counts):
    if len(args.files) not in counts:
        want = " or ".join(str(c) for c in counts)
        raise InputError(f"{args.kind} expects {want} input files, got {len(args.files)}")
    return [Path(f) for f in args.files]


def _load(path: Path) -> dict:
    return io.read_json(path)


def _algebra(path: Path, field=None):
    return io.algebra_from_json(_load(path), field)


def _rep(paths: list[Path], field=None):
    """``[rep]`` or ``[algebra, rep]``."""
    if len(paths) == 1:
        return io.rep_from_json(_load(paths[0]), field=field)
    return io.rep_from_json(_load(paths[1]), _algebra(paths[0], field))


def _operator(path: Path, field):
    return io.operator_from_json(_load(path), field)


def _rmatrix(paths: list[Path]):
    if len(paths) == 1:
        return io.rmatrix_from_json(_load(paths[0]), base=paths[0].parent)
    return io.rmatrix_from_json(_load(paths[1]), _algebra(paths[0]))


# check ---------------------------------------------------------------------


def _check_leibniz(args):
    (p,) = _nfiles(args, 1)
    return check_leibniz(io.algebra_from_json(_load(p), check=False))


def _check_rep(args):
    paths = _nfiles(args, 1, 2)
    obj = _load(paths[-1])
    g = _algebra(paths[0]) if len(paths) == 2 else io.algebra_from_json(obj)
    rep = io.rep_from_json(obj, g, check=False)
    return check_representation(rep)


def _check_quadratic(args):
    (p,) = _nfiles(args, 1)
    qs = io.quadratic_from_json(_load(p), base=p.parent)
    report = check_quadratic(qs)
    if report.holds:
        cocycle = is_zero(coboundary_of_3cochain(qs.algebra, cartan_tensor(qs)))
        report.derived["cartan_cocycle"] = "holds" if cocycle else "fails"
        if not cocycle:
            raise InternalInconsistency("Cartan 3-tensor of a quadratic structure is not a cocycle")
    return report


def _check_rb(args):
    a, k = _nfiles(args, 2)
    g = _algebra(a)
    return rb.check_rota_baxter(g, _operator(k, g.field))


def _check_relative_rb(args):
    paths = _nfiles(args, 2, 3)
    rep = _rep(paths[:-1])
    return rb.check_relative_rb(rep, _operator(paths[-1], rep.field))


def _check_clybe(args):
    return yb.check_clybe(_rmatrix(_nfiles(args, 1, 2)))


def _check_bialgebra(args):
    (p,) = _nfiles(args, 1)
    return bi.equivalence_harness(io.bialgebra_from_json(_load(p), base=p.parent))


def _check_matched_pair(args):
    (p,) = _nfiles(args, 1)
    obj = _load(p)
    if "gstar" in obj:
        mp = bi.standard_matched_pair(io.bialgebra_from_json(obj, base=p.parent))
    else:
        mp = bi.matched_pair_from_twilled(io.split_from_json(obj, base=p.parent))
    return bi.check_matched_pair(mp)


def _check_manin(args):
    (p,) = _nfiles(args, 1)
    obj = _load(p)
    if "gstar" in obj:
        pair = io.bialgebra_from_json(obj, base=p.parent)
        mp = bi.standard_matched_pair(pair)
        G = bi.bowtie_product(mp, verify=False)
        n = pair.g.dim
        return bi.check_manin_triple(G, bi.pairing_form(n, G.field), SplitSignature(n, n))
    qs, sig = io.manin_from_json(obj, base=p.parent)
    return bi.check_manin_triple(qs.algebra, qs.omega, sig)


def _check_dendriform(args):
    (p,) = _nfiles(args, 1)
    return dd.check_dendriform(io.dendriform_from_json(_load(p)))


CHECKS = {
    "leibniz": _check_leibniz,
    "rep": _check_rep,
    "quadratic": _check_quadratic,
    "rb": _check_rb,
    "relative-rb": _check_relative_rb,
    "clybe": _check_clybe,
    "bialgebra": _check_bialgebra,
    "matched-pair": _check_matched_pair,
    "manin": _check_manin,
    "dendriform": _check_dendriform,
}


# build ---------------------------------------------------------------------


def _build_dual_rep(args):
    return io.rep_to_json(dual_representation(_rep(_nfiles(args, 1, 2))))


def _build_semidirect(args):
    return io.algebra_to_json(semidirect_product(_rep(_nfiles(args, 1, 2))))


def _build_twist(args):
    s, h = _nfiles(args, 2)
    sa = io.split_from_json(_load(s), base=s.parent)
    return io.split_to_json(tw.twist(sa, _operator(h, sa.algebra.field)))


def _build_bowtie(args):
    (p,) = _nfiles(args, 1)
    pair = io.bialgebra_from_json(_load(p), base=p.parent)
    return io.algebra_to_json(bi.bowtie_product(bi.standard_matched_pair(pair)))


def _build_manin_standard(args):
    (p,) = _nfiles(args, 1)
    G, W, sig = bi.standard_manin_triple(_algebra(p))
    return io.quadratic_to_json(QuadraticStructure(G, W), d1=sig.d1)


def _build_triangular(args):
    return io.bialgebra_to_json(yb.triangular_pair(_rmatrix(_nfiles(args, 1, 2))))


def _build_dendriform_from_rb(args):
    paths = _nfiles(args, 2, 3)
    rep = _rep(paths[:-1])
    return io.dendriform_to_json(dd.dendriform_from_rb(rep, _operator(paths[-1], rep.field)))


def _build_canonical_r(args):
    (p,) = _nfiles(args, 1)
    _, rm = dd.canonical_r(io.dendriform_from_json(_load(p)))
    return io.rmatrix_to_json(rm)


def _build_solution_from_rb(args):
    paths = _nfiles(args, 2, 3)
    rep = _rep(paths[:-1])
    _, rm = yb.solution_from_relative_rb(rep, _operator(paths[-1], rep.field))
    return io.rmatrix_to_json(rm)


BUILDS = {
    "dual-rep": _build_dual_rep,
    "semidirect": _build_semidirect,
    "twist": _build_twist,
    "bowtie": _build_bowtie,
    "manin-standard": _build_manin_standard,
    "triangular": _build_triangular,
    "dendriform-from-rb": _build_dendriform_from_rb,
    "canonical-r": _build_canonical_r,
    "solution-from-rb": _build_solution_from_rb,
}


# bracket -------------------------------------------------------------------


def _bracket_balavoine(args):
    a, b = _nfiles(args, 2)
    P = io.multilinear_from_json(_load(a))
    Q = io.multilinear_from_json(_load(b), P.field)
    return io.map_to_json(balavoine_bracket(P, Q).T, P.field)


def _derived_input(path: Path, field):
    obj = _load(path)
    if "matrix" in obj:
        return io.operator_from_json(obj, field).T
    return io.map_from_json(obj, field)


def _bracket_derived(args):
    paths = _nfiles(args, 3, 4)
    rep = _rep(paths[:-2])
    g1, g2 = (_derived_input(p, rep.field) for p in paths[-2:])
    return io.map_to_json(rb.derived_bracket(rep, g1, g2), rep.field)


def _tensor_input(path: Path, field):
    return io.tensor_from_json(_load(path), field, base=path.parent)


def _bracket_tensor(args):
    a, p, q = _nfiles(args, 3)
    g = _algebra(a)
    P, Q = _tensor_input(p, g.field), _tensor_input(q, g.field)
    if args.route == "closed":
        out = yb.tensor_bracket_22_closed(g, P, Q)
    else:
        out = yb.tensor_bracket(g, P, Q)
    return io.tensor_to_json(out, g.field)


BRACKETS = {
    "balavoine": _bracket_balavoine,
    "derived": _bracket_derived,
    "tensor": _bracket_tensor,
}


# output --------------------------------------------------------------------


def _format_report(report: CheckReport) -> str:
    lines = [f"{report.subject}: {report.status}"]
    for key, value in sorted(report.derived.items()):
        lines.append(f"  {key}: {value}")
    for w in report.witnesses:
        where = f" at basis {tuple(w.indices)}" if w.indices else ""
        lines.append(f"  {w.condition} fails{where}")
        for idx, v in w.residual:
            lines.append(f"    {list(idx)}: {v}")
    if report.truncated:
        lines.append("  (further witnesses omitted)")
    return "\n".join(lines)


def _emit_report(report: CheckReport, pretty: bool) -> int:
    if pretty:
        print(_format_report(report))
    else:
        print(io.dumps(report.to_json()))
    return EXIT_OK if report.holds else EXIT_FAIL


def _emit_object(obj: dict, out: str | None, pretty: bool) -> int:
    text = io.dumps(obj, pretty=pretty)
    if out:
        Path(out).write_text(text + "\n")
    else:
        print(text)
    return EXIT_OK


# commands ------------------------------------------------------------------


def _cmd_check(args):
    return _emit_report(CHECKS[args.kind](args), args.pretty)


def _cmd_build(args):
    return _emit_object(BUILDS[args.kind](args), args.output, args.pretty)


def _cmd_bracket(args):
    return _emit_object(BRACKETS[args.kind](args), args.output, args.pretty)


def _cmd_classify(args):
    field = PrimeField(args.prime)
    paths = [Path(args.algebra), Path(args.rep)]
    rep = _rep(paths, field)
    for K in rb.classify_rb_bruteforce(rep, jobs=args.jobs, backend=args.backend):
        print(io.dumps({"rows": K.shape[0], "cols": K.shape[1], "matrix": io.matrix_to_json(K, field)}))
    return EXIT_OK


def _cmd_fixtures(args):
    names = args.names or sorted(fx.FIXTURES)
    if args.list:
        print(io.dumps({"fixtures": sorted(fx.FIXTURES)}, pretty=args.pretty))
        return EXIT_OK
    if args.stdout:
        if len(names) != 1:
            raise InputError("--stdout takes exactly one fixture name")
        sys.stdout.write(fx.fixture_text(names[0]))
        return EXIT_OK
    written = [str(fx.emit(name, args.directory)) for name in names]
    print(io.dumps({"written": written}, pretty=args.pretty))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="leibniz", description="Exact computations with finite-dimensional Leibniz algebras.")
    common = _Parser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="human-readable output")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("check", parents=[common], help="verify a structure")
    p.add_argument("kind", choices=sorted(CHECKS))
    p.add_argument("files", nargs="+")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("build", parents=[common], help="construct a derived object")
    p.add_argument("kind", choices=sorted(BUILDS))
    p.add_argument("files", nargs="+")
    p.add_argument("-o", "--output", help="write to this file instead of standard output")
    p.set_defaults(func=_cmd_build)

    p = sub.add_parser("bracket", parents=[common], help="evaluate a graded bracket")
    p.add_argument("kind", choices=sorted(BRACKETS))
    p.add_argument("files", nargs="+")
    p.add_argument("--route", choices=("transfer", "closed"), default="transfer", help="tensor bracket route")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_bracket)

    p = sub.add_parser("classify", parents=[common], help="enumerate operators over a prime field")
    p.add_argument("kind", choices=["rb"])
    p.add_argument("algebra")
    p.add_argument("rep")
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--backend", choices=["python", "cython"], default=None)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("fixtures", parents=[common], help="write canonical data files")
    p.add_argument("names", nargs="*")
    p.add_argument("-d", "--directory", default=".")
    p.add_argument("--list", action="store_true")
    p.add_argument("--stdout", action="store_true", help="print a single fixture instead of writing it")
    p.set_defaults(func=_cmd_fixtures)
    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except InternalInconsistency as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except InputError as exc:
        msg = str(exc).replace("\n", " ")
        print(f"error: {msg}", file=sys.stderr)
        return EXIT_INPUT
    except RecursionError:
        print("error: input too deeply nested", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
