"""Command line: ``zpdlie <command> [options]``.

Results go to standard output as JSON.  Exit status: 0 when the answer is
backed by a certificate or an exhaustive scan, 2 for a probabilistic
answer, 3 when undecided and 1 on invalid input.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .catalog import BUILTIN_REFS, expected_verdict
from .commuting import DEFAULT_CAP, SamplerConfig
from .decide import (
    FALSE,
    NOT_ZAD_EXHAUSTIVE,
    NOT_ZPD_EXHAUSTIVE,
    PRESERVES_SAMPLED,
    TRUE_EXHAUSTIVE,
    UNDECIDED,
    ZAD_CERTIFIED,
    ZPD_CERTIFIED,
    check_comm_preserving,
    decide_zad,
    decide_zpd,
    is_proportional_commuting,
    verify_certificate,
    verify_witness,
    verify_zad_certificate,
)
from .errors import InputError, MalformedDocumentError, ZpdError
from .exactla import GF, QQ, Matrix, parse_field
from .liealg import LieAlgebra, h2_dimensions
from .repmod import LieModule
from .serialize import (
    config_to_doc,
    dumps,
    field_name,
    load_object,
    loads,
    report_from_doc,
    report_to_doc,
)

EXIT_OK, EXIT_INVALID, EXIT_PROBABILISTIC, EXIT_UNDECIDED = 0, 1, 2, 3


def _add_input(p: argparse.ArgumentParser, required: bool = True) -> None:
    g = p.add_mutually_exclusive_group(required=required)
    g.add_argument("--builtin", metavar="REF", help="builtin reference, e.g. galilei:3 (see builtin-list)")
    g.add_argument("--input", metavar="FILE", help="JSON algebra or module document")
    p.add_argument("--field", metavar="F", help="Q or GF:p (default Q, or GF:5 with --exhaustive)")


def _add_sampler(p: argparse.ArgumentParser) -> None:
    d = SamplerConfig()
    p.add_argument("--exhaustive", action="store_true", help="scan every projective point (prime fields)")
    p.add_argument("--rounds", type=int, default=d.rounds, help="random round budget")
    p.add_argument("--seed", type=int, default=d.seed)
    p.add_argument("--families", choices=("on", "off"), default="on", help="structured pair families")
    p.add_argument("--validation", type=int, default=d.validation, help="fresh pairs checked per witness")
    p.add_argument("--window", type=int, default=d.window, help="rounds without growth before stopping")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="largest p^(n-1) an exhaustive scan may visit")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="zpdlie", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check the Jacobi or module identities")
    _add_input(p)

    for name, text in (("analyze", "zpd decision for an algebra"), ("zad", "zad decision for a module")):
        p = sub.add_parser(name, help=text)
        _add_input(p)
        _add_sampler(p)
        p.add_argument("--output", metavar="FILE", help="also write the report here")

    p = sub.add_parser("h2", help="dimensions of Z^2, B^2, H^2 with trivial coefficients")
    _add_input(p)

    p = sub.add_parser("proportional", help="are commuting elements always dependent?")
    _add_input(p)
    _add_sampler(p)
    p.add_argument("--mode", choices=("exhaustive", "probabilistic"))

    p = sub.add_parser("preserve", help="sample commuting pairs and push them through a linear map")
    _add_input(p)
    _add_sampler(p)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--target", metavar="REF", help="builtin reference of the codomain")
    g.add_argument("--target-input", metavar="FILE", help="JSON document of the codomain")
    p.add_argument("--map", required=True, metavar="FILE", help="JSON n' x n matrix of scalars")

    p = sub.add_parser("verify", help="replay a report's certificate or witness")
    p.add_argument("--report", required=True, metavar="FILE")
    p.add_argument("--exhaustive", action="store_true", help="also re-scan every point for a witness")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)

    sub.add_parser("builtin-list", help="list builtin references")
    return parser


def _field(args):
    if args.field:
        return parse_field(args.field)
    return GF(5) if getattr(args, "exhaustive", False) else None


def _read_json(path: str):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    return loads(text)


def _load(args, builtin=None, path=None):
    F = _field(args)
    builtin = builtin if builtin is not None else args.builtin
    path = path if path is not None else args.input
    if builtin is not None:
        return load_object(builtin, F or QQ)
    return load_object(_read_json(path), F)


def _config(args) -> SamplerConfig:
    return SamplerConfig(
        seed=args.seed,
        rounds=args.rounds,
        window=args.window,
        validation=args.validation,
        families=args.families == "on",
        exhaustive=args.exhaustive,
        cap=args.cap,
    )


def _emit(doc, out, path=None) -> None:
    text = dumps(doc)
    out.write(text)
    if path:
        Path(path).write_text(text)


def _vec(F, v):
    return [F.format(a) for a in v]


def _verdict_exit(verdict: str) -> int:
    if verdict in (ZPD_CERTIFIED, ZAD_CERTIFIED, NOT_ZPD_EXHAUSTIVE, NOT_ZAD_EXHAUSTIVE):
        return EXIT_OK
    if verdict == UNDECIDED:
        return EXIT_UNDECIDED
    return EXIT_PROBABILISTIC


def cmd_validate(args, out) -> int:
    obj = _load(args)
    doc = {"valid": True, "field": field_name(obj.field)}
    if isinstance(obj, LieModule):
        doc.update(kind="module", algebra_dim=obj.parent.n, dim=obj.dim)
    else:
        doc.update(kind="algebra", dim=obj.n)
    _emit(doc, out)
    return EXIT_OK


def _input_name(args) -> str:
    return args.builtin if args.builtin is not None else Path(args.input).name


def cmd_analyze(args, out) -> int:
    L = _load(args)
    if not isinstance(L, LieAlgebra):
        raise InputError("analyze needs an algebra; use zad for modules")
    cfg = _config(args)
    rep = decide_zpd(L, cfg, _input_name(args))
    _emit(report_to_doc(rep, cfg), out, args.output)
    return _verdict_exit(rep.verdict)


def cmd_zad(args, out) -> int:
    M = _load(args)
    if not isinstance(M, LieModule):
        raise InputError("zad needs a module; use analyze for algebras")
    cfg = _config(args)
    rep = decide_zad(M, cfg, _input_name(args))
    _emit(report_to_doc(rep, cfg), out, args.output)
    return _verdict_exit(rep.verdict)


def cmd_h2(args, out) -> int:
    L = _load(args)
    if not isinstance(L, LieAlgebra):
        raise InputError("h2 needs an algebra")
    z = h2_dimensions(L)
    doc = {"input": _input_name(args), "field": field_name(L.field), "dim": L.n}
    doc.update(z2=z.z2, b2=z.b2, h2=z.h2, centrally_closed=z.h2 == 0)
    _emit(doc, out)
    return EXIT_OK


def cmd_proportional(args, out) -> int:
    L = _load(args)
    if not isinstance(L, LieAlgebra):
        raise InputError("proportional needs an algebra")
    mode = args.mode or ("exhaustive" if L.field.char else "probabilistic")
    res = is_proportional_commuting(L, mode, _config(args))
    F = L.field
    doc = {"input": _input_name(args), "field": field_name(F), "mode": mode, "verdict": res.verdict}
    if res.pair is not None:
        doc["pair"] = {"x": _vec(F, res.pair.x), "y": _vec(F, res.pair.y)}
    doc["zpd_expected"] = expected_verdict(args.builtin) if args.builtin else None
    _emit(doc, out)
    return EXIT_OK if res.verdict in (TRUE_EXHAUSTIVE, FALSE) else EXIT_PROBABILISTIC


def cmd_preserve(args, out) -> int:
    L = _load(args)
    L2 = _load(args, args.target, args.target_input)
    if not isinstance(L, LieAlgebra) or not isinstance(L2, LieAlgebra):
        raise InputError("preserve needs two algebras")
    rows = _read_json(args.map)
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise MalformedDocumentError("map must be a list of rows")
    try:
        phi = Matrix(L.field, [[L.field(a) for a in r] for r in rows], L.n)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise MalformedDocumentError(f"bad map entry: {exc}") from None
    cfg = _config(args)
    res = check_comm_preserving(phi, L, L2, cfg)
    F = L.field
    doc = {"input": _input_name(args), "field": field_name(F), "verdict": res.verdict, "checked": res.checked}
    if res.pair is not None:
        doc["pair"] = {"x": _vec(F, res.pair.x), "y": _vec(F, res.pair.y)}
    doc["config"] = config_to_doc(cfg)
    _emit(doc, out)
    return EXIT_PROBABILISTIC if res.verdict == PRESERVES_SAMPLED else EXIT_OK


def cmd_verify(args, out) -> int:
    rep = report_from_doc(_read_json(args.report))
    obj = rep.module if rep.kind == "zad" else rep.algebra
    if rep.certificate is not None:
        check = (verify_zad_certificate if rep.kind == "zad" else verify_certificate)(obj, rep.certificate)
        what = "certificate"
    elif rep.witness is not None:
        check = verify_witness(obj, rep.witness, exhaustive=args.exhaustive, cap=args.cap)
        what = "witness"
    else:
        raise InputError("report has neither certificate nor witness")
    _emit({"input": rep.input, "verdict": rep.verdict, "checked": what, "ok": check.ok, "diagnosis": check.diagnosis}, out)
    return EXIT_OK if check.ok else EXIT_INVALID


def cmd_builtin_list(args, out) -> int:
    _emit([{"ref": ref, "description": text} for ref, text in BUILTIN_REFS], out)
    return EXIT_OK


COMMANDS = {
    "validate": cmd_validate,
    "analyze": cmd_analyze,
    "zad": cmd_zad,
    "h2": cmd_h2,
    "proportional": cmd_proportional,
    "preserve": cmd_preserve,
    "verify": cmd_verify,
    "builtin-list": cmd_builtin_list,
}


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INVALID
    try:
        return COMMANDS[args.command](args, out)
    except ZpdError as exc:
        err.write(f"error[{exc.code}]: {exc}\n")
        return EXIT_INVALID


def main() -> None:
    sys.exit(run())
