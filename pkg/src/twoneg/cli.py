"""Command-line surface.

Exit codes: 0 success/valid/accepted, 1 falsified/rejected (witness in the
report), 2 malformed input, 3 bound guard tripped (override with --force).
`--porcelain` switches to line-oriented key=value records with byte-stable
ordering.
"""

from __future__ import annotations

import argparse
import re
import sys

from . import algebra as alg_mod
from . import bridge, frames, proofs, translate
from .algebra import (Algebra, KimAlgebra, algebra_valid, build_au,
                      classify_algebra, classify_negation_pair,
                      enumerate_algebras, evaluate, read_algebra,
                      write_algebra)
from .errors import (AlgebraError, BoundGuardError, FileFormatError,
                     FormulaSyntaxError, LatticeError, WorkbenchError)
from .formula import And, Atom, Bot, Formula, Impl, Neg, Or, Tilde, Top
from .formula import atoms as formula_atoms
from .formula import parse as parse_formula
from .formula import render

GUARD_ALGEBRA = 8
GUARD_WORLDS = 10
GUARD_ATOMS = 3
GUARD_FILTER_CARRIER = 12


class Report:
    def __init__(self, porcelain: bool):
        self.porcelain = porcelain

    def kv(self, key: str, value) -> None:
        if isinstance(value, bool):
            value = "true" if value else "false"
        if self.porcelain:
            print(f"{key}={value}")
        else:
            print(f"{key}: {value}")

    def block(self, text: str) -> None:
        for line in text.rstrip("\n").split("\n"):
            if self.porcelain:
                print(f"out={line}")
            else:
                print(line)


def ast_string(f: Formula) -> str:
    match f:
        case Top():
            return "Top"
        case Bot():
            return "Bot"
        case Atom(name):
            return name
        case And(l, r):
            return f"And({ast_string(l)},{ast_string(r)})"
        case Or(l, r):
            return f"Or({ast_string(l)},{ast_string(r)})"
        case Impl(l, r):
            return f"Impl({ast_string(l)},{ast_string(r)})"
        case Neg(c):
            return f"Neg({ast_string(c)})"
        case Tilde(c):
            return f"Tilde({ast_string(c)})"
    raise TypeError(f)


def _read_text(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise FileFormatError("unreadable", path, str(e)) from None


def _load_algebra(path: str) -> Algebra:
    if not path.endswith(".alg"):
        raise FileFormatError("wrong-extension", path, "expected .alg")
    return read_algebra(_read_text(path))


def _load_frame(path: str) -> frames.Frame:
    if not path.endswith(".frm"):
        raise FileFormatError("wrong-extension", path, "expected .frm")
    return frames.read_frame(_read_text(path))


def _parse_assignment(alg: Algebra | KimAlgebra, text: str) -> dict[str, int]:
    out: dict[str, int] = {}
    if not text:
        return out
    for part in re.split(r",(?=[A-Za-z_][A-Za-z0-9_]*=)", text):
        if "=" not in part:
            raise FileFormatError("bad-assignment", part)
        name, _, value = part.partition("=")
        out[name.strip()] = alg.lattice.index(value.strip())
    return out


def _emit(rep: Report, text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
        rep.kv("written", out_path)
    else:
        rep.block(text)


def _flag_report(rep: Report, prefix: str, flag) -> None:
    rep.kv(prefix, flag.holds)
    if not flag.holds and flag.witness:
        rep.kv(prefix + "_witness", ",".join(flag.witness))


# -- subcommands ---------------------------------------------------------------

def cmd_parse(args, rep: Report) -> int:
    f = parse_formula(args.formula)
    rep.kv("ast", ast_string(f))
    rep.kv("text", render(f))
    rep.kv("atoms", ",".join(formula_atoms(f)))
    return 0


def cmd_check_algebra(args, rep: Report) -> int:
    try:
        alg = _load_algebra(args.file)
    except (LatticeError, AlgebraError) as e:
        rep.kv("accepted", False)
        rep.kv("error", e.kind)
        if e.witness is not None:
            rep.kv("witness", e.witness)
        return 1
    rep.kv("accepted", True)
    rep.kv("name", alg.name)
    rep.kv("size", alg.size)
    rep.kv("bottom", alg.element(alg.lattice.bottom))
    rep.kv("top", alg.element(alg.lattice.top))
    rep.kv("tilde_one", alg.element(alg.tilde_one) if alg.tilde_one is not None else "-")
    return 0


def cmd_classify(args, rep: Report) -> int:
    try:
        alg = _load_algebra(args.file)
    except (LatticeError, AlgebraError) as e:
        rep.kv("accepted", False)
        rep.kv("error", e.kind)
        return 1
    report = classify_algebra(alg)
    for field in ("is_pba", "is_ccpba", "is_cvcpba", "is_jp_algebra",
                  "is_kim", "is_kim_vee", "tilde_involutive"):
        _flag_report(rep, field, getattr(report, field))
    if alg.tilde is not None:
        kite = classify_negation_pair(alg.lattice, alg.neg, alg.tilde)
        for field in ("preminimal", "quasi_minimal", "minimal", "intuitionistic",
                      "de_morgan", "ortho", "em", "dne_tilde_one"):
            _flag_report(rep, "kite_" + field, getattr(kite, field))
    return 0


def cmd_eval(args, rep: Report) -> int:
    alg = _load_algebra(args.file)
    f = parse_formula(args.formula)
    valuation = _parse_assignment(alg, args.assign or "")
    value = evaluate(alg, f, valuation)
    rep.kv("value", alg.element(value))
    return 0


def cmd_valid(args, rep: Report) -> int:
    alg = _load_algebra(args.file)
    f = parse_formula(args.formula)
    if not args.force:
        if alg.size > GUARD_ALGEBRA:
            raise BoundGuardError("algebra size", GUARD_ALGEBRA, alg.size)
        if len(formula_atoms(f)) > GUARD_ATOMS:
            raise BoundGuardError("formula atoms", GUARD_ATOMS, len(formula_atoms(f)))
    verdict = algebra_valid(alg, f)
    rep.kv("valid", verdict.valid)
    if not verdict.valid:
        assert verdict.valuation is not None
        for k in sorted(verdict.valuation):
            rep.kv(f"witness_{k}", verdict.valuation[k])
        return 1
    return 0


def cmd_enumerate(args, rep: Report) -> int:
    guard = None if args.force else GUARD_ALGEBRA
    catalog = enumerate_algebras(args.cls, args.size, args.allow_trivial, guard)
    exact = [a for a in catalog if a.size == args.size]
    rep.kv("class", args.cls)
    rep.kv("size", args.size)
    rep.kv("count", len(exact))
    rep.kv("count_upto", len(catalog))
    for a in exact:
        rep.kv("algebra", a.name)
    return 0


def cmd_countermodel(args, rep: Report) -> int:
    if args.sequent:
        lhs_t, sep, rhs_t = args.sequent.partition("|-")
        if not sep:
            raise FileFormatError("bad-sequent", args.sequent, "missing |-")
        goal = (parse_formula(lhs_t), parse_formula(rhs_t))
        rep.kv("sequent", f"{render(goal[0])} |- {render(goal[1])}")
    else:
        if not args.formula:
            raise FileFormatError("missing-goal", None)
        goal = parse_formula(args.formula)
        rep.kv("formula", render(goal))
    found = proofs.countermodel_search(args.system, goal, args.max_size,
                                       force=args.force)
    if found is None:
        rep.kv("countermodel", "none")
        rep.kv("note", f"no countermodel up to size {args.max_size}")
        return 0
    alg, valuation = found
    rep.kv("countermodel", alg.name)
    rep.kv("size", alg.size)
    assert valuation is not None
    for k in sorted(valuation):
        rep.kv(f"witness_{k}", valuation[k])
    return 1


def cmd_translate(args, rep: Report) -> int:
    fr = _load_frame(args.file)
    if isinstance(fr, frames.SubNormalFrame):
        out = translate.phi(fr)
        rep.kv("direction", "subnormal->nhat")
        rep.kv("nhat_prime", frames.is_nhat_prime(out))
    elif isinstance(fr, frames.NhatFrame):
        out = translate.psi(fr)
        rep.kv("direction", "nhat->subnormal")
        rep.kv("identity", frames.is_identity(out))
    else:
        raise FileFormatError("unsupported-kind", "compat",
                              "translation is between subnormal and nhat frames")
    _emit(rep, frames.write_frame(out, "translated"), args.output)
    return 0


def cmd_complex(args, rep: Report) -> int:
    fr = _load_frame(args.file)
    if isinstance(fr, frames.SubNormalFrame):
        alg = bridge.complex_algebra_subnormal(fr, name="complex")
        rep.kv("kind", "ccpba")
        rep.kv("size", alg.size)
        _emit(rep, write_algebra(alg), args.output)
    elif isinstance(fr, frames.CompatFrame):
        kim = bridge.complex_algebra_compat(fr, name="complex")
        rep.kv("kind", "kim")
        rep.kv("size", kim.size)
        for i in range(kim.size):
            rep.kv(f"neg_{kim.element(i)}", kim.element(kim.neg[i]))
        for i in range(kim.size):
            rep.kv(f"tilde_{kim.element(i)}", kim.element(kim.tilde[i]))
    else:
        raise FileFormatError("unsupported-kind", "nhat",
                              "complex algebras are taken of subnormal/compat frames")
    return 0


def cmd_canonical(args, rep: Report) -> int:
    alg = _load_algebra(args.file)
    if not args.force and alg.size > GUARD_FILTER_CARRIER:
        raise BoundGuardError("prime-filter carrier", GUARD_FILTER_CARRIER, alg.size)
    try:
        text = bridge.canonical_frame_file(alg, "subnormal")
    except AlgebraError as e:
        rep.kv("accepted", False)
        rep.kv("error", e.kind)
        return 1
    _emit(rep, text, args.output)
    return 0


def cmd_duality(args, rep: Report) -> int:
    if args.file.endswith(".alg"):
        alg = _load_algebra(args.file)
        if not args.force and alg.size > GUARD_FILTER_CARRIER:
            raise BoundGuardError("prime-filter carrier", GUARD_FILTER_CARRIER, alg.size)
        emb = bridge.stone_embedding(alg)
        rep.kv("stone_injective", emb.injective)
        rep.kv("stone_onto", emb.onto)
        rep.kv("stone_isomorphism", emb.is_isomorphism)
        if alg.tilde is not None:
            kemb = bridge.kim_algebra_embedding(alg)
            rep.kv("kim_injective", kemb.injective)
            rep.kv("kim_onto", kemb.onto)
        return 0
    fr = _load_frame(args.file)
    if isinstance(fr, frames.SubNormalFrame):
        emb = bridge.frame_embedding(fr)
    elif isinstance(fr, frames.CompatFrame):
        emb = bridge.kim_frame_embedding(fr)
    else:
        raise FileFormatError("unsupported-kind", "nhat",
                              "duality runs on subnormal/compat frames or .alg files")
    rep.kv("frame_injective", emb.injective)
    rep.kv("frame_onto", emb.onto)
    return 0


def cmd_build_au(args, rep: Report) -> int:
    alg = _load_algebra(args.file)
    parts = args.u.split(",")
    if len(parts) != 2:
        raise FileFormatError("bad-u", args.u, "expected --u a,b")
    try:
        u1 = alg.lattice.index(parts[0].strip())
        u2 = alg.lattice.index(parts[1].strip())
        out = build_au(alg, u1, u2, name=f"{alg.name}_au")
    except AlgebraError as e:
        rep.kv("accepted", False)
        rep.kv("error", e.kind)
        return 1
    rep.kv("size", out.size)
    _emit(rep, write_algebra(out), args.output)
    return 0


def cmd_check_proof(args, rep: Report) -> int:
    if not args.file.endswith(".prf"):
        raise FileFormatError("wrong-extension", args.file, "expected .prf")
    mode, system, obj = proofs.parse_proof(_read_text(args.file))
    rep.kv("mode", mode)
    rep.kv("system", system)
    if mode == "hilbert":
        result = proofs.check_hilbert(system, obj)
        rep.kv("goal", render(obj.goal))
    else:
        result = proofs.check_derivation(system, obj)
        rep.kv("goal", f"{render(obj.lhs)} |- {render(obj.rhs)}")
    rep.kv("accepted", result.ok)
    if not result.ok:
        rep.kv("error", result.error)
        if result.where is not None:
            rep.kv("line", result.where)
        if result.detail:
            rep.kv("detail", result.detail)
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twoneg",
        description="Workbench for finite two-negation algebras, their frames, "
                    "translations, dualities, and proof checking.")
    parser.add_argument("--porcelain", action="store_true",
                        help="machine-readable key=value output")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=fn)
        p.add_argument("--force", action="store_true",
                       help="override search bound guards")
        # accepted after the subcommand as well; SUPPRESS keeps the value the
        # top-level parser already produced when the flag is absent here
        p.add_argument("--porcelain", action="store_true",
                       default=argparse.SUPPRESS)
        return p

    p = add("parse", cmd_parse, "parse a formula and print its tree")
    p.add_argument("formula")

    p = add("check-algebra", cmd_check_algebra, "validate an .alg file")
    p.add_argument("file")

    p = add("classify", cmd_classify, "class flags and kite placement of an .alg file")
    p.add_argument("file")

    p = add("eval", cmd_eval, "evaluate a formula under an assignment")
    p.add_argument("file")
    p.add_argument("formula")
    p.add_argument("--assign", default="", help="p=a,q=0 style element assignment")

    p = add("valid", cmd_valid, "exhaustive validity over an algebra")
    p.add_argument("file")
    p.add_argument("formula")

    p = add("enumerate", cmd_enumerate, "catalog counts up to isomorphism")
    p.add_argument("--class", dest="cls", required=True,
                   choices=list(alg_mod.CATALOG_CLASSES))
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--allow-trivial", action="store_true")

    p = add("countermodel", cmd_countermodel, "search the catalogs for a refuting algebra")
    p.add_argument("--system", required=True, choices=list(proofs.system_names()))
    p.add_argument("--max-size", type=int, required=True)
    p.add_argument("formula", nargs="?")
    p.add_argument("--sequent", help='"lhs |- rhs" goal for the sequent systems')

    p = add("translate", cmd_translate, "translate between subnormal and nhat frames")
    p.add_argument("file")
    p.add_argument("-o", "--output")

    p = add("complex", cmd_complex, "complex algebra of a frame")
    p.add_argument("file")
    p.add_argument("-o", "--output")

    p = add("canonical", cmd_canonical, "canonical frame of an algebra")
    p.add_argument("file")
    p.add_argument("-o", "--output")

    p = add("duality", cmd_duality, "verify the round-trip embeddings")
    p.add_argument("file")

    p = add("build-au", cmd_build_au, "interval construction over a pBa")
    p.add_argument("file")
    p.add_argument("--u", required=True, help="u1,u2 with u1 <= u2")
    p.add_argument("-o", "--output")

    p = add("check-proof", cmd_check_proof, "check a .prf proof file")
    p.add_argument("file")

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    rep = Report(args.porcelain)
    try:
        return args.func(args, rep)
    except BoundGuardError as e:
        rep.kv("error", "bound-guard")
        rep.kv("detail", str(e))
        return 3
    except (FormulaSyntaxError, FileFormatError) as e:
        rep.kv("error", e.kind)
        rep.kv("detail", str(e))
        return 2
    except WorkbenchError as e:
        rep.kv("error", e.kind)
        rep.kv("detail", str(e))
        return 2


if __name__ == "__main__":
    sys.exit(main())
