"""Command-line interface.

Exit codes: 0 pass, 1 a check failed, 2 parse or input error, 3 precondition violated.
``FILE`` may be a path or ``@name`` for a bundled corpus file (``@ex1``).
"""

from __future__ import annotations

import argparse
import os
import sys
from importlib import resources
from pathlib import Path
from typing import Optional, Sequence

from . import report as rp
from .algebra import (
    TripleTable,
    check_derived_identities,
    check_leibniz,
    check_leibts,
    check_lie_triple,
)
from .envelope import build_envelope, check_envelope, check_theta, envelope_K
from .errors import InputError, LeibtsError, ParseError, PreconditionError, UnsupportedInputError
from .fileformat import Block, parse_document, parse_expression, serialize_algebra
from .ideals import big_I, big_J, ideal_closure, small_i, small_j
from .linalg import span
from .radicals import (
    check_levi,
    derived_series,
    is_semisimple,
    lower_central_series,
    nilpotent_radical,
    run_theorem_suite,
    solvable_radical,
)
from .representations import (
    RepTriple,
    R_structure_checks,
    check_representation,
    compute_Z,
    power_identities,
)

EXIT_PASS, EXIT_FAIL, EXIT_PARSE, EXIT_PRECONDITION = 0, 1, 2, 3


class _Input:
    def __init__(self, spec: str, systems: Optional[dict] = None):
        self.spec = spec
        self.data = _read(spec)
        try:
            text = self.data.decode("utf-8")
        except UnicodeDecodeError:
            raise ParseError("input is not UTF-8 text") from None
        self.blocks = parse_document(text, systems)

    @property
    def last(self) -> Block:
        return self.blocks[-1]

    def system(self) -> tuple[str, TripleTable]:
        for b in reversed(self.blocks):
            if b.kind == "system":
                return b.name, b.obj
        raise ParseError(f"{self.spec}: no system block")


def corpus_path(name: str):
    return resources.files("leibts").joinpath("data").joinpath(f"{name}.lts")


def _read(spec: str) -> bytes:
    if spec.startswith("@"):
        res = corpus_path(spec[1:])
        if not res.is_file():
            raise ParseError(f"no bundled file {spec[1:]!r}")
        return res.read_bytes()
    try:
        return Path(spec).read_bytes()
    except OSError as e:
        raise ParseError(f"cannot read {spec}: {e.strerror}") from None


def _vectors(arg: str, labels: Sequence[str]) -> list:
    """Comma-separated expressions such as ``x,y+2*z``; empty means no vectors."""
    arg = arg.strip()
    if not arg:
        return []
    return [parse_expression(part, labels) for part in arg.split(",")]


# ---------------------------------------------------------------------------
# Commands; each returns (passed, findings)


def cmd_check(args) -> tuple[bool, dict]:
    inp = _Input(args.file, _corpus_systems())
    b = inp.last
    if b.kind == "system":
        r = check_leibts(b.obj)
        findings = {"kind": "system", "name": b.name, "dim": b.obj.dim, "leibts": rp.validation(r)}
        if r.passed:
            findings["derived_identities"] = check_derived_identities(b.obj).passed
        findings["lie_triple"] = check_lie_triple(b.obj).passed
        return r.passed, findings
    if b.kind == "algebra":
        r = check_leibniz(b.obj)
        return r.passed, {"kind": "algebra", "name": b.name, "dim": b.obj.dim,
                          "leibniz": rp.validation(r)}
    r = check_representation(b.obj)
    return r.passed, {"kind": "rep", "name": b.name, "vdim": b.obj.vdim,
                      "representation": rp.validation(r)}


def cmd_envelope(args) -> tuple[bool, dict]:
    name, t = _Input(args.file).system()
    u = build_envelope(t)
    r = check_envelope(u)
    th = check_theta(u)
    names = u.bracket.names
    grading = (names[: u.n], names[u.n:])
    text = serialize_algebra(u.bracket, f"U_{name}", grading)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    findings = {
        "system": name,
        "dim": u.dim,
        "relations_dim": u.relations.dim,
        "K_dim": envelope_K(u).dim,
        "envelope": rp.validation(r),
        "theta": rp.validation(th),
    }
    if not args.out:
        findings["algebra"] = text.splitlines()
    return r.passed and th.passed, findings


def cmd_radical(args) -> tuple[bool, dict]:
    name, t = _Input(args.file).system()
    bundle = solvable_radical(t)
    findings = {
        "system": name,
        "R": rp.subspace(bundle.R, t.names),
        "Ker": rp.subspace(bundle.KerT, t.names),
    }
    try:
        findings["N"] = rp.subspace(nilpotent_radical(t, bundle=bundle).N, t.names)
        passed = True
    except UnsupportedInputError as e:
        findings["N"] = None
        findings["N_error"] = str(e)
        passed = False
    findings["semisimple"] = is_semisimple(t)
    return passed, findings


def cmd_series(args) -> tuple[bool, dict]:
    name, t = _Input(args.file).system()
    I = None if args.ideal is None else span(_vectors(args.ideal, t.names), t.dim)
    fn = derived_series if args.kind == "derived" else lower_central_series
    tr = fn(t, I)
    return True, {"system": name, "series": rp.series(tr)}


def cmd_ideal(args) -> tuple[bool, dict]:
    name, t = _Input(args.file).system()
    gens = _vectors(args.gens, t.names)
    I = ideal_closure(t, gens)
    u = build_envelope(t)
    return True, {
        "system": name,
        "closure": rp.subspace(I, t.names),
        "i": rp.subspace(small_i(t, I), u.bracket.names),
        "j": rp.subspace(small_j(t, I), u.bracket.names),
        "I": rp.subspace(big_I(t, I), u.bracket.names),
        "J": rp.subspace(big_J(t, I), u.bracket.names),
    }


def cmd_levi(args) -> tuple[bool, dict]:
    name, t = _Input(args.file).system()
    S = span(_vectors(args.subsystem, t.names), t.dim)
    r = check_levi(t, S)
    return r.passed, {"system": name, "S": rp.subspace(S, t.names), "levi": rp.validation(r)}


def cmd_rep_check(args) -> tuple[bool, dict]:
    systems = _corpus_systems()
    if args.system:
        for b in _Input(args.system, systems).blocks:
            if b.kind == "system":
                systems[b.name] = b.obj
    inp = _Input(args.file, systems)
    b = inp.last
    if b.kind != "rep":
        raise ParseError(f"{args.file}: last block is not a rep block")
    rep: RepTriple = b.obj
    r = check_representation(rep)
    findings = {"rep": b.name, "over": b.over, "vdim": rep.vdim, "representation": rp.validation(r)}
    passed = r.passed
    if r.passed:
        pw, rs = power_identities(rep), R_structure_checks(rep)
        findings["power_identities"] = rp.validation(pw)
        findings["R_structure"] = rp.validation(rs)
        findings["Z"] = rp.subspace(compute_Z(rep), rep.base.names)
        passed = pw.passed and rs.passed
    return passed, findings


def cmd_suite(args) -> tuple[bool, dict]:
    name, t = _Input(args.file).system()
    r = run_theorem_suite(t, include_nilradical=not args.skip_nilradical)
    return r.passed, {"system": name, "suite": rp.validation(r)}


def _corpus_systems() -> dict:
    out = {}
    for entry in resources.files("leibts").joinpath("data").iterdir():
        if entry.name.endswith(".lts"):
            try:
                for b in parse_document(entry.read_text(encoding="utf-8")):
                    if b.kind == "system":
                        out.setdefault(b.name, b.obj)
            except ParseError:
                continue
    return out


COMMANDS = {
    "check": cmd_check,
    "envelope": cmd_envelope,
    "radical": cmd_radical,
    "series": cmd_series,
    "ideal": cmd_ideal,
    "levi": cmd_levi,
    "rep-check": cmd_rep_check,
    "suite": cmd_suite,
}


def build_parser() -> argparse.ArgumentParser:
    default = os.environ.get("TK_REPORT", "text")
    if default not in ("json", "text"):
        default = "text"
    p = argparse.ArgumentParser(prog="leibts", description="Exact computations with Leibniz triple systems.")
    p.add_argument("--report", choices=("json", "text"), default=default,
                   help="output format (default from TK_REPORT, else text)")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("file", help="input file, or @name for a bundled corpus file")
        sp.add_argument("--report", choices=("json", "text"), default=argparse.SUPPRESS)
        return sp

    add("check", "verify the defining identities")
    sp = add("envelope", "build the universal Leibniz envelope")
    sp.add_argument("--out", help="write the envelope as an algebra file")
    add("radical", "solvable radical, kernel, nilpotent radical, semisimplicity")
    sp = add("series", "derived or lower central series")
    sp.add_argument("--kind", choices=("derived", "lower"), required=True)
    sp.add_argument("--ideal", help="comma-separated spanning vectors of the ideal (default: T)")
    sp = add("ideal", "ideal closure and its envelope companions")
    sp.add_argument("--gens", required=True, help="comma-separated generators, e.g. x,y+2*z")
    sp = add("levi", "verify a Levi complement")
    sp.add_argument("--subsystem", required=True, help="comma-separated spanning vectors ('' for 0)")
    sp = add("rep-check", "verify a representation")
    sp.add_argument("--system", help="file supplying the system named in 'over'")
    sp = add("suite", "instantiate the structure theorems on the ideal inventory")
    sp.add_argument("--skip-nilradical", action="store_true")
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_PARSE if e.code else EXIT_PASS
    fmt = args.report
    data = b""
    try:
        data = _read(args.file)
        passed, findings = COMMANDS[args.command](args)
        code = EXIT_PASS if passed else EXIT_FAIL
    except ParseError as e:
        passed, findings, code = False, {"error": "parse", "message": str(e)}, EXIT_PARSE
    except InputError as e:
        passed, findings, code = False, {"error": "input", "message": str(e)}, EXIT_PARSE
    except PreconditionError as e:
        passed, findings, code = False, {"error": "precondition", "message": str(e)}, EXIT_PRECONDITION
    except LeibtsError as e:
        passed, findings, code = False, {"error": type(e).__name__, "message": str(e)}, EXIT_FAIL
    out = rp.make(args.command, data, passed, findings)
    sys.stdout.write(rp.to_json(out) if fmt == "json" else rp.to_text(out))
    return code


if __name__ == "__main__":
    sys.exit(main())
