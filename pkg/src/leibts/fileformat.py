"""Line-oriented text format for triple systems, Leibniz algebras and representations.

::

    # comment
    system ex1
    dim 2
    basis x y
    prod x y y = x
    prod y y y = x
    end

    algebra sl2
    dim 3
    basis h e f
    brk h e = 2*e
    odd h          # optional grading annotation
    even e f
    end

    rep reg over ex1
    vdim 2
    vbasis u w
    l x y w = u    # l(x, y) w = u; likewise m and r
    end

Coefficients are ``p``, ``-p`` or ``p/q``; ``label`` alone means coefficient 1.
Omitted lines are zero.  :func:`serialize` emits the canonical form, for
which ``serialize(parse(text)) == text``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iproduct
from typing import Mapping, Optional, Sequence

from .algebra import BinaryTable, TripleTable
from .errors import InputError, ParseError
from .linalg import Mat, _norm
from .representations import RepTriple

LABEL = re.compile(r"[A-Za-z_][A-Za-z0-9_.']*\Z")
RATIONAL = re.compile(r"-?\d+(/\d+)?\Z")


@dataclass(frozen=True)
class Block:
    kind: str  # system | algebra | rep
    name: str
    obj: object
    line: int
    grading: Optional[tuple] = None  # (odd labels, even labels) for annotated algebras
    over: Optional[str] = None


def parse_rational(tok: str, line: Optional[int] = None):
    tok = tok.strip()
    if not RATIONAL.match(tok):
        raise ParseError(f"malformed rational {tok!r}", line)
    if "/" in tok:
        p, q = tok.split("/")
        if int(q) == 0:
            raise ParseError(f"zero denominator in {tok!r}", line)
        return _norm(Fraction(int(p), int(q)))
    return int(tok)


def format_rational(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_expression(expr: str, labels: Sequence[str], line: Optional[int] = None) -> tuple:
    """``1/2*x + -3*y`` as a coordinate vector over ``labels``; ``0`` is the zero vector."""
    index = {lab: i for i, lab in enumerate(labels)}
    vec = [0] * len(labels)
    expr = expr.strip()
    if not expr:
        raise ParseError("empty expression", line)
    if expr == "0":
        return tuple(vec)
    seen = set()
    for term in expr.split("+"):
        term = term.strip()
        if not term:
            raise ParseError("empty term", line)
        if "*" in term:
            coeff_tok, lab = (s.strip() for s in term.split("*", 1))
            coeff = parse_rational(coeff_tok, line)
        elif term.startswith("-"):
            coeff, lab = -1, term[1:].strip()
        else:
            coeff, lab = 1, term
        if lab not in index:
            raise ParseError(f"unknown label {lab!r}", line)
        if lab in seen:
            raise ParseError(f"label {lab!r} repeated in expression", line)
        seen.add(lab)
        vec[index[lab]] = coeff
    return tuple(_norm(x) for x in vec)


def format_expression(vec: Sequence, labels: Sequence[str]) -> str:
    terms = []
    for x, lab in zip(vec, labels):
        if not x:
            continue
        if x == 1:
            terms.append(lab)
        elif x == -1:
            terms.append(f"-{lab}")
        else:
            terms.append(f"{format_rational(x)}*{lab}")
    return " + ".join(terms) if terms else "0"


def _strip(raw: str) -> str:
    return raw.split("#", 1)[0].strip()


def _labels(words: Sequence[str], line: int) -> tuple:
    for w in words:
        if not LABEL.match(w):
            raise ParseError(f"invalid label {w!r}", line)
    if len(set(words)) != len(words):
        raise ParseError("repeated basis label", line)
    return tuple(words)


class _BlockParser:
    def __init__(self, kind: str, name: str, line: int, over: Optional[str] = None):
        self.kind, self.name, self.start, self.over = kind, name, line, over
        self.dim: Optional[int] = None
        self.basis: Optional[tuple] = None
        self.entries: dict = {}
        self.odd: Optional[tuple] = None
        self.even: Optional[tuple] = None

    def need_basis(self, line: int, word: str) -> tuple:
        if self.basis is None:
            raise ParseError(f"'{word}' before '{'vbasis' if self.kind == 'rep' else 'basis'}'", line)
        return self.basis

    def feed(self, words: list, text: str, line: int, base: Optional[TripleTable]) -> None:
        head = words[0]
        dim_word, basis_word = ("vdim", "vbasis") if self.kind == "rep" else ("dim", "basis")
        if head == dim_word:
            if self.dim is not None:
                raise ParseError(f"duplicate '{dim_word}'", line)
            if len(words) != 2 or not words[1].isdigit():
                raise ParseError(f"'{dim_word}' expects a nonnegative integer", line)
            self.dim = int(words[1])
        elif head == basis_word:
            if self.dim is None:
                raise ParseError(f"'{basis_word}' before '{dim_word}'", line)
            if self.basis is not None:
                raise ParseError(f"duplicate '{basis_word}'", line)
            labels = _labels(words[1:], line)
            if len(labels) != self.dim:
                raise ParseError(f"{len(labels)} labels for dimension {self.dim}", line)
            if self.kind == "rep" and base is not None and set(labels) & set(base.names):
                raise ParseError("module labels clash with system labels", line)
            self.basis = labels
        elif self.kind == "system" and head == "prod":
            self._entry(text, line, 3, self.need_basis(line, head), self.need_basis(line, head))
        elif self.kind == "algebra" and head == "brk":
            self._entry(text, line, 2, self.need_basis(line, head), self.need_basis(line, head))
        elif self.kind == "algebra" and head in ("odd", "even"):
            labels = _labels(words[1:], line)
            for lab in labels:
                if lab not in self.need_basis(line, head):
                    raise ParseError(f"unknown label {lab!r}", line)
            if getattr(self, head) is not None:
                raise ParseError(f"duplicate '{head}'", line)
            setattr(self, head, labels)
        elif self.kind == "rep" and head in ("l", "m", "r"):
            vb = self.need_basis(line, head)
            lhs, _, rhs = text.partition("=")
            keys = lhs.split()[1:]
            if len(keys) != 3 or not _:
                raise ParseError(f"'{head}' expects 'a b v = expression'", line)
            a, b, v = keys
            for lab in (a, b):
                if lab not in base.names:
                    raise ParseError(f"unknown label {lab!r}", line)
            if v not in vb:
                raise ParseError(f"unknown label {v!r}", line)
            key = (head, base.names.index(a), base.names.index(b), vb.index(v))
            if key in self.entries:
                raise ParseError("duplicate line", line)
            self.entries[key] = parse_expression(rhs, vb, line)
        else:
            raise ParseError(f"unexpected '{head}' in {self.kind} block", line)

    def _entry(self, text: str, line: int, arity: int, labels, out_labels) -> None:
        lhs, eq, rhs = text.partition("=")
        keys = lhs.split()[1:]
        if not eq or len(keys) != arity:
            raise ParseError(f"expected {arity} labels, '=', expression", line)
        for k in keys:
            if k not in labels:
                raise ParseError(f"unknown label {k!r}", line)
        key = tuple(labels.index(k) for k in keys)
        if key in self.entries:
            raise ParseError("duplicate line", line)
        self.entries[key] = parse_expression(rhs, out_labels, line)

    def finish(self, line: int, base: Optional[TripleTable]) -> Block:
        if self.dim is None or (self.basis is None and self.dim > 0):
            raise ParseError(f"{self.kind} '{self.name}' lacks a dimension or basis", line)
        basis = self.basis or ()
        if self.kind == "system":
            obj = TripleTable.from_products(basis, {k: v for k, v in self.entries.items() if any(v)})
            return Block("system", self.name, obj, self.start)
        if self.kind == "algebra":
            obj = BinaryTable.from_brackets(basis, {k: v for k, v in self.entries.items() if any(v)})
            grading = None
            if self.odd is not None or self.even is not None:
                grading = (self.odd or (), self.even or ())
                if set(grading[0]) & set(grading[1]):
                    raise ParseError("a label is both odd and even", line)
            return Block("algebra", self.name, obj, self.start, grading)
        d = self.dim
        maps = {fam: {} for fam in ("l", "m", "r")}
        cols: dict = {}
        for (fam, a, b, v), vec in self.entries.items():
            cols.setdefault((fam, a, b), {})[v] = vec
        for (fam, a, b), by_v in cols.items():
            columns = [by_v.get(v, (0,) * d) for v in range(d)]
            maps[fam][(a, b)] = Mat.from_columns(columns, d)
        rep = RepTriple.build(base, basis, maps["l"], maps["m"], maps["r"])
        return Block("rep", self.name, rep, self.start, over=self.over)


def parse_document(text: str, systems: Optional[Mapping[str, TripleTable]] = None) -> list[Block]:
    """All blocks of a file, in order.  ``rep`` blocks resolve ``over`` against earlier blocks, then ``systems``."""
    blocks: list[Block] = []
    known: dict = dict(systems or {})
    current: Optional[_BlockParser] = None
    base: Optional[TripleTable] = None
    last = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        last = lineno
        body = _strip(raw)
        if not body:
            continue
        words = body.split()
        head = words[0]
        if current is None:
            if head in ("system", "algebra") and len(words) == 2:
                if not LABEL.match(words[1]):
                    raise ParseError(f"invalid name {words[1]!r}", lineno)
                current = _BlockParser(head, words[1], lineno)
            elif head == "rep" and len(words) == 4 and words[2] == "over":
                if words[3] not in known:
                    raise ParseError(f"unknown system {words[3]!r}", lineno)
                base = known[words[3]]
                current = _BlockParser("rep", words[1], lineno, over=words[3])
            else:
                raise ParseError(f"expected a block header, got {head!r}", lineno)
            continue
        if head == "end":
            if len(words) != 1:
                raise ParseError("'end' takes no arguments", lineno)
            block = current.finish(lineno, base)
            if block.kind == "system":
                known[block.name] = block.obj
            blocks.append(block)
            current, base = None, None
            continue
        if head in ("system", "algebra", "rep"):
            raise ParseError(f"missing 'end' before new {head} block", lineno)
        current.feed(words, body, lineno, base)
    if current is not None:
        raise ParseError(f"missing 'end' for {current.kind} '{current.name}'", last or 1)
    if not blocks:
        raise ParseError("no blocks found", last or 1)
    return blocks


def parse(text: str, systems: Optional[Mapping[str, TripleTable]] = None):
    """The object defined by the last block: a TripleTable, BinaryTable or RepTriple."""
    return parse_document(text, systems)[-1].obj


# ---------------------------------------------------------------------------
# Serialization


def _header(kind: str, name: str, over: Optional[str] = None) -> str:
    if not LABEL.match(name):
        raise InputError(f"invalid name {name!r}")
    return f"{kind} {name}" + (f" over {over}" if over else "")


def serialize_system(t: TripleTable, name: str) -> str:
    lines = [_header("system", name), f"dim {t.dim}"]
    if t.dim:
        lines.append("basis " + " ".join(t.names))
    for (i, j, k), vec in t.entries:
        lines.append(f"prod {t.names[i]} {t.names[j]} {t.names[k]} = "
                     + format_expression(vec, t.names))
    lines.append("end")
    return "\n".join(lines) + "\n"


def serialize_algebra(b: BinaryTable, name: str, grading: Optional[tuple] = None) -> str:
    lines = [_header("algebra", name), f"dim {b.dim}"]
    if b.dim:
        lines.append("basis " + " ".join(b.names))
    for (i, j), vec in b.entries:
        lines.append(f"brk {b.names[i]} {b.names[j]} = " + format_expression(vec, b.names))
    if grading is not None:
        odd, even = grading
        if odd:
            lines.append("odd " + " ".join(odd))
        if even:
            lines.append("even " + " ".join(even))
    lines.append("end")
    return "\n".join(lines) + "\n"


def serialize_rep(rep: RepTriple, name: str, over: str, *, with_system: bool = True) -> str:
    out = serialize_system(rep.base, over) + "\n" if with_system else ""
    lines = [_header("rep", name, over), f"vdim {rep.vdim}"]
    if rep.vdim:
        lines.append("vbasis " + " ".join(rep.vnames))
    names = rep.base.names
    for fam in ("l", "m", "r"):
        g = rep.family(fam)
        for a, b in iproduct(range(rep.n), repeat=2):
            op = g[a][b]
            if op.is_zero:
                continue
            for v in range(rep.vdim):
                col = op.column(v)
                if any(col):
                    lines.append(f"{fam} {names[a]} {names[b]} {rep.vnames[v]} = "
                                 + format_expression(col, rep.vnames))
    lines.append("end")
    return out + "\n".join(lines) + "\n"


def serialize(obj, name: str = "t", *, over: str = "base", grading: Optional[tuple] = None) -> str:
    if isinstance(obj, TripleTable):
        return serialize_system(obj, name)
    if isinstance(obj, BinaryTable):
        return serialize_algebra(obj, name, grading)
    if isinstance(obj, RepTriple):
        return serialize_rep(obj, name, over)
    raise InputError(f"cannot serialize {type(obj).__name__}")


def serialize_document(blocks: Sequence[Block]) -> str:
    """Canonical text for parsed blocks; rep blocks rely on their system appearing earlier."""
    parts = []
    for b in blocks:
        if b.kind == "system":
            parts.append(serialize_system(b.obj, b.name))
        elif b.kind == "algebra":
            parts.append(serialize_algebra(b.obj, b.name, b.grading))
        else:
            parts.append(serialize_rep(b.obj, b.name, b.over, with_system=False))
    return "\n".join(parts)


__all__ = [
    "Block",
    "format_expression",
    "format_rational",
    "parse",
    "parse_document",
    "parse_expression",
    "parse_rational",
    "serialize",
    "serialize_algebra",
    "serialize_document",
    "serialize_rep",
    "serialize_system",
]
